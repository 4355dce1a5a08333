#include "gid/profile.hpp"

#include "gid/error.hpp"

namespace gid {

namespace {

std::uint64_t bit(Individual a) { return std::uint64_t{1} << a; }

bool allowed(ProfileKind kind, Cell c)
{
    switch (c) {
    case Cell::Neg:
    case Cell::Pos: return true;
    case Cell::Indifferent: return kind == ProfileKind::Ternary;
    case Cell::Unknown: return kind == ProfileKind::Partial;
    }
    return false;
}

} // namespace

const char* to_string(ProfileKind kind)
{
    switch (kind) {
    case ProfileKind::Binary: return "binary";
    case ProfileKind::Ternary: return "ternary";
    case ProfileKind::Partial: return "partial";
    }
    return "?";
}

char cell_char(Cell c)
{
    switch (c) {
    case Cell::Pos: return '+';
    case Cell::Neg: return '-';
    case Cell::Indifferent: return '*';
    case Cell::Unknown: return '?';
    }
    return '!';
}

std::string default_name(Individual a) { return "a" + std::to_string(a + 1); }

Profile::Profile(int n, ProfileKind kind) : n_(n), kind_(kind)
{
    if (n < 0 || n > kMaxIndividuals)
        throw Error(Errc::IndexOutOfRange, "profile size " + std::to_string(n) + " outside [0, 64]");
    std::uint64_t all = IndividualSet::first(n).bits();
    rows_.assign(static_cast<std::size_t>(n), Masks{0, all});
    cols_.assign(static_cast<std::size_t>(n), Masks{0, all});
    names_.reserve(static_cast<std::size_t>(n));
    for (Individual a = 0; a < n; ++a)
        names_.push_back(default_name(a));
}

Profile Profile::from_rows(ProfileKind kind, const std::vector<std::vector<Cell>>& rows,
                           std::vector<std::string> names)
{
    Profile p(static_cast<int>(rows.size()), kind);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != rows.size())
            throw Error(Errc::IndexOutOfRange, "row " + std::to_string(a + 1) + " has wrong length");
        for (std::size_t b = 0; b < rows.size(); ++b)
            p.set(static_cast<Individual>(a), static_cast<Individual>(b), rows[a][b]);
    }
    if (!names.empty())
        p.set_names(std::move(names));
    return p;
}

void Profile::check_index(Individual a) const
{
    if (a < 0 || a >= n_)
        throw Error(Errc::IndexOutOfRange, "individual " + std::to_string(a) + " not in profile of size " +
                                               std::to_string(n_));
}

Cell Profile::at(Individual from, Individual to) const
{
    check_index(from);
    check_index(to);
    const Masks& r = rows_[static_cast<std::size_t>(from)];
    if ((r.known & bit(to)) == 0)
        return kind_ == ProfileKind::Ternary ? Cell::Indifferent : Cell::Unknown;
    return (r.pos & bit(to)) != 0 ? Cell::Pos : Cell::Neg;
}

void Profile::set(Individual from, Individual to, Cell value)
{
    check_index(from);
    check_index(to);
    if (!allowed(kind_, value))
        throw Error(Errc::WrongKind, std::string("cell '") + cell_char(value) + "' not allowed in " +
                                         to_string(kind_) + " profile");
    Masks& r = rows_[static_cast<std::size_t>(from)];
    Masks& c = cols_[static_cast<std::size_t>(to)];
    r.pos &= ~bit(to);
    r.known &= ~bit(to);
    c.pos &= ~bit(from);
    c.known &= ~bit(from);
    if (value == Cell::Pos || value == Cell::Neg) {
        r.known |= bit(to);
        c.known |= bit(from);
    }
    if (value == Cell::Pos) {
        r.pos |= bit(to);
        c.pos |= bit(from);
    }
}

void Profile::set_row(Individual from, IndividualSet positives)
{
    check_index(from);
    for (Individual b = 0; b < n_; ++b)
        set(from, b, positives.contains(b) ? Cell::Pos : Cell::Neg);
}

IndividualSet Profile::qualified_by(Individual from) const
{
    check_index(from);
    return IndividualSet::from_bits(rows_[static_cast<std::size_t>(from)].pos);
}

IndividualSet Profile::disqualified_by(Individual from) const
{
    check_index(from);
    const Masks& r = rows_[static_cast<std::size_t>(from)];
    return IndividualSet::from_bits(r.known & ~r.pos);
}

IndividualSet Profile::undecided_in_row(Individual from) const
{
    check_index(from);
    return everyone() - IndividualSet::from_bits(rows_[static_cast<std::size_t>(from)].known);
}

IndividualSet Profile::qualifiers(Individual to) const
{
    check_index(to);
    return IndividualSet::from_bits(cols_[static_cast<std::size_t>(to)].pos);
}

IndividualSet Profile::disqualifiers(Individual to) const
{
    check_index(to);
    const Masks& c = cols_[static_cast<std::size_t>(to)];
    return IndividualSet::from_bits(c.known & ~c.pos);
}

IndividualSet Profile::undecided_in_column(Individual to) const
{
    check_index(to);
    return everyone() - IndividualSet::from_bits(cols_[static_cast<std::size_t>(to)].known);
}

const std::string& Profile::name(Individual a) const
{
    check_index(a);
    return names_[static_cast<std::size_t>(a)];
}

std::optional<Individual> Profile::find(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<Individual>(i);
    return std::nullopt;
}

void Profile::set_names(std::vector<std::string> names)
{
    if (names.size() != static_cast<std::size_t>(n_))
        throw Error(Errc::IndexOutOfRange, "name list length differs from profile size");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw Error(Errc::InvalidArgument, "empty individual name");
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j])
                throw Error(Errc::InvalidArgument, "duplicate individual name " + names[i]);
    }
    names_ = std::move(names);
}

bool operator==(const Profile& a, const Profile& b)
{
    if (a.n_ != b.n_ || a.kind_ != b.kind_ || a.names_ != b.names_)
        return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        if (a.rows_[i].pos != b.rows_[i].pos || a.rows_[i].known != b.rows_[i].known)
            return false;
    return true;
}

Profile negate(const Profile& profile)
{
    if (profile.kind() != ProfileKind::Binary)
        throw Error(Errc::RuleNotApplicable, "negation is defined for binary profiles only");
    Profile out = profile;
    for (Individual a = 0; a < profile.size(); ++a)
        out.set_row(a, profile.disqualified_by(a));
    return out;
}

std::size_t QualificationGraph::edge_count() const
{
    std::size_t m = 0;
    for (IndividualSet s : out)
        m += static_cast<std::size_t>(s.size());
    return m;
}

bool QualificationGraph::has_edge(Individual from, Individual to) const
{
    return from >= 0 && from < n && out[static_cast<std::size_t>(from)].contains(to);
}

std::vector<std::pair<Individual, Individual>> QualificationGraph::edges() const
{
    std::vector<std::pair<Individual, Individual>> e;
    for (Individual a = 0; a < n; ++a)
        for (Individual b : out[static_cast<std::size_t>(a)])
            e.emplace_back(a, b);
    return e;
}

QualificationGraph qualification_graph(const Profile& profile)
{
    if (profile.kind() != ProfileKind::Binary)
        throw Error(Errc::RuleNotApplicable, "qualification graph needs a binary profile");
    QualificationGraph g;
    g.n = profile.size();
    for (Individual a = 0; a < g.n; ++a)
        g.out.push_back(profile.qualified_by(a));
    return g;
}

bool is_r_profile(const Profile& profile, int r)
{
    if (profile.kind() != ProfileKind::Binary)
        return false;
    for (Individual a = 0; a < profile.size(); ++a)
        if (profile.qualified_by(a).size() != r)
            return false;
    return true;
}

} // namespace gid
