#include "gid/partial.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "gid/error.hpp"
#include "gid/flow.hpp"

namespace gid {

namespace {

void check_query(const Profile& p, IndividualSet s, const SocialRule& rule)
{
    if (p.kind() == ProfileKind::Ternary)
        throw Error(Errc::WrongKind, "extension queries need a partial or binary profile");
    if (s.empty())
        throw Error(Errc::PreconditionViolated, "query set must be nonempty");
    if (!s.is_subset_of(p.everyone()))
        throw Error(Errc::IndexOutOfRange, "query set outside N");
    check_applicable(rule, Profile(p.size()));
}

// Extensions are binary, so a ternary rule acts as consent(s,t).
std::optional<std::pair<int, int>> consent_quotas(const SocialRule& rule)
{
    if (const Consent* c = rule.as_consent())
        return std::pair{c->s, c->t};
    if (const Ternary* t = rule.as_ternary())
        return std::pair{t->s, t->t};
    return std::nullopt;
}

bool consent_qualifies(Cell self, int pos, int neg, int s, int t)
{
    return self == Cell::Pos ? pos >= s : neg < t;
}

ExtensionAnswer extend(const Profile& p, IndividualSet s, const SocialRule& rule, bool optimistic)
{
    check_query(p, s, rule);
    const int n = p.size();
    Profile ext(n);
    ext.set_names(p.names());
    const Cell favour = optimistic ? Cell::Pos : Cell::Neg;
    const auto quotas = consent_quotas(rule);

    for (Individual a = 0; a < n; ++a)
        for (Individual b = 0; b < n; ++b) {
            Cell c = p.at(a, b);
            if (c != Cell::Unknown)
                ext.set(a, b, c);
            else if (!quotas)
                ext.set(a, b, favour);
            else
                ext.set(a, b, s.contains(b) && a != b ? favour : Cell::Neg);
        }

    if (quotas) {
        auto [sq, tq] = *quotas;
        for (Individual a : s) {
            if (p.at(a, a) != Cell::Unknown)
                continue;
            int pos = (ext.qualifiers(a) - IndividualSet::single(a)).size();
            int neg = n - 1 - pos;
            bool with_pos = consent_qualifies(Cell::Pos, pos + 1, neg, sq, tq);
            bool with_neg = consent_qualifies(Cell::Neg, pos, neg + 1, sq, tq);
            Cell pick = favour;
            if (optimistic && !with_pos && with_neg)
                pick = Cell::Neg;
            if (!optimistic && with_neg && !with_pos)
                pick = Cell::Pos;
            ext.set(a, a, pick);
        }
    }
    bool ok = s.is_subset_of(eval(rule, ext.everyone(), ext));
    return ExtensionAnswer{ok, std::move(ext)};
}

struct RowCounts {
    std::vector<int> known_pos;
    std::vector<int> unknown;
};

RowCounts row_counts(const Profile& p)
{
    RowCounts rc;
    for (Individual a = 0; a < p.size(); ++a) {
        rc.known_pos.push_back(p.qualified_by(a).size());
        rc.unknown.push_back(p.undecided_in_row(a).size());
    }
    return rc;
}

// Can every member of S be qualified once the unknown diagonal entries of S
// are fixed to `diag`? All remaining constraints are lower bounds on column
// positives, so a flow saturating them extends to a full r-profile.
bool flow_feasible(const Profile& p, IndividualSet s, int r, int sq, int tq, const RowCounts& rc,
                   const std::map<Individual, Cell>& diag)
{
    const int n = p.size();
    std::vector<std::int64_t> cap(static_cast<std::size_t>(n));
    for (Individual b = 0; b < n; ++b) {
        auto ub = static_cast<std::size_t>(b);
        int used = 0, lost = 0;
        if (auto it = diag.find(b); it != diag.end())
            (it->second == Cell::Pos ? used : lost) = 1;
        cap[ub] = r - rc.known_pos[ub] - used;
        if (cap[ub] < 0 || rc.unknown[ub] - used - lost < cap[ub])
            return false;
    }

    FlowNetwork net;
    std::vector<int> row_vertex(static_cast<std::size_t>(n));
    for (Individual b = 0; b < n; ++b) {
        row_vertex[static_cast<std::size_t>(b)] = net.add_vertex();
        net.add_arc(net.source, row_vertex[static_cast<std::size_t>(b)], cap[static_cast<std::size_t>(b)]);
    }
    std::int64_t total = 0;
    for (Individual a : s) {
        Cell self = p.at(a, a);
        int have = p.qualifiers(a).size();
        if (auto it = diag.find(a); it != diag.end()) {
            self = it->second;
            have += self == Cell::Pos;
        }
        int need = self == Cell::Pos ? sq : n - tq + 1;
        std::int64_t demand = std::max(0, need - have);
        int col = net.add_vertex();
        for (Individual b : p.undecided_in_column(a))
            if (b != a)
                net.add_arc(row_vertex[static_cast<std::size_t>(b)], col, 1);
        net.add_arc(col, net.sink, demand);
        total += demand;
    }
    return max_flow(net).value == total;
}

} // namespace

ExtensionAnswer pqi_extension(const Profile& p, IndividualSet s, const SocialRule& rule)
{
    return extend(p, s, rule, true);
}

bool pqi(const Profile& p, IndividualSet s, const SocialRule& rule) { return pqi_extension(p, s, rule).answer; }

ExtensionAnswer nqi_extension(const Profile& p, IndividualSet s, const SocialRule& rule)
{
    return extend(p, s, rule, false);
}

bool nqi(const Profile& p, IndividualSet s, const SocialRule& rule) { return nqi_extension(p, s, rule).answer; }

void check_r_extendable(const Profile& p, int r)
{
    if (p.kind() == ProfileKind::Ternary)
        throw Error(Errc::WrongKind, "r-extensions need a partial or binary profile");
    if (r < 1 || r > p.size())
        throw Error(Errc::InvalidR, "r = " + std::to_string(r) + " outside [1, " + std::to_string(p.size()) + "]");
    for (Individual a = 0; a < p.size(); ++a) {
        int pos = p.qualified_by(a).size();
        int open = p.undecided_in_row(a).size();
        if (pos > r || pos + open < r)
            throw Error(Errc::NoRExtension, "row " + p.name(a) + " cannot reach exactly r positives");
    }
}

bool r_pqi_consent_flow(const Profile& p, IndividualSet s, int r, const SocialRule& rule)
{
    const Consent* c = rule.as_consent();
    if (!c || c->t != 1 || c->s < 2)
        throw Error(Errc::PreconditionViolated, "flow algorithm needs consent(s,1) with s >= 2");
    check_query(p, s, rule);
    check_r_extendable(p, r);

    std::map<Individual, Cell> diag;
    for (Individual a : s) {
        Cell self = p.at(a, a);
        if (self == Cell::Neg)
            return false;
        if (self == Cell::Unknown)
            diag[a] = Cell::Pos;
    }
    return flow_feasible(p, s, r, c->s, 1, row_counts(p), diag);
}

bool r_pqi_general(const Profile& p, IndividualSet s, int r, const SocialRule& rule, std::uint64_t max_branches)
{
    const auto quotas = consent_quotas(rule);
    if (!quotas)
        throw Error(Errc::PreconditionViolated, "r-PQI branching needs a consent rule");
    check_query(p, s, rule);
    check_r_extendable(p, r);

    std::vector<Individual> open;
    for (Individual a : s)
        if (p.at(a, a) == Cell::Unknown)
            open.push_back(a);
    if (open.size() >= 63 || (std::uint64_t{1} << open.size()) > max_branches)
        throw Error(Errc::InstanceTooLarge, std::to_string(open.size()) + " unknown diagonal entries in S");

    const RowCounts rc = row_counts(p);
    const std::uint64_t branches = std::uint64_t{1} << open.size();
    std::map<Individual, Cell> diag;
    for (std::uint64_t m = 0; m < branches; ++m) {
        for (std::size_t k = 0; k < open.size(); ++k)
            diag[open[k]] = ((m >> k) & 1U) ? Cell::Neg : Cell::Pos;
        if (flow_feasible(p, s, r, quotas->first, quotas->second, rc, diag))
            return true;
    }
    return false;
}

bool r_nqi(const Profile& p, IndividualSet s, int r, const SocialRule& rule)
{
    check_query(p, s, rule);
    const auto quotas = consent_quotas(rule);
    if (!quotas && r != 1)
        throw Error(Errc::PreconditionViolated, "r-NQI for CSR and LSR is only implemented for r = 1");
    check_r_extendable(p, r);
    const int n = p.size();
    const RowCounts rc = row_counts(p);
    auto can_neg = [&](Individual b) {
        auto ub = static_cast<std::size_t>(b);
        return rc.known_pos[ub] + rc.unknown[ub] - 1 >= r;
    };
    auto can_pos = [&](Individual b) { return rc.known_pos[static_cast<std::size_t>(b)] + 1 <= r; };

    if (!quotas) {
        // Every row has a single positive. Under LSR the self-qualifiers are
        // exactly the qualified individuals; under CSR at most one individual
        // is qualified and only if every row points at it.
        auto forced_to = [&](Individual b, Individual a) {
            Cell c = p.at(b, a);
            return c == Cell::Pos || (c == Cell::Unknown && !can_neg(b));
        };
        if (rule.is_lsr())
            return std::all_of(s.begin(), s.end(), [&](Individual a) { return forced_to(a, a); });
        if (s.size() != 1)
            return false;
        Individual a = s.min();
        for (Individual b = 0; b < n; ++b)
            if (!forced_to(b, a))
                return false;
        return true;
    }

    auto [sq, tq] = *quotas;
    for (Individual a : s) {
        int min_pos = 0;
        for (Individual b = 0; b < n; ++b) {
            if (b == a)
                continue;
            Cell c = p.at(b, a);
            min_pos += c == Cell::Pos || (c == Cell::Unknown && !can_neg(b));
        }
        Cell self = p.at(a, a);
        bool try_pos = self == Cell::Pos || (self == Cell::Unknown && can_pos(a));
        bool try_neg = self == Cell::Neg || (self == Cell::Unknown && can_neg(a));
        if (try_pos && min_pos + 1 < sq)
            return false;
        if (try_neg && n - min_pos >= tq)
            return false;
    }
    return true;
}

bool answer_query(const Profile& p, const PartialQuery& q, const SocialRule& rule)
{
    if (!q.r)
        return q.mode == QueryMode::Possible ? pqi(p, q.s, rule) : nqi(p, q.s, rule);
    if (q.mode == QueryMode::Necessary)
        return r_nqi(p, q.s, *q.r, rule);
    const Consent* c = rule.as_consent();
    if (c && c->t == 1 && c->s >= 2)
        return r_pqi_consent_flow(p, q.s, *q.r, rule);
    return r_pqi_general(p, q.s, *q.r, rule);
}

} // namespace gid
