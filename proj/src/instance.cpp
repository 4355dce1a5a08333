#include "gid/instance.hpp"

#include <algorithm>
#include <set>

#include "gid/error.hpp"

namespace gid {

const char* to_string(Family f)
{
    switch (f) {
    case Family::GCAI: return "GCAI";
    case Family::GCDI: return "GCDI";
    case Family::GCPI: return "GCPI";
    case Family::GB: return "GB";
    case Family::GMB: return "GMB";
    }
    return "?";
}

const char* to_string(Objective o)
{
    switch (o) {
    case Objective::Constructive: return "constructive";
    case Objective::Destructive: return "destructive";
    case Objective::Exact: return "exact";
    case Objective::General: return "general";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    for (Family f : {Family::GCAI, Family::GCDI, Family::GCPI, Family::GB, Family::GMB})
        if (s == to_string(f))
            return f;
    throw Error(Errc::ParseError, "unknown problem family '" + s + "'");
}

Objective parse_objective(const std::string& s)
{
    for (Objective o : {Objective::Constructive, Objective::Destructive, Objective::Exact, Objective::General})
        if (s == to_string(o))
            return o;
    throw Error(Errc::ParseError, "unknown objective '" + s + "'");
}

const char* to_string(Answer a)
{
    switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Immune: return "IMMUNE";
    }
    return "?";
}

const char* to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::IndexOutOfRange: return "IndexOutOfRange";
    case ViolationKind::RuleInvalid: return "RuleInvalid";
    case ViolationKind::DisjointnessViolated: return "DisjointnessViolated";
    case ViolationKind::TargetsOutsidePool: return "TargetsOutsidePool";
    case ViolationKind::PoolNotApplicable: return "PoolNotApplicable";
    case ViolationKind::ExactCoverageViolated: return "ExactCoverageViolated";
    case ViolationKind::ExactNotApplicable: return "ExactNotApplicable";
    case ViolationKind::ObjectiveSetMismatch: return "ObjectiveSetMismatch";
    case ViolationKind::BudgetMissing: return "BudgetMissing";
    case ViolationKind::BudgetNotApplicable: return "BudgetNotApplicable";
    case ViolationKind::NegativeBudget: return "NegativeBudget";
    case ViolationKind::PricesNotApplicable: return "PricesNotApplicable";
    case ViolationKind::InvalidPrice: return "InvalidPrice";
    case ViolationKind::RProfileViolated: return "RProfileViolated";
    case ViolationKind::ConstructiveAlreadySatisfied: return "ConstructiveAlreadySatisfied";
    case ViolationKind::DestructiveAlreadySatisfied: return "DestructiveAlreadySatisfied";
    }
    return "?";
}

SolutionKind solution_kind_for(Family f)
{
    switch (f) {
    case Family::GCAI: return SolutionKind::Added;
    case Family::GCDI: return SolutionKind::Deleted;
    case Family::GCPI: return SolutionKind::Partition;
    case Family::GB: return SolutionKind::Bribed;
    case Family::GMB: return SolutionKind::Flipped;
    }
    return SolutionKind::Added;
}

std::int64_t AttackInstance::agent_price(Individual a) const
{
    if (!agent_prices)
        return 1;
    return agent_prices->at(static_cast<std::size_t>(a));
}

std::int64_t AttackInstance::pair_price(Individual from, Individual to) const
{
    if (!pair_prices)
        return 1;
    return pair_prices->at(static_cast<std::size_t>(from) * static_cast<std::size_t>(n()) +
                           static_cast<std::size_t>(to));
}

std::int64_t AttackInstance::agent_cost(IndividualSet u) const
{
    std::int64_t c = 0;
    for (Individual a : u)
        c += agent_price(a);
    return c;
}

IndividualSet AttackInstance::start_set() const
{
    return family == Family::GCAI ? pool : profile.everyone();
}

bool AttackInstance::targets_satisfied(IndividualSet qualified) const
{
    return aplus.is_subset_of(qualified) && !aminus.intersects(qualified);
}

std::vector<Violation> validate(const AttackInstance& in)
{
    std::vector<Violation> out;
    auto add = [&](ViolationKind k, std::string detail, bool warning = false) {
        out.push_back(Violation{k, std::move(detail), warning});
    };
    const IndividualSet everyone = in.profile.everyone();

    if (!(in.aplus | in.aminus | in.pool).is_subset_of(everyone))
        add(ViolationKind::IndexOutOfRange, "target or pool set names individuals outside N");
    bool rule_ok = is_applicable(in.rule, in.profile);
    if (!rule_ok) {
        try {
            check_applicable(in.rule, in.profile);
        } catch (const Error& e) {
            add(ViolationKind::RuleInvalid, e.what());
        }
    }
    if (in.aplus.intersects(in.aminus))
        add(ViolationKind::DisjointnessViolated, "A+ and A- overlap");

    if (in.family == Family::GCAI) {
        if (!(in.aplus | in.aminus).is_subset_of(in.pool))
            add(ViolationKind::TargetsOutsidePool, "A+ and A- must lie inside T");
    } else if (!in.pool.empty()) {
        add(ViolationKind::PoolNotApplicable, "only GCAI has a pool");
    }

    if (in.objective == Objective::Exact) {
        if (in.family == Family::GCDI)
            add(ViolationKind::ExactNotApplicable, "GCDI has no exact variant");
        else if ((in.aplus | in.aminus) != in.start_set())
            add(ViolationKind::ExactCoverageViolated,
                in.family == Family::GCAI ? "A+ and A- must cover T" : "A+ and A- must cover N");
    }
    if (in.objective == Objective::Constructive && !in.aminus.empty())
        add(ViolationKind::ObjectiveSetMismatch, "constructive instances have empty A-");
    if (in.objective == Objective::Destructive && !in.aplus.empty())
        add(ViolationKind::ObjectiveSetMismatch, "destructive instances have empty A+");

    if (in.family == Family::GCPI) {
        if (in.budget)
            add(ViolationKind::BudgetNotApplicable, "GCPI has no budget");
    } else if (!in.budget) {
        add(ViolationKind::BudgetMissing, "budget required");
    } else if (*in.budget < 0) {
        add(ViolationKind::NegativeBudget, "budget must be non-negative");
    }

    const auto n = static_cast<std::size_t>(in.n());
    if (in.agent_prices) {
        if (in.family != Family::GB)
            add(ViolationKind::PricesNotApplicable, "agent prices apply to bribery only");
        if (in.agent_prices->size() != n ||
            std::any_of(in.agent_prices->begin(), in.agent_prices->end(), [](auto p) { return p < 1; }))
            add(ViolationKind::InvalidPrice, "agent prices must be n positive integers");
    }
    if (in.pair_prices) {
        if (in.family != Family::GMB)
            add(ViolationKind::PricesNotApplicable, "pair prices apply to microbribery only");
        if (in.pair_prices->size() != n * n ||
            std::any_of(in.pair_prices->begin(), in.pair_prices->end(), [](auto p) { return p < 1; }))
            add(ViolationKind::InvalidPrice, "pair prices must be n*n positive integers");
    }

    if (in.r_restriction) {
        int r = *in.r_restriction;
        if (r < 1 || in.profile.kind() != ProfileKind::Binary || !is_r_profile(in.profile, r))
            add(ViolationKind::RProfileViolated, "not every row has exactly r = " + std::to_string(r) + " positives");
    }

    if (!has_errors(out)) {
        IndividualSet f = eval(in.rule, in.start_set(), in.profile);
        if (!in.aplus.empty() && in.aplus.is_subset_of(f))
            add(ViolationKind::ConstructiveAlreadySatisfied, "every member of A+ is already qualified", true);
        if (!in.aminus.empty() && !in.aminus.intersects(f))
            add(ViolationKind::DestructiveAlreadySatisfied, "no member of A- is qualified", true);
    }
    return out;
}

bool has_errors(const std::vector<Violation>& violations)
{
    return std::any_of(violations.begin(), violations.end(), [](const Violation& v) { return !v.warning; });
}

namespace {

Profile apply_bribery(const AttackInstance& in, const Solution& s)
{
    Profile p = in.profile;
    IndividualSet seen;
    for (const RowRewrite& rw : s.rows) {
        if (!s.members.contains(rw.who) || seen.contains(rw.who))
            throw Error(Errc::WitnessOutOfDomain, "row rewrite for an individual not bribed exactly once");
        if (!rw.qualifies.is_subset_of(in.profile.everyone()))
            throw Error(Errc::WitnessOutOfDomain, "rewrite qualifies individuals outside N");
        seen.insert(rw.who);
        p.set_row(rw.who, rw.qualifies);
    }
    if (seen != s.members)
        throw Error(Errc::WitnessOutOfDomain, "every bribed individual needs a replacement row");
    return p;
}

Profile apply_microbribery(const AttackInstance& in, const Solution& s)
{
    Profile p = in.profile;
    std::set<std::pair<Individual, Individual>> seen;
    for (const EntryChange& e : s.entries) {
        if (e.from < 0 || e.from >= in.n() || e.to < 0 || e.to >= in.n())
            throw Error(Errc::WitnessOutOfDomain, "changed entry outside N x N");
        if (!seen.insert({e.from, e.to}).second)
            throw Error(Errc::WitnessOutOfDomain, "entry changed twice");
        if (e.value != Cell::Pos && e.value != Cell::Neg)
            throw Error(Errc::WitnessOutOfDomain, "entries may only be set to +1 or -1");
        if (in.profile.at(e.from, e.to) == e.value)
            throw Error(Errc::WitnessOutOfDomain, "entry set to its current value");
        p.set(e.from, e.to, e.value);
    }
    return p;
}

} // namespace

IndividualSet outcome(const AttackInstance& in, const Solution& s)
{
    if (s.kind != solution_kind_for(in.family))
        throw Error(Errc::KindMismatch, "solution kind does not match the problem family");
    const IndividualSet everyone = in.profile.everyone();
    if (!s.members.is_subset_of(everyone))
        throw Error(Errc::WitnessOutOfDomain, "solution names individuals outside N");

    switch (in.family) {
    case Family::GCAI:
        if (s.members.intersects(in.pool))
            throw Error(Errc::WitnessOutOfDomain, "added individuals must come from N \\ T");
        return eval(in.rule, in.pool | s.members, in.profile);
    case Family::GCDI:
        if (s.members.intersects(in.aplus | in.aminus))
            throw Error(Errc::WitnessOutOfDomain, "deleted individuals must avoid A+ and A-");
        return eval(in.rule, everyone - s.members, in.profile);
    case Family::GCPI: {
        IndividualSet v = eval(in.rule, s.members, in.profile) | eval(in.rule, everyone - s.members, in.profile);
        return eval(in.rule, v, in.profile);
    }
    case Family::GB:
        if (!s.entries.empty())
            throw Error(Errc::WitnessOutOfDomain, "bribery witness carries entry changes");
        return eval(in.rule, everyone, apply_bribery(in, s));
    case Family::GMB:
        if (!s.members.empty() || !s.rows.empty())
            throw Error(Errc::WitnessOutOfDomain, "microbribery witness carries a bribed set");
        return eval(in.rule, everyone, apply_microbribery(in, s));
    }
    return {};
}

std::int64_t solution_cost(const AttackInstance& in, const Solution& s)
{
    switch (in.family) {
    case Family::GCAI:
    case Family::GCDI: return s.members.size();
    case Family::GCPI: return 0;
    case Family::GB: return in.agent_cost(s.members);
    case Family::GMB: {
        std::int64_t c = 0;
        for (const EntryChange& e : s.entries)
            c += in.pair_price(e.from, e.to);
        return c;
    }
    }
    return 0;
}

bool check_witness(const AttackInstance& in, const Solution& s)
{
    IndividualSet f = outcome(in, s);
    if (in.family != Family::GCPI) {
        if (!in.budget)
            throw Error(Errc::PreconditionViolated, "instance has no budget");
        if (solution_cost(in, s) > *in.budget)
            return false;
    }
    if (in.r_restriction && (in.family == Family::GB || in.family == Family::GMB)) {
        Profile final_profile = in.profile;
        if (in.family == Family::GB)
            for (const RowRewrite& rw : s.rows)
                final_profile.set_row(rw.who, rw.qualifies);
        else
            for (const EntryChange& e : s.entries)
                final_profile.set(e.from, e.to, e.value);
        if (!is_r_profile(final_profile, *in.r_restriction))
            return false;
    }
    return in.targets_satisfied(f);
}

InstanceDiagnostics diagnostics(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    if (!c)
        throw Error(Errc::PreconditionViolated, "diagnostics need a consent rule");
    const Profile& p = in.profile;
    InstanceDiagnostics d;

    bool s_side = c->t == 1 && !in.aplus.empty();
    for (Individual a : in.aplus)
        s_side = s_side && p.self_qualifies(a);
    bool t_side = c->s == 1 && !in.aminus.empty();
    for (Individual a : in.aminus)
        t_side = t_side && !p.self_qualifies(a);
    if (!s_side && !t_side)
        throw Error(Errc::PreconditionViolated,
                    "s* needs t = 1 and self-qualifying A+; t* needs s = 1 and self-disqualifying A-");

    if (s_side) {
        int best = 0;
        bool first = true;
        for (Individual a : in.aplus) {
            TargetSlack sl{a, true, std::max(0, c->s - p.qualifiers(a).size()), p.disqualifiers(a).size()};
            best = first ? sl.choices - sl.missing : std::max(best, sl.choices - sl.missing);
            first = false;
            d.per_individual.push_back(sl);
        }
        d.s_star = best;
    }
    if (t_side) {
        int best = 0;
        bool first = true;
        for (Individual a : in.aminus) {
            TargetSlack sl{a, false, std::max(0, c->t - p.disqualifiers(a).size()), p.qualifiers(a).size()};
            best = first ? sl.choices - sl.missing : std::max(best, sl.choices - sl.missing);
            first = false;
            d.per_individual.push_back(sl);
        }
        d.t_star = best;
    }
    return d;
}

} // namespace gid
