#include "gid/solvers.hpp"

#include <algorithm>
#include <limits>

#include "gid/combinatorics.hpp"
#include "solver_util.hpp"

namespace gid {

using detail::require;

Verdict solve_cgb_xp(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    require(in.family == Family::GB && in.objective == Objective::Constructive, "needs constructive GB");
    require(c && c->t == 1, "needs consent(s,1)");
    require(!in.r_restriction, "rewrites to all-qualify rows break r-profiles");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    const IndividualSet everyone = in.profile.everyone();
    IndividualSet forced;
    for (Individual a : in.aplus)
        if (!in.profile.self_qualifies(a))
            forced.insert(a);
    std::int64_t remaining = *in.budget - in.agent_cost(forced);
    if (remaining < 0)
        return Verdict::no();

    Profile base = in.profile;
    for (Individual a : forced)
        base.set_row(a, everyone);

    std::optional<IndividualSet> best;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    Profile work = base;
    for_each_subset_by_size(everyone - forced, c->s, [&](IndividualSet u) {
        std::int64_t cost = in.agent_cost(u);
        if (cost > remaining || cost >= best_cost)
            return false;
        for (Individual a : u)
            work.set_row(a, everyone);
        if (in.aplus.is_subset_of(eval(in.rule, everyone, work))) {
            best = u;
            best_cost = cost;
        }
        for (Individual a : u)
            for (Individual b = 0; b < in.n(); ++b)
                work.set(a, b, base.at(a, b));
        return false;
    });
    if (!best)
        return Verdict::no();

    Solution s = Solution::of(SolutionKind::Bribed, forced | *best);
    for (Individual a : s.members)
        s.rows.push_back(RowRewrite{a, everyone});
    return detail::checked_yes(in, std::move(s));
}

Verdict solve_dgb_xp(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    require(in.family == Family::GB && in.objective == Objective::Destructive, "needs destructive GB");
    require(c && c->s == 1, "needs consent(1,t)");
    require(!in.r_restriction, "rewrites to all-disqualify rows break r-profiles");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    AttackInstance dual = in;
    dual.profile = negate(in.profile);
    dual.rule = SocialRule::consent(c->t, 1);
    dual.objective = Objective::Constructive;
    dual.aplus = in.aminus;
    dual.aminus = {};
    Verdict v = solve_cgb_xp(dual);
    if (!v.is_yes())
        return v.answer == Answer::Immune ? Verdict::no() : v;

    Solution s = *v.witness;
    for (RowRewrite& rw : s.rows)
        rw.qualifies = in.profile.everyone() - rw.qualifies;
    return detail::checked_yes(in, std::move(s));
}

Verdict solve_gcdi_22(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    require(in.family == Family::GCDI, "needs GCDI");
    require(c && c->s == 2 && c->t == 2, "needs consent(2,2)");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    const IndividualSet targets = in.aplus | in.aminus;
    IndividualSet deleted;
    for (Individual a : in.aplus)
        if (!in.profile.self_qualifies(a))
            deleted |= in.profile.disqualifiers(a) - IndividualSet::single(a);
    for (Individual a : in.aminus)
        if (in.profile.self_qualifies(a))
            deleted |= in.profile.qualifiers(a) - IndividualSet::single(a);
    if (deleted.intersects(targets) || deleted.size() > *in.budget)
        return Verdict::no();
    IndividualSet f = eval(in.rule, in.profile.everyone() - deleted, in.profile);
    if (!in.targets_satisfied(f))
        return Verdict::no();
    return detail::checked_yes(in, Solution::of(SolutionKind::Deleted, deleted));
}

std::optional<R1Budget> cgcai_r1_budget(const AttackInstance& in)
{
    R1Budget b;
    const IndividualSet T = in.pool;
    const Consent* c = in.rule.as_consent();
    bool any_negative = false;
    for (Individual a : in.aplus) {
        if (in.profile.self_qualifies(a)) {
            b.per_target[a] = std::max(0, c->s - (in.profile.qualifiers(a) & T).size());
            continue;
        }
        int dis = (in.profile.disqualifiers(a) & T).size();
        if (dis >= c->t)
            return std::nullopt;
        int da = c->t - dis - 1;
        b.slack[a] = da;
        b.d = any_negative ? std::min<std::int64_t>(b.d, da) : da;
        any_negative = true;
    }
    if (!any_negative)
        b.d = *in.budget;
    return b;
}

Verdict solve_cgcai_r1(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    require(in.family == Family::GCAI && in.objective == Objective::Constructive, "needs constructive GCAI");
    require(c && c->s >= 2, "needs consent(s,t) with s >= 2");
    require(in.r_restriction == 1, "needs a 1-profile");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    std::optional<R1Budget> b = cgcai_r1_budget(in);
    if (!b)
        return Verdict::no();
    std::int64_t ell = *in.budget;
    std::int64_t d = b->d;
    const IndividualSet outside = in.profile.everyone() - in.pool;
    IndividualSet added;
    for (const auto& [a, q] : b->per_target) {
        std::vector<Individual> cand = (in.profile.qualifiers(a) & outside).to_vector();
        if (static_cast<int>(cand.size()) < q)
            return Verdict::no();
        for (int i = 0; i < q; ++i)
            added.insert(cand[static_cast<std::size_t>(i)]);
        ell -= q;
        d -= q;
    }
    if (ell < 0 || d < 0)
        return Verdict::no();
    return detail::checked_yes(in, Solution::of(SolutionKind::Added, added));
}

namespace {

struct Quotas {
    int s = 1, s_prime = 1, t = 1;
};

struct Branch {
    Cell diag;
    std::int64_t diag_cost;
};

// Cheapest way to move one target to the wanted status by changing entries of
// its own column.
TargetPlan plan_target(const AttackInstance& in, Individual a, bool want_qualified, const Quotas& q)
{
    const Profile& p = in.profile;
    const Cell cur = p.at(a, a);
    std::vector<Branch> branches;
    if (cur == Cell::Indifferent)
        branches.push_back({Cell::Indifferent, 0});
    for (Cell d : {Cell::Pos, Cell::Neg})
        branches.push_back({d, d == cur ? 0 : in.pair_price(a, a)});

    int pos = 0, neg = 0;
    for (Individual b = 0; b < p.size(); ++b) {
        if (b == a)
            continue;
        Cell v = p.at(b, a);
        pos += v == Cell::Pos;
        neg += v == Cell::Neg;
    }

    TargetPlan best{a, false, 0, {}};
    for (const Branch& br : branches) {
        int need = 0;
        Cell to = want_qualified ? Cell::Pos : Cell::Neg;
        bool from_star = false;
        if (want_qualified) {
            if (br.diag == Cell::Pos) {
                need = q.s - (pos + 1);
                from_star = true;
            } else if (br.diag == Cell::Neg) {
                need = (neg + 1) - (q.t - 1);
            } else {
                need = q.s_prime - pos;
                from_star = true;
            }
        } else {
            if (br.diag == Cell::Pos)
                need = (pos + 1) - (q.s - 1);
            else if (br.diag == Cell::Neg) {
                need = q.t - (neg + 1);
                from_star = true;
            } else {
                need = pos - (q.s_prime - 1);
            }
        }
        need = std::max(need, 0);

        // Entries that move the count: the opposite sign, plus ⋆ when the
        // count is of the target sign.
        Cell opposite = to == Cell::Pos ? Cell::Neg : Cell::Pos;
        std::vector<std::pair<std::int64_t, Individual>> cand;
        for (Individual b = 0; b < p.size(); ++b) {
            if (b == a)
                continue;
            Cell v = p.at(b, a);
            if (v == opposite || (from_star && v == Cell::Indifferent))
                cand.emplace_back(in.pair_price(b, a), b);
        }
        if (static_cast<int>(cand.size()) < need)
            continue;
        std::sort(cand.begin(), cand.end());
        TargetPlan plan{a, true, br.diag_cost, {}};
        if (br.diag != cur)
            plan.changes.push_back(EntryChange{a, a, br.diag});
        for (int i = 0; i < need; ++i) {
            plan.cost += cand[static_cast<std::size_t>(i)].first;
            plan.changes.push_back(EntryChange{cand[static_cast<std::size_t>(i)].second, a, to});
        }
        if (!best.feasible || plan.cost < best.cost)
            best = std::move(plan);
    }
    return best;
}

} // namespace

MicrobriberyPlan plan_microbribery(const AttackInstance& in)
{
    Quotas q;
    if (const Consent* c = in.rule.as_consent())
        q = {c->s, c->s, c->t};
    else if (const Ternary* t = in.rule.as_ternary())
        q = {t->s, t->s_prime, t->t};
    else
        throw Error(Errc::PreconditionViolated, "microbribery decomposition needs a consent or ternary rule");

    MicrobriberyPlan plan{true, 0, {}};
    for (Individual a = 0; a < in.n(); ++a) {
        if (!in.aplus.contains(a) && !in.aminus.contains(a))
            continue;
        TargetPlan tp = plan_target(in, a, in.aplus.contains(a), q);
        plan.feasible = plan.feasible && tp.feasible;
        plan.total += tp.cost;
        plan.per_target.push_back(std::move(tp));
    }
    return plan;
}

Verdict solve_microbribery_consent(const AttackInstance& in)
{
    require(in.family == Family::GMB, "needs GMB");
    require(in.rule.as_consent() || in.rule.as_ternary(), "needs a consent or ternary rule");
    require(in.profile.kind() != ProfileKind::Partial, "needs a binary or ternary profile");
    require(!in.r_restriction, "entry changes do not preserve r-profiles");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    MicrobriberyPlan plan = plan_microbribery(in);
    if (!plan.feasible || plan.total > *in.budget)
        return Verdict::no();
    Solution s = Solution::of(SolutionKind::Flipped, {});
    for (const TargetPlan& tp : plan.per_target)
        s.entries.insert(s.entries.end(), tp.changes.begin(), tp.changes.end());
    return detail::checked_yes(in, std::move(s));
}

} // namespace gid
