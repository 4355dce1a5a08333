#include "gid/ilp.hpp"

#include <algorithm>
#include <map>

#include "solver_util.hpp"

namespace gid {

std::int64_t IlpConstraint::lhs(const std::vector<std::int64_t>& x) const
{
    std::int64_t sum = 0;
    for (std::size_t j : vars)
        sum += x[j];
    return constant + sign * sum;
}

bool IlpConstraint::holds(const std::vector<std::int64_t>& x) const
{
    std::int64_t v = lhs(x);
    return sense == Sense::AtLeast ? v >= bound : v <= bound;
}

bool IlpModel::satisfies(const std::vector<std::int64_t>& x) const
{
    if (x.size() != variable_count())
        return false;
    std::int64_t total = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < 0 || x[j] > counts[j])
            return false;
        total += x[j];
    }
    if (total > budget)
        return false;
    return std::all_of(constraints.begin(), constraints.end(), [&](const IlpConstraint& c) { return c.holds(x); });
}

std::vector<std::int64_t> IlpModel::assignment_for(IndividualSet u) const
{
    std::vector<std::int64_t> x(variable_count(), 0);
    for (std::size_t j = 0; j < members.size(); ++j)
        for (Individual a : members[j])
            x[j] += u.contains(a) ? 1 : 0;
    return x;
}

IndividualSet IlpModel::witness_for(const std::vector<std::int64_t>& x) const
{
    IndividualSet u;
    for (std::size_t j = 0; j < members.size(); ++j)
        for (std::int64_t i = 0; i < x[j]; ++i)
            u.insert(members[j][static_cast<std::size_t>(i)]);
    return u;
}

IlpModel build_ilp(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    detail::require(in.family == Family::GCAI || in.family == Family::GCDI, "ILP covers GCAI and GCDI");
    detail::require(c != nullptr, "ILP needs a consent rule");
    detail::require(in.budget.has_value(), "ILP needs a budget");

    const Profile& p = in.profile;
    const bool adding = in.family == Family::GCAI;
    const IndividualSet everyone = p.everyone();
    const IndividualSet base = adding ? in.pool : everyone;
    const IndividualSet candidates = adding ? everyone - in.pool : everyone - (in.aplus | in.aminus);

    IlpModel m;
    m.family = in.family;
    m.budget = *in.budget;
    m.order = in.aplus.to_vector();
    for (Individual a : in.aminus)
        m.order.push_back(a);

    std::map<std::vector<int>, std::vector<Individual>> groups;
    for (Individual cand : candidates) {
        std::vector<int> beta;
        beta.reserve(m.order.size());
        for (Individual a : m.order)
            beta.push_back(p.at(cand, a) == Cell::Pos ? 1 : -1);
        groups[beta].push_back(cand);
    }
    for (auto& [beta, who] : groups) {
        m.beta_vectors.push_back(beta);
        m.counts.push_back(static_cast<std::int64_t>(who.size()));
        m.members.push_back(who);
    }

    for (std::size_t i = 0; i < m.order.size(); ++i) {
        Individual a = m.order[i];
        const bool plus = i < static_cast<std::size_t>(in.aplus.size());
        const bool self_pos = p.self_qualifies(a);
        IlpConstraint con;
        con.target = a;
        con.sign = adding ? 1 : -1;
        const int want = self_pos ? 1 : -1;
        for (std::size_t j = 0; j < m.beta_vectors.size(); ++j)
            if (m.beta_vectors[j][i] == want)
                con.vars.push_back(j);
        if (self_pos) {
            con.constant = (p.qualifiers(a) & base).size();
            if (plus) {
                con.label = "3.1";
                con.sense = Sense::AtLeast;
                con.bound = c->s;
            } else {
                con.label = "4.1";
                con.sense = Sense::AtMost;
                con.bound = c->s - 1;
            }
        } else {
            con.constant = (p.disqualifiers(a) & base).size();
            if (plus) {
                con.label = "3.2";
                con.sense = Sense::AtMost;
                con.bound = c->t - 1;
            } else {
                con.label = "4.2";
                con.sense = Sense::AtLeast;
                con.bound = c->t;
            }
        }
        m.constraints.push_back(std::move(con));
    }
    return m;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const IlpModel& m, const IlpOptions& o) : m_(m), o_(o), x_(m.variable_count(), 0) {}

    std::optional<std::vector<std::int64_t>> run()
    {
        if (dfs(0, m_.budget))
            return x_;
        return std::nullopt;
    }

private:
    // Can every constraint still be met with variables from `next` on,
    // spending at most `left`?
    bool viable(std::size_t next, std::int64_t left) const
    {
        for (const IlpConstraint& c : m_.constraints) {
            std::int64_t fixed = 0, room = 0;
            for (std::size_t j : c.vars) {
                if (j < next)
                    fixed += x_[j];
                else
                    room += m_.counts[j];
            }
            room = std::min(room, left);
            std::int64_t lo = c.constant + c.sign * fixed;
            std::int64_t hi = lo + c.sign * room;
            if (hi < lo)
                std::swap(lo, hi);
            if (c.sense == Sense::AtLeast ? hi < c.bound : lo > c.bound)
                return false;
        }
        return true;
    }

    bool dfs(std::size_t j, std::int64_t left)
    {
        if (++nodes_ > o_.node_limit)
            throw Error(Errc::InstanceTooLarge, "branch-and-bound node limit reached");
        if (!viable(j, left))
            return false;
        if (j == x_.size())
            return true;
        std::int64_t top = std::min(m_.counts[j], left);
        for (std::int64_t v = 0; v <= top; ++v) {
            x_[j] = v;
            if (dfs(j + 1, left - v))
                return true;
        }
        x_[j] = 0;
        return false;
    }

    const IlpModel& m_;
    const IlpOptions& o_;
    std::vector<std::int64_t> x_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<std::vector<std::int64_t>> solve_ilp(const IlpModel& model, const IlpOptions& options)
{
    if (model.budget < 0)
        return std::nullopt;
    return BranchAndBound(model, options).run();
}

Verdict solve_fpt_ilp(const AttackInstance& in, const IlpOptions& options)
{
    detail::require(in.family == Family::GCAI || in.family == Family::GCDI, "ILP covers GCAI and GCDI");
    detail::require(in.rule.as_consent() != nullptr, "ILP needs a consent rule");
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return *v;

    IlpModel m = build_ilp(in);
    if (m.variable_count() > options.max_vectors)
        throw Error(Errc::InstanceTooLarge, "realized vector count " + std::to_string(m.variable_count()) +
                                                " exceeds cap " + std::to_string(options.max_vectors));
    auto x = solve_ilp(m, options);
    if (!x)
        return Verdict::no();
    return detail::checked_yes(in, Solution::of(solution_kind_for(in.family), m.witness_for(*x)));
}

} // namespace gid
