#include "gid/dispatch.hpp"

#include "gid/ilp.hpp"
#include "gid/solvers.hpp"
#include "solver_util.hpp"

namespace gid {

const std::vector<std::string>& solver_names()
{
    static const std::vector<std::string> names{"auto",     "brute",    "cgb_xp", "dgb_xp",
                                                "gcdi_22",  "cgcai_r1", "microbribery", "ilp"};
    return names;
}

std::string auto_solver_for(const AttackInstance& in)
{
    const Consent* c = in.rule.as_consent();
    const bool restricted = in.r_restriction.has_value();
    switch (in.family) {
    case Family::GB:
        if (c && !restricted && in.objective == Objective::Constructive && c->t == 1)
            return "cgb_xp";
        if (c && !restricted && in.objective == Objective::Destructive && c->s == 1)
            return "dgb_xp";
        break;
    case Family::GCDI:
        if (c && c->s == 2 && c->t == 2)
            return "gcdi_22";
        if (c)
            return "ilp";
        break;
    case Family::GCAI:
        if (c && in.objective == Objective::Constructive && c->s >= 2 && in.r_restriction == 1)
            return "cgcai_r1";
        if (c)
            return "ilp";
        break;
    case Family::GMB:
        if ((c || in.rule.as_ternary()) && !restricted && in.profile.kind() != ProfileKind::Partial)
            return "microbribery";
        break;
    case Family::GCPI: break;
    }
    return "brute";
}

namespace {

Verdict run_named(const AttackInstance& in, const std::string& name, const SearchBudget& budget)
{
    if (name == "brute")
        return solve_brute(in, budget);
    if (name == "cgb_xp")
        return solve_cgb_xp(in);
    if (name == "dgb_xp")
        return solve_dgb_xp(in);
    if (name == "gcdi_22")
        return solve_gcdi_22(in);
    if (name == "cgcai_r1")
        return solve_cgcai_r1(in);
    if (name == "microbribery")
        return solve_microbribery_consent(in);
    if (name == "ilp") {
        IlpOptions opt;
        if (budget.node_limit)
            opt.node_limit = *budget.node_limit;
        return solve_fpt_ilp(in, opt);
    }
    throw Error(Errc::InvalidArgument, "unknown solver '" + name + "'");
}

} // namespace

SolveReport solve_auto(const AttackInstance& in, const SearchBudget& budget)
{
    detail::require_no_errors(in);
    if (auto v = detail::immunity_short_circuit(in))
        return {*v, "immunity"};
    return solve_with(in, auto_solver_for(in), budget);
}

SolveReport solve_with(const AttackInstance& in, const std::string& solver, const SearchBudget& budget)
{
    if (solver == "auto")
        return solve_auto(in, budget);
    try {
        return {run_named(in, solver, budget), solver};
    } catch (const Error& e) {
        if (e.code() == Errc::InstanceTooLarge)
            throw Error(Errc::InstanceTooLarge, solver + " refused: " + e.detail());
        throw;
    }
}

} // namespace gid
