#include "gid/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "gid/dispatch.hpp"
#include "gid/error.hpp"
#include "gid/immunity.hpp"
#include "gid/instance_io.hpp"
#include "gid/partial.hpp"
#include "gid/profile_io.hpp"

namespace gid {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool same_answer(Answer a, Answer b)
{
    auto norm = [](Answer x) { return x == Answer::Immune ? Answer::No : x; };
    return norm(a) == norm(b);
}

SweepRow run_attack(const SweepSpec& spec, std::size_t i)
{
    SweepRow row;
    row.index = i;
    row.seed = spec.seed + i;
    AttackInstance in = gen_random_instance(spec.shape, row.seed);
    row.digest = instance_digest(in);
    row.n = in.n();

    auto t0 = Clock::now();
    Verdict brute = solve_brute(in, spec.budget);
    row.brute_ms = ms_since(t0);
    row.brute = to_string(brute.answer);
    if (brute.is_yes())
        row.witness_ok = check_witness(in, *brute.witness);

    t0 = Clock::now();
    try {
        if (spec.solver == "immunity") {
            ImmunityVerdict iv = check_immunity(in);
            row.fast = iv.immune ? "IMMUNE" : "NO-CLAIM";
            row.note = iv.theorem_tag;
            row.agree = !(iv.immune && brute.is_yes());
        } else {
            SolveReport r = solve_with(in, spec.solver, spec.budget);
            row.fast = to_string(r.verdict.answer);
            row.note = r.solver;
            row.agree = same_answer(r.verdict.answer, brute.answer);
            if (r.verdict.is_yes())
                row.witness_ok = row.witness_ok && check_witness(in, *r.verdict.witness);
        }
    } catch (const Error& e) {
        row.fast = "error";
        row.note = e.what();
        row.agree = false;
    }
    row.fast_ms = ms_since(t0);
    row.agree = row.agree && row.witness_ok;
    return row;
}

SweepRow run_partial(const SweepSpec& spec, std::size_t i)
{
    SweepRow row;
    row.index = i;
    row.seed = spec.seed + i;
    PartialInstance pi = gen_random_partial_instance(spec.partial, row.seed);
    row.n = pi.profile.size();
    std::string key = format_profile(pi.profile) + "rule " + pi.rule.to_string() + "\nquery " +
                      format_set(pi.profile, pi.s) + "\n";
    if (pi.r)
        key += "r " + std::to_string(*pi.r) + "\n";
    row.digest = content_digest(key);

    const bool necessary = spec.solver == "nqi" || spec.solver == "r_nqi";
    const bool restricted = spec.solver.rfind("r_", 0) == 0;
    auto t0 = Clock::now();
    PartialAnswer brute = pqi_nqi_brute(pi.profile, pi.s, pi.rule, restricted ? pi.r : std::nullopt, spec.budget);
    row.brute_ms = ms_since(t0);
    bool expected = necessary ? brute.necessary : brute.possible;
    row.brute = expected ? "true" : "false";

    t0 = Clock::now();
    try {
        bool got = false;
        if (spec.solver == "pqi")
            got = pqi(pi.profile, pi.s, pi.rule);
        else if (spec.solver == "nqi")
            got = nqi(pi.profile, pi.s, pi.rule);
        else if (spec.solver == "r_pqi_flow")
            got = r_pqi_consent_flow(pi.profile, pi.s, *pi.r, pi.rule);
        else if (spec.solver == "r_pqi")
            got = r_pqi_general(pi.profile, pi.s, *pi.r, pi.rule);
        else
            got = r_nqi(pi.profile, pi.s, *pi.r, pi.rule);
        row.fast = got ? "true" : "false";
        row.agree = got == expected;
        row.note = pi.rule.to_string();
    } catch (const Error& e) {
        row.fast = "error";
        row.note = e.what();
        row.agree = false;
    }
    row.fast_ms = ms_since(t0);
    // Necessity implies possibility on every instance.
    if (brute.necessary && !brute.possible) {
        row.agree = false;
        row.note = "necessary without possible";
    }
    return row;
}

} // namespace

bool is_partial_sweep(const std::string& solver)
{
    return solver == "pqi" || solver == "nqi" || solver == "r_pqi_flow" || solver == "r_pqi" || solver == "r_nqi";
}

SweepSummary run_sweep(const SweepSpec& spec, unsigned jobs)
{
    const bool partial = is_partial_sweep(spec.solver);
    if (partial && spec.solver.rfind("r_", 0) == 0 && !spec.partial.r)
        throw Error(Errc::InvalidArgument, spec.solver + " sweeps need r");
    if (!partial && spec.solver != "immunity" &&
        std::find(solver_names().begin(), solver_names().end(), spec.solver) == solver_names().end())
        throw Error(Errc::InvalidArgument, "unknown solver '" + spec.solver + "'");

    SweepSummary out;
    out.rows.resize(spec.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spec.count; i = next++) {
            try {
                out.rows[i] = partial ? run_partial(spec, i) : run_attack(spec, i);
            } catch (const std::exception& e) {
                SweepRow& row = out.rows[i];
                row.index = i;
                row.seed = spec.seed + i;
                row.fast = row.brute = "error";
                row.note = e.what();
            }
        }
    };
    jobs = std::max(1U, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (const SweepRow& r : out.rows)
        (r.agree ? out.agreements : out.disagreements) += 1;
    return out;
}

} // namespace gid
