#include <doctest.h>

#include <algorithm>

#include "gid/error.hpp"
#include "gid/generators.hpp"
#include "gid/instance.hpp"
#include "gid/instance_io.hpp"
#include "gid/oracle.hpp"
#include "support/fixtures.hpp"

using namespace gid;
using fixtures::ex1;
using fixtures::names;

namespace {

AttackInstance ex1_gcai()
{
    AttackInstance in;
    in.profile = ex1();
    in.rule = SocialRule::consent(2, 1);
    in.family = Family::GCAI;
    in.pool = in.profile.everyone();
    in.aplus = names(in.profile, {"a5"});
    in.budget = 1;
    return in;
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k)
{
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

} // namespace

TEST_CASE("validate accepts the worked example instance")
{
    AttackInstance in = ex1_gcai();
    CHECK(validate(in).empty());
    CHECK(validate(in).size() == validate(in).size());
}

TEST_CASE("validate names each violated condition")
{
    AttackInstance in = ex1_gcai();
    in.aminus = names(in.profile, {"a5"});
    CHECK(has_kind(validate(in), ViolationKind::DisjointnessViolated));

    AttackInstance p;
    p.profile = ex1();
    p.family = Family::GCPI;
    p.objective = Objective::Exact;
    p.rule = SocialRule::consent(2, 1);
    p.aplus = names(p.profile, {"a5"});
    p.aminus = names(p.profile, {"a1"});
    CHECK(has_kind(validate(p), ViolationKind::ExactCoverageViolated));
    p.aminus = p.profile.everyone() - p.aplus;
    CHECK_FALSE(has_kind(validate(p), ViolationKind::ExactCoverageViolated));
    p.budget = 2;
    CHECK(has_kind(validate(p), ViolationKind::BudgetNotApplicable));

    AttackInstance missing = ex1_gcai();
    missing.budget.reset();
    CHECK(has_kind(validate(missing), ViolationKind::BudgetMissing));

    AttackInstance outside = ex1_gcai();
    outside.pool = names(outside.profile, {"a1", "a2"});
    CHECK(has_kind(validate(outside), ViolationKind::TargetsOutsidePool));

    AttackInstance negative = ex1_gcai();
    negative.budget = -1;
    CHECK(has_kind(validate(negative), ViolationKind::NegativeBudget));

    AttackInstance quota = ex1_gcai();
    quota.rule = SocialRule::consent(5, 4);
    CHECK(has_kind(validate(quota), ViolationKind::RuleInvalid));

    AttackInstance r = ex1_gcai();
    r.r_restriction = 2;
    CHECK(has_kind(validate(r), ViolationKind::RProfileViolated));

    AttackInstance trivial = ex1_gcai();
    trivial.aplus = names(trivial.profile, {"a1"});
    auto vs = validate(trivial);
    REQUIRE(has_kind(vs, ViolationKind::ConstructiveAlreadySatisfied));
    CHECK(vs.front().warning);
    CHECK_FALSE(has_errors(vs));
}

TEST_CASE("check_witness on deletion control")
{
    AttackInstance in;
    in.profile = ex1();
    in.rule = SocialRule::consent(1, 2);
    in.family = Family::GCDI;
    in.aplus = names(in.profile, {"a5"});
    in.budget = 1;
    Solution u = Solution::of(SolutionKind::Deleted, names(in.profile, {"a3"}));
    IndividualSet after = eval(in.rule, in.profile.everyone() - u.members, in.profile);
    CHECK(check_witness(in, u) == after.contains(*in.profile.find("a5")));
    CHECK_FALSE(after.contains(*in.profile.find("a5")));
    CHECK(outcome(in, u) == after);

    Solution target = Solution::of(SolutionKind::Deleted, names(in.profile, {"a5"}));
    CHECK_THROWS_WITH_AS(check_witness(in, target), doctest::Contains("WitnessOutOfDomain"), Error);
    CHECK_THROWS_WITH_AS(check_witness(in, Solution::of(SolutionKind::Added, {})),
                         doctest::Contains("KindMismatch"), Error);
}

TEST_CASE("check_witness rejects empty and over-budget solutions")
{
    AttackInstance in = ex1_gcai();
    in.pool = names(in.profile, {"a3"});
    in.aplus = in.pool;
    REQUIRE(validate(in).empty());
    CHECK_FALSE(check_witness(in, Solution::of(SolutionKind::Added, {})));
    // Either addition qualifies a3, but two exceed the budget of one.
    Solution two = Solution::of(SolutionKind::Added, names(in.profile, {"a2", "a4"}));
    CHECK(outcome(in, two).contains(2));
    CHECK_FALSE(check_witness(in, two));
    in.budget = 2;
    CHECK(check_witness(in, two));
    CHECK(solution_cost(in, two) == 2);
    in.agent_prices = std::vector<std::int64_t>{1, 1, 1, 3, 1};
    CHECK(solution_cost(in, two) == 2);
}

TEST_CASE("check_witness on bribery and microbribery")
{
    AttackInstance in;
    in.profile = ex1();
    in.rule = SocialRule::consent(2, 1);
    in.family = Family::GB;
    in.aplus = names(in.profile, {"a5"});
    in.budget = 1;
    Solution s = Solution::of(SolutionKind::Bribed, names(in.profile, {"a5"}));
    s.rows.push_back(RowRewrite{4, in.profile.everyone()});
    CHECK(check_witness(in, s));
    s.rows.clear();
    CHECK_THROWS_AS(check_witness(in, s), Error);

    AttackInstance mb = in;
    mb.family = Family::GMB;
    Solution m = Solution::of(SolutionKind::Flipped, {});
    m.entries.push_back(EntryChange{4, 4, Cell::Pos});
    CHECK(check_witness(mb, m));
    mb.pair_prices = std::vector<std::int64_t>(25, 2);
    CHECK_FALSE(check_witness(mb, m));
}

TEST_CASE("partition control recomputes the survivors")
{
    AttackInstance in;
    in.profile = ex1();
    in.rule = SocialRule::consent(2, 1);
    in.family = Family::GCPI;
    in.aplus = names(in.profile, {"a3"});
    in.aminus = names(in.profile, {"a1"});
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
        Solution u = Solution::of(SolutionKind::Partition, IndividualSet::from_bits(bits));
        IndividualSet left = u.members, right = in.profile.everyone() - u.members;
        IndividualSet v = eval(in.rule, left, in.profile) | eval(in.rule, right, in.profile);
        CHECK(outcome(in, u) == eval(in.rule, v, in.profile));
    }
}

TEST_CASE("diagnostics")
{
    // a1 qualifies only itself, no one else qualifies a1.
    Profile p = fixtures::rows(ProfileKind::Binary, {"+---", "----", "----", "----"});
    AttackInstance in;
    in.profile = p;
    in.rule = SocialRule::consent(3, 1);
    in.family = Family::GB;
    in.aplus = names(p, {"a1"});
    in.budget = 1;
    InstanceDiagnostics d = diagnostics(in);
    REQUIRE(d.per_individual.size() == 1);
    CHECK(d.per_individual[0].missing == 2);
    CHECK(d.per_individual[0].choices == 3);
    CHECK(d.s_star == 1);
    CHECK_FALSE(d.t_star.has_value());

    Profile full = fixtures::rows(ProfileKind::Binary, {"++--", "+---", "+---", "----"});
    in.profile = full;
    d = diagnostics(in);
    CHECK(d.per_individual[0].missing == 0);
    CHECK(d.s_star == 1);

    in.rule = SocialRule::consent(2, 2);
    CHECK_THROWS_AS(diagnostics(in), Error);

    AttackInstance dst;
    dst.profile = p;
    dst.rule = SocialRule::consent(1, 3);
    dst.family = Family::GB;
    dst.objective = Objective::Destructive;
    dst.aminus = names(p, {"a2"});
    dst.budget = 1;
    d = diagnostics(dst);
    CHECK(d.t_star == 0);
    CHECK(d.per_individual[0].missing == 0);
    CHECK(d.per_individual[0].choices == 0);
}

TEST_CASE("instance text format round trip")
{
    AttackInstance in = ex1_gcai();
    in.agent_prices = std::vector<std::int64_t>{1, 2, 1, 1, 1};
    std::string text = format_instance(in);
    AttackInstance back = parse_instance(text);
    CHECK(format_instance(back) == text);
    CHECK(instance_digest(back) == instance_digest(in));
    CHECK(instance_digest(back).size() == 16);
    in.budget = 2;
    CHECK(instance_digest(back) != instance_digest(in));
    CHECK_THROWS_AS(parse_instance("gidinst v1\nproblem XYZ\n"), Error);
    CHECK(content_digest("") == "cbf29ce484222325");
}

TEST_CASE("brute-force deletion witnesses avoid the targets")
{
    InstanceShape shape;
    shape.family = Family::GCDI;
    shape.objectives = {Objective::Constructive, Objective::Destructive, Objective::General};
    shape.rules = {SocialRule::consent(1, 2), SocialRule::consent(2, 2), SocialRule::lsr(), SocialRule::csr()};
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        AttackInstance in = gen_random_instance(shape, seed);
        Verdict v = solve_brute(in);
        if (v.is_yes())
            CHECK_FALSE(v.witness->members.intersects(in.aplus | in.aminus));
    }
}
