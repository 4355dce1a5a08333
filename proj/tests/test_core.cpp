#include <doctest.h>

#include "gid/error.hpp"
#include "gid/generators.hpp"
#include "gid/profile_io.hpp"
#include "gid/rule.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace gid;
using fixtures::ex1;
using fixtures::names;

namespace {

IndividualSet everyone_eval(const SocialRule& r, const Profile& p) { return eval(r, p.everyone(), p); }

// All (s,t) with s,t >= 1 and s + t <= n + 2.
template <class F>
void for_each_quota(int n, F&& f)
{
    for (int s = 1; s <= n + 1; ++s)
        for (int t = 1; s + t <= n + 2; ++t)
            f(s, t);
}

} // namespace

TEST_CASE("worked example sets")
{
    Profile p = ex1();
    CHECK(everyone_eval(SocialRule::consent(1, 1), p) == names(p, {"a1", "a3", "a4"}));
    CHECK(everyone_eval(SocialRule::consent(1, 2), p) == names(p, {"a1", "a2", "a3", "a4"}));
    CHECK(everyone_eval(SocialRule::consent(2, 1), p) == names(p, {"a1", "a3"}));
    CHECK(everyone_eval(SocialRule::lsr(), p) == p.everyone());

    EvalTrace trace;
    CHECK(eval(SocialRule::csr(), p.everyone(), p, &trace) == names(p, {"a2", "a3", "a5"}));
    REQUIRE(trace.rounds.size() == 3);
    CHECK(trace.rounds[0] == names(p, {"a3"}));
    CHECK(trace.rounds[1] == names(p, {"a2", "a3"}));
    CHECK(trace.rounds[2] == names(p, {"a2", "a3", "a5"}));
}

TEST_CASE("empty subset and empty profile")
{
    Profile p = ex1();
    for (const SocialRule& r : {SocialRule::consent(2, 2), SocialRule::csr(), SocialRule::lsr()})
        CHECK(eval(r, IndividualSet{}, p).empty());
    Profile none(0);
    CHECK(eval(SocialRule::consent(1, 1), none.everyone(), none).empty());
    CHECK(eval(SocialRule::csr(), none.everyone(), none).empty());
}

TEST_CASE("eval errors")
{
    Profile p = ex1();
    CHECK_THROWS_WITH_AS(eval(SocialRule::consent(4, 4), p.everyone(), p), doctest::Contains("QuotaConstraintViolated"),
                         Error);
    CHECK_NOTHROW(eval(SocialRule::consent(3, 4), p.everyone(), p));
    CHECK_THROWS_AS(eval(SocialRule::consent(1, 1), IndividualSet{7}, p), Error);
    Profile tern = fixtures::rows(ProfileKind::Ternary, {"*+", "+*"});
    CHECK_THROWS_AS(eval(SocialRule::consent(1, 1), tern.everyone(), tern), Error);
    CHECK_THROWS_AS(eval(SocialRule::csr(), tern.everyone(), tern), Error);
    Profile part = fixtures::rows(ProfileKind::Partial, {"?+", "+?"});
    CHECK_THROWS_AS(eval(SocialRule::ternary(1, 1, 1), part.everyone(), part), Error);
    try {
        eval(SocialRule::lsr(), tern.everyone(), tern);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RuleNotApplicable);
    }
}

TEST_CASE("rule spec round trip")
{
    for (const char* s : {"consent:2,1", "csr", "lsr", "ternary:2,3,2"})
        CHECK(SocialRule::parse(s).to_string() == s);
    CHECK_THROWS_AS(SocialRule::parse("consent:2"), Error);
    CHECK_THROWS_AS(SocialRule::parse("plurality"), Error);
    CHECK(SocialRule::ternary_majority(2, 2, 5) == SocialRule::ternary(2, 3, 2));
}

TEST_CASE("ternary rule on an indifferent diagonal")
{
    Profile p = fixtures::rows(ProfileKind::Ternary, {"*++++", "+*+++", "++*++", "+++*+", "++++*"});
    CHECK(everyone_eval(SocialRule::ternary(2, 3, 2), p) == p.everyone());
    CHECK(everyone_eval(SocialRule::ternary(2, 5, 2), p).empty());
}

TEST_CASE("negation")
{
    Profile p = ex1();
    Profile q = negate(p);
    const char* want = "+--++";
    for (int b = 0; b < 5; ++b)
        CHECK(q.at(2, b) == (want[b] == '+' ? Cell::Pos : Cell::Neg));
    CHECK(negate(q) == p);
    CHECK(everyone_eval(SocialRule::consent(1, 2), p) ==
          p.everyone() - everyone_eval(SocialRule::consent(2, 1), q));
    CHECK_THROWS_AS(negate(fixtures::rows(ProfileKind::Ternary, {"*"})), Error);
    CHECK_THROWS_AS(negate(fixtures::rows(ProfileKind::Partial, {"?"})), Error);
}

TEST_CASE("qualification graph")
{
    Profile p = ex1();
    QualificationGraph g = qualification_graph(p);
    CHECK(g.edge_count() == 14);
    for (const char* loop : {"a1", "a3", "a4"}) {
        Individual a = *p.find(loop);
        CHECK(g.has_edge(a, a));
    }
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK(qualification_graph(Profile(4)).edge_count() == 0);
    Profile full(3);
    for (int a = 0; a < 3; ++a)
        full.set_row(a, full.everyone());
    CHECK(qualification_graph(full).edge_count() == 9);
    CHECK_THROWS_AS(qualification_graph(fixtures::rows(ProfileKind::Ternary, {"*"})), Error);
}

TEST_CASE("profile text format")
{
    Profile p = ex1();
    CHECK(format_profile(p) == fixtures::kEx1);
    CHECK(parse_profile(format_profile(p)) == p);
    Profile t = fixtures::rows(ProfileKind::Ternary, {"*+-", "+*-", "--*"});
    CHECK(parse_profile(format_profile(t)) == t);
    CHECK_THROWS_AS(parse_profile("gid v1\nkind partial\nn 2\nrow a1 ? *\nrow a2 + +\n"), Error);
    CHECK_THROWS_AS(parse_profile("gid v1\nkind binary\nn 2\nrow a1 + ?\nrow a2 + +\n"), Error);
    CHECK_THROWS_AS(parse_profile("gid v1\nkind binary\nn 2\nrow a1 + +\n"), Error);
    CHECK_THROWS_AS(parse_profile("gid v2\n"), Error);
    CHECK(parse_profile("gid v1\n# comment\n\nkind binary\nn 0\n").size() == 0);
}

TEST_CASE("eval matches the independent evaluator")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        bool tern = seed % 3 == 0;
        Profile p = gen_random_profile(n, tern ? ProfileKind::Ternary : ProfileKind::Binary, 0.3, seed);
        naive::Matrix m = naive::matrix_of(p);
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); sub += 1 + (seed % 3)) {
            IndividualSet t = IndividualSet::from_bits(sub);
            naive::Members tm = naive::members_of(t, n);
            for (int s = 1; s <= n + 1; ++s)
                for (int tq = 1; s + tq <= n + 2; ++tq) {
                    if (tern) {
                        for (int sp = 1; sp <= n; ++sp)
                            CHECK(eval(SocialRule::ternary(s, sp, tq), t, p) ==
                                  naive::set_of(naive::ternary(m, tm, s, sp, tq)));
                    } else {
                        CHECK(eval(SocialRule::consent(s, tq), t, p) == naive::set_of(naive::consent(m, tm, s, tq)));
                    }
                }
            if (!tern) {
                std::vector<naive::Members> rounds;
                EvalTrace trace;
                CHECK(eval(SocialRule::csr(), t, p, &trace) == naive::set_of(naive::csr(m, tm, &rounds)));
                REQUIRE(trace.rounds.size() == rounds.size());
                for (std::size_t i = 0; i < rounds.size(); ++i)
                    CHECK(trace.rounds[i] == naive::set_of(rounds[i]));
                CHECK(eval(SocialRule::lsr(), t, p) == naive::set_of(naive::lsr(m, tm)));
            }
        }
    }
}

TEST_CASE("duality between a profile and its negation")
{
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Profile p = gen_random_profile(n, ProfileKind::Binary, 0, seed);
        Profile q = negate(p);
        for_each_quota(n, [&](int s, int t) {
            CHECK(everyone_eval(SocialRule::consent(s, t), p) ==
                  p.everyone() - everyone_eval(SocialRule::consent(t, s), q));
        });
    }
}

TEST_CASE("consent monotonicity under single flips")
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Profile p = gen_random_profile(n, ProfileKind::Binary, 0, seed);
        for_each_quota(n, [&](int s, int t) {
            SocialRule r = SocialRule::consent(s, t);
            IndividualSet before = everyone_eval(r, p);
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a) {
                    if (a == b || p.at(b, a) != Cell::Neg || !before.contains(a))
                        continue;
                    Profile q = p;
                    q.set(b, a, Cell::Pos);
                    CHECK(everyone_eval(r, q).contains(a));
                }
        });
    }
}

TEST_CASE("CSR and LSR structure")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Profile p = gen_random_profile(n, ProfileKind::Binary, 0, seed);
        IndividualSet t = IndividualSet::from_bits((seed * 0x9e3779b97f4a7c15ULL) >> 20) & p.everyone();
        for (const SocialRule& r : {SocialRule::csr(), SocialRule::lsr()}) {
            IndividualSet f = eval(r, t, p);
            CHECK(f.is_subset_of(t));
            // Closed: anyone in T qualified by a member is a member.
            for (Individual a : f)
                CHECK((p.qualified_by(a) & t).is_subset_of(f));
            EvalTrace tr;
            eval(r, t, p, &tr);
            for (std::size_t i = 1; i < tr.rounds.size(); ++i)
                CHECK(tr.rounds[i - 1].is_subset_of(tr.rounds[i]));
        }
        for (Individual a : t)
            if (p.self_qualifies(a))
                CHECK(eval(SocialRule::lsr(), t, p).contains(a));
        bool k0_empty = true;
        for (Individual a : t)
            if (t.is_subset_of(p.qualifiers(a)))
                k0_empty = false;
        if (k0_empty)
            CHECK(eval(SocialRule::csr(), t, p).empty());
    }
}

TEST_CASE("ternary rule reduces to consent on binary profiles")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Profile p = gen_random_profile(n, ProfileKind::Binary, 0, seed);
        std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                rows[a].push_back(p.at(a, b));
        Profile as_ternary = Profile::from_rows(ProfileKind::Ternary, rows);
        for_each_quota(n, [&](int s, int t) {
            for (int sp = 1; sp <= n; ++sp)
                CHECK(everyone_eval(SocialRule::ternary(s, sp, t), as_ternary) ==
                      everyone_eval(SocialRule::consent(s, t), p));
        });
    }
}

TEST_CASE("r-profile check")
{
    Profile p(3);
    for (int a = 0; a < 3; ++a)
        p.set_row(a, IndividualSet::single((a + 1) % 3));
    CHECK(is_r_profile(p, 1));
    CHECK_FALSE(is_r_profile(p, 2));
    CHECK_FALSE(is_r_profile(ex1(), 3));
}
