#include "gid/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "gid/combinatorics.hpp"
#include "gid/error.hpp"

namespace gid {

std::uint64_t count_subsets_up_to(int universe, int max_size)
{
    constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t c = 1; // C(universe, k)
    for (int k = 0; k <= std::min(universe, max_size); ++k) {
        if (k > 0) {
            // c * (universe - k + 1) / k without overflow for our sizes.
            unsigned __int128 next = static_cast<unsigned __int128>(c) * static_cast<unsigned>(universe - k + 1) /
                                     static_cast<unsigned>(k);
            c = next > kCap ? kCap : static_cast<std::uint64_t>(next);
        }
        total = kCap - total < c ? kCap : total + c;
    }
    return total;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

void guard_nodes(std::uint64_t bound, const SearchBudget& sb)
{
    if (sb.node_limit && bound > *sb.node_limit)
        throw Error(Errc::InstanceTooLarge, "enumeration bound " + std::to_string(bound) + " exceeds node limit " +
                                                std::to_string(*sb.node_limit));
}

void guard_size(std::int64_t needed, const SearchBudget& sb)
{
    if (sb.max_subset_size && needed > *sb.max_subset_size)
        throw Error(Errc::InstanceTooLarge, "budget allows witnesses larger than max subset size " +
                                                std::to_string(*sb.max_subset_size));
}

void require_valid(const AttackInstance& in, Family family)
{
    if (in.family != family)
        throw Error(Errc::PreconditionViolated, std::string("expected a ") + to_string(family) + " instance");
    auto v = validate(in);
    for (const Violation& x : v)
        if (!x.warning)
            throw Error(Errc::PreconditionViolated, std::string(to_string(x.kind)) + ": " + x.detail);
}

Verdict confirmed(const AttackInstance& in, Solution s)
{
    if (!check_witness(in, s))
        throw Error(Errc::PreconditionViolated, "internal: brute-force witness failed verification");
    return Verdict::yes(std::move(s));
}

int budget_size(const AttackInstance& in, int cap)
{
    return static_cast<int>(std::min<std::int64_t>(*in.budget, cap));
}

} // namespace

Verdict solve_control_brute(const AttackInstance& in, const SearchBudget& sb)
{
    if (in.family != Family::GCAI && in.family != Family::GCDI && in.family != Family::GCPI)
        throw Error(Errc::PreconditionViolated, "control search needs GCAI, GCDI or GCPI");
    if (in.profile.kind() != ProfileKind::Binary)
        throw Error(Errc::PreconditionViolated, "control search needs a binary profile");
    require_valid(in, in.family);

    const IndividualSet everyone = in.profile.everyone();
    const SolutionKind kind = solution_kind_for(in.family);

    if (in.family == Family::GCPI) {
        if (in.n() == 0)
            return in.targets_satisfied({}) ? confirmed(in, Solution::of(kind, {})) : Verdict::no();
        guard_nodes(std::uint64_t{1} << (in.n() - 1), sb);
        std::optional<Solution> found;
        for_each_subset_by_size(everyone - IndividualSet::single(0), in.n(), [&](IndividualSet rest) {
            IndividualSet u = rest | IndividualSet::single(0);
            IndividualSet v = eval(in.rule, u, in.profile) | eval(in.rule, everyone - u, in.profile);
            if (in.targets_satisfied(eval(in.rule, v, in.profile))) {
                found = Solution::of(kind, u);
                return true;
            }
            return false;
        });
        return found ? confirmed(in, *found) : Verdict::no();
    }

    IndividualSet domain =
        in.family == Family::GCAI ? everyone - in.pool : everyone - (in.aplus | in.aminus);
    int max_size = budget_size(in, domain.size());
    guard_size(max_size, sb);
    guard_nodes(count_subsets_up_to(domain.size(), max_size), sb);

    std::optional<Solution> found;
    for_each_subset_by_size(domain, max_size, [&](IndividualSet u) {
        IndividualSet sub = in.family == Family::GCAI ? in.pool | u : everyone - u;
        if (in.targets_satisfied(eval(in.rule, sub, in.profile))) {
            found = Solution::of(kind, u);
            return true;
        }
        return false;
    });
    return found ? confirmed(in, *found) : Verdict::no();
}

Verdict solve_bribery_brute(const AttackInstance& in, const SearchBudget& sb)
{
    if (in.profile.kind() != ProfileKind::Binary)
        throw Error(Errc::PreconditionViolated, "bribery search needs a binary profile");
    if (in.r_restriction)
        throw Error(Errc::PreconditionViolated, "bribery search does not preserve r-profiles");
    require_valid(in, Family::GB);

    const IndividualSet everyone = in.profile.everyone();
    const IndividualSet targets = in.aplus | in.aminus;
    const bool reach_rule = in.rule.is_csr() || in.rule.is_lsr();
    int max_size = budget_size(in, in.n());
    guard_size(max_size, sb);

    // Rewrite candidates for a bribed set U, as functions of the bribed member.
    // Quota rules: qualify A+ and disqualify A-, trying both self-opinions for
    // bribed targets. Reachability rules: every bribed row qualifies the same
    // W with A+ ⊆ W ⊆ N \ A-, which covers the all-qualify rewrite; the
    // "self plus A+" rewrite is tried first.
    std::uint64_t free_bits = (everyone - targets).size();
    std::uint64_t per_set =
        reach_rule ? 1 + (std::uint64_t{1} << free_bits) : (std::uint64_t{1} << std::min(max_size, 62));
    guard_nodes(saturating_mul(count_subsets_up_to(in.n(), max_size), per_set), sb);

    std::optional<Solution> found;
    Profile work = in.profile;
    auto try_rows = [&](IndividualSet u, const std::vector<IndividualSet>& rows) {
        std::size_t i = 0;
        for (Individual a : u)
            work.set_row(a, rows[i++]);
        bool ok = in.targets_satisfied(eval(in.rule, everyone, work));
        if (ok) {
            Solution s = Solution::of(SolutionKind::Bribed, u);
            i = 0;
            for (Individual a : u)
                s.rows.push_back(RowRewrite{a, rows[i++]});
            found = std::move(s);
        }
        for (Individual a : u)
            for (Individual b = 0; b < in.n(); ++b)
                work.set(a, b, in.profile.at(a, b));
        return ok;
    };

    for_each_subset_by_size(everyone, max_size, [&](IndividualSet u) {
        if (in.agent_cost(u) > *in.budget)
            return false;
        std::vector<IndividualSet> rows(static_cast<std::size_t>(u.size()));
        if (reach_rule) {
            std::size_t i = 0;
            for (Individual a : u)
                rows[i++] = (in.aplus | IndividualSet::single(a)) - in.aminus;
            if (try_rows(u, rows))
                return true;
            IndividualSet free = everyone - targets;
            // Subsets of `free` in increasing order of the compressed mask;
            // the full set (all-qualify) comes first.
            std::vector<Individual> fv = free.to_vector();
            for (std::uint64_t m = (std::uint64_t{1} << fv.size()); m-- > 0;) {
                IndividualSet w = in.aplus;
                for (std::size_t k = 0; k < fv.size(); ++k)
                    if ((m >> k) & 1U)
                        w.insert(fv[k]);
                std::fill(rows.begin(), rows.end(), w);
                if (try_rows(u, rows))
                    return true;
            }
            return false;
        }
        std::vector<Individual> uv = u.to_vector();
        std::vector<std::size_t> flexible;
        for (std::size_t i = 0; i < uv.size(); ++i)
            if (targets.contains(uv[i]))
                flexible.push_back(i);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << flexible.size()); ++m) {
            for (std::size_t i = 0; i < uv.size(); ++i)
                rows[i] = (in.aplus | IndividualSet::single(uv[i])) - in.aminus;
            // Bit set = flip the default self-opinion of that bribed target.
            for (std::size_t k = 0; k < flexible.size(); ++k) {
                if (((m >> k) & 1U) == 0)
                    continue;
                std::size_t i = flexible[k];
                if (rows[i].contains(uv[i]))
                    rows[i].erase(uv[i]);
                else
                    rows[i].insert(uv[i]);
            }
            if (try_rows(u, rows))
                return true;
        }
        return false;
    });
    return found ? confirmed(in, *found) : Verdict::no();
}

Verdict solve_microbribery_brute(const AttackInstance& in, const SearchBudget& sb)
{
    if (in.profile.kind() == ProfileKind::Partial)
        throw Error(Errc::PreconditionViolated, "microbribery search needs a binary or ternary profile");
    require_valid(in, Family::GMB);

    const int n = in.n();
    const IndividualSet everyone = in.profile.everyone();
    int max_size = budget_size(in, n * n);
    guard_size(max_size, sb);
    guard_nodes(saturating_mul(count_subsets_up_to(n * n, max_size), std::uint64_t{1} << std::min(max_size, 62)),
                sb);

    std::optional<Solution> found;
    Profile work = in.profile;
    for_each_combination(n * n, max_size, [&](std::span<const int> pairs) {
        std::int64_t cost = 0;
        std::vector<std::size_t> stars;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int from = pairs[i] / n, to = pairs[i] % n;
            cost += in.pair_price(from, to);
            if (in.profile.at(from, to) == Cell::Indifferent)
                stars.push_back(i);
        }
        if (cost > *in.budget)
            return false;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << stars.size()); ++m) {
            std::vector<EntryChange> changes;
            std::size_t star_k = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                int from = pairs[i] / n, to = pairs[i] % n;
                Cell cur = in.profile.at(from, to);
                Cell v;
                if (cur == Cell::Indifferent)
                    v = ((m >> star_k++) & 1U) ? Cell::Neg : Cell::Pos;
                else
                    v = cur == Cell::Pos ? Cell::Neg : Cell::Pos;
                changes.push_back(EntryChange{from, to, v});
                work.set(from, to, v);
            }
            bool ok = in.targets_satisfied(eval(in.rule, everyone, work)) &&
                      (!in.r_restriction || is_r_profile(work, *in.r_restriction));
            for (const EntryChange& e : changes)
                work.set(e.from, e.to, in.profile.at(e.from, e.to));
            if (ok) {
                Solution s = Solution::of(SolutionKind::Flipped, {});
                s.entries = std::move(changes);
                found = std::move(s);
                return true;
            }
        }
        return false;
    });
    return found ? confirmed(in, *found) : Verdict::no();
}

Verdict solve_brute(const AttackInstance& in, const SearchBudget& sb)
{
    switch (in.family) {
    case Family::GB: return solve_bribery_brute(in, sb);
    case Family::GMB: return solve_microbribery_brute(in, sb);
    default: return solve_control_brute(in, sb);
    }
}

PartialAnswer pqi_nqi_brute(const Profile& profile, IndividualSet s, const SocialRule& rule, std::optional<int> r,
                            const SearchBudget& sb)
{
    if (profile.kind() == ProfileKind::Ternary)
        throw Error(Errc::WrongKind, "extension queries need a partial profile");
    if (s.empty())
        throw Error(Errc::PreconditionViolated, "query set must be nonempty");
    if (!s.is_subset_of(profile.everyone()))
        throw Error(Errc::IndexOutOfRange, "query set outside N");
    const int n = profile.size();
    check_applicable(rule, Profile(n));

    Profile ext(n);
    ext.set_names(profile.names());
    std::vector<std::pair<Individual, Individual>> unknown;
    for (Individual a = 0; a < n; ++a)
        for (Individual b = 0; b < n; ++b) {
            Cell c = profile.at(a, b);
            if (c == Cell::Unknown)
                unknown.emplace_back(a, b);
            else
                ext.set(a, b, c);
        }

    PartialAnswer ans{false, true};
    auto visit = [&]() {
        bool q = s.is_subset_of(eval(rule, ext.everyone(), ext));
        ans.possible = ans.possible || q;
        ans.necessary = ans.necessary && q;
        return ans.possible && !ans.necessary;
    };

    if (!r) {
        if (unknown.size() >= 63)
            throw Error(Errc::InstanceTooLarge, "too many unknown entries");
        std::uint64_t total = std::uint64_t{1} << unknown.size();
        guard_nodes(total, sb);
        for (std::uint64_t m = 0; m < total; ++m) {
            for (std::size_t k = 0; k < unknown.size(); ++k)
                ext.set(unknown[k].first, unknown[k].second, ((m >> k) & 1U) ? Cell::Pos : Cell::Neg);
            if (visit())
                break;
        }
        return ans;
    }

    // r-extensions: each row independently picks which unknowns become +1.
    std::vector<std::vector<Individual>> row_unknown(static_cast<std::size_t>(n));
    std::vector<int> need(static_cast<std::size_t>(n));
    std::uint64_t bound = 1;
    for (Individual a = 0; a < n; ++a) {
        auto ua = static_cast<std::size_t>(a);
        row_unknown[ua] = profile.undecided_in_row(a).to_vector();
        need[ua] = *r - profile.qualified_by(a).size();
        if (need[ua] < 0 || need[ua] > static_cast<int>(row_unknown[ua].size()))
            throw Error(Errc::NoRExtension, "row " + profile.name(a) + " cannot reach exactly r positives");
        bound = saturating_mul(bound, count_subsets_up_to(static_cast<int>(row_unknown[ua].size()), need[ua]) -
                                          count_subsets_up_to(static_cast<int>(row_unknown[ua].size()),
                                                              need[ua] - 1));
    }
    guard_nodes(bound, sb);

    std::function<bool(Individual)> rec = [&](Individual a) -> bool {
        if (a == n)
            return visit();
        auto ua = static_cast<std::size_t>(a);
        const auto& cells = row_unknown[ua];
        bool stop = false;
        // Only combinations of exactly need[a] cells.
        for_each_combination(static_cast<int>(cells.size()), need[ua], [&](std::span<const int> idx) {
            if (static_cast<int>(idx.size()) != need[ua])
                return false;
            for (Individual b : cells)
                ext.set(a, b, Cell::Neg);
            for (int i : idx)
                ext.set(a, cells[static_cast<std::size_t>(i)], Cell::Pos);
            stop = rec(a + 1);
            return stop;
        });
        return stop;
    };
    rec(0);
    return ans;
}

} // namespace gid
