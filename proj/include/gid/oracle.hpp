#pragma once

#include <cstdint>
#include <optional>

#include "gid/instance.hpp"

namespace gid {

inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

struct SearchBudget {
    // Largest |U| (or |M|) the search may need; larger budgets are refused.
    std::optional<int> max_subset_size;
    std::optional<std::uint64_t> node_limit = kDefaultNodeLimit;
};

// Exhaustive search. None of these consult the immunity table.
Verdict solve_control_brute(const AttackInstance& instance, const SearchBudget& budget = {});
Verdict solve_bribery_brute(const AttackInstance& instance, const SearchBudget& budget = {});
Verdict solve_microbribery_brute(const AttackInstance& instance, const SearchBudget& budget = {});
// Dispatches on the family.
Verdict solve_brute(const AttackInstance& instance, const SearchBudget& budget = {});

struct PartialAnswer {
    bool possible = false;
    bool necessary = false;
};

// Enumerates every extension (or every r-extension when r is set).
PartialAnswer pqi_nqi_brute(const Profile& profile, IndividualSet s, const SocialRule& rule,
                            std::optional<int> r = std::nullopt, const SearchBudget& budget = {});

} // namespace gid
