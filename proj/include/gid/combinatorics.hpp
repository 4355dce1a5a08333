#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gid/individual_set.hpp"

namespace gid {

// Saturating sum_{k=0}^{max_size} C(universe, k).
std::uint64_t count_subsets_up_to(int universe, int max_size);

// Visits every k-subset of {0..universe-1} for k = 0..max_size, size first and
// lexicographic within a size. Stops early when visit returns true; returns
// whether it stopped.
template <class Visit>
bool for_each_combination(int universe, int max_size, Visit&& visit)
{
    if (max_size > universe)
        max_size = universe;
    std::vector<int> idx;
    for (int k = 0; k <= max_size; ++k) {
        idx.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            if (visit(std::span<const int>(idx)))
                return true;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == universe - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

// Same order over the members of `domain`.
template <class Visit>
bool for_each_subset_by_size(IndividualSet domain, int max_size, Visit&& visit)
{
    std::vector<Individual> members = domain.to_vector();
    return for_each_combination(static_cast<int>(members.size()), max_size, [&](std::span<const int> idx) {
        IndividualSet u;
        for (int i : idx)
            u.insert(members[static_cast<std::size_t>(i)]);
        return visit(u);
    });
}

} // namespace gid
