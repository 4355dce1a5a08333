#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gid/instance.hpp"

namespace gid {

enum class Sense { AtLeast, AtMost };

// constant + sign * sum_{j in vars} x_j  (>= | <=)  bound
struct IlpConstraint {
    std::string label; // "3.1", "3.2", "4.1", "4.2"
    Individual target = 0;
    std::int64_t constant = 0;
    int sign = 1; // +1 when adding (GCAI), -1 when deleting (GCDI)
    Sense sense = Sense::AtLeast;
    std::int64_t bound = 0;
    std::vector<std::size_t> vars;

    std::int64_t lhs(const std::vector<std::int64_t>& x) const;
    bool holds(const std::vector<std::int64_t>& x) const;
};

struct IlpModel {
    Family family = Family::GCAI;
    std::vector<Individual> order;              // λ: A+ ascending, then A- ascending
    std::vector<std::vector<int>> beta_vectors; // entries ±1, one per member of `order`
    std::vector<std::int64_t> counts;           // n_β
    std::vector<std::vector<Individual>> members; // N_β ascending
    std::vector<IlpConstraint> constraints;
    std::int64_t budget = 0;

    std::size_t variable_count() const { return beta_vectors.size(); }
    bool satisfies(const std::vector<std::int64_t>& x) const;
    // Assignment induced by a candidate set U.
    std::vector<std::int64_t> assignment_for(IndividualSet u) const;
    // Lexicographically smallest individuals per vector.
    IndividualSet witness_for(const std::vector<std::int64_t>& x) const;
};

struct IlpOptions {
    std::size_t max_vectors = 4096;
    std::uint64_t node_limit = 50'000'000;
};

IlpModel build_ilp(const AttackInstance& instance);
std::optional<std::vector<std::int64_t>> solve_ilp(const IlpModel& model, const IlpOptions& options = {});
Verdict solve_fpt_ilp(const AttackInstance& instance, const IlpOptions& options = {});

} // namespace gid
