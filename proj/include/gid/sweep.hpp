#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gid/generators.hpp"
#include "gid/oracle.hpp"

namespace gid {

// Cross-validation of one fast procedure against exhaustive search.
// Control/bribery solvers: any name accepted by solve_with, or "immunity".
// Partial queries: "pqi", "nqi", "r_pqi_flow", "r_pqi", "r_nqi".
struct SweepSpec {
    std::string solver;
    InstanceShape shape;
    PartialShape partial;
    std::size_t count = 100;
    std::uint64_t seed = 1; // instance i uses seed + i
    SearchBudget budget;
};

struct SweepRow {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string digest;
    int n = 0;
    std::string fast;  // YES, NO, IMMUNE, true, false, or error
    std::string brute;
    bool agree = false;
    bool witness_ok = true;
    std::string note;  // solver name, immunity tag, or error text
    double fast_ms = 0;
    double brute_ms = 0;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    bool ok() const { return disagreements == 0; }
};

bool is_partial_sweep(const std::string& solver);

// Rows come back in index order whatever the thread count.
SweepSummary run_sweep(const SweepSpec& spec, unsigned jobs = 1);

} // namespace gid
