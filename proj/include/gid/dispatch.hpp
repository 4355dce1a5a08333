#pragma once

#include <string>
#include <vector>

#include "gid/instance.hpp"
#include "gid/oracle.hpp"

namespace gid {

struct SolveReport {
    Verdict verdict;
    std::string solver;
};

// "auto", "brute", and every specialized solver by name.
const std::vector<std::string>& solver_names();

// Name of the solver `auto` would run, ignoring immunity.
std::string auto_solver_for(const AttackInstance& instance);

// Immunity table, then the first specialized solver whose preconditions hold,
// then the ILP for consent control, then brute force. A solver that refuses
// with InstanceTooLarge is reported, not skipped.
SolveReport solve_auto(const AttackInstance& instance, const SearchBudget& budget = {});

// Throws InvalidArgument for unknown names.
SolveReport solve_with(const AttackInstance& instance, const std::string& solver, const SearchBudget& budget = {});

} // namespace gid
