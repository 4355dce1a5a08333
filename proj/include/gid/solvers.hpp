#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gid/instance.hpp"

namespace gid {

// Every entry point consults check_immunity first and answers IMMUNE when a
// tabulated result applies.

// Constructive bribery, consent(s,1): bribe the self-disqualifying targets,
// then at most s further individuals, all rewritten to qualify everyone.
Verdict solve_cgb_xp(const AttackInstance& instance);

// Destructive bribery, consent(1,t), through negation and consent(t,1).
Verdict solve_dgb_xp(const AttackInstance& instance);

// Deletion control under consent(2,2) by forced deletions.
Verdict solve_gcdi_22(const AttackInstance& instance);

struct R1Budget {
    std::map<Individual, int> per_target; // q_a for self-qualifying targets
    std::map<Individual, int> slack;      // d_a for self-disqualifying targets
    std::int64_t d = 0;
};

// Constructive adding control on 1-profiles, consent(s,t) with s >= 2.
Verdict solve_cgcai_r1(const AttackInstance& instance);
// The budget bookkeeping of the same algorithm; nullopt when a
// self-disqualifying target already has t disqualifiers in T.
std::optional<R1Budget> cgcai_r1_budget(const AttackInstance& instance);

struct TargetPlan {
    Individual who = 0;
    bool feasible = false;
    std::int64_t cost = 0;
    std::vector<EntryChange> changes;
};

struct MicrobriberyPlan {
    bool feasible = false; // every target can be fixed
    std::int64_t total = 0;
    std::vector<TargetPlan> per_target;
};

// Per-target cheapest fixes under consent or ternary rules.
MicrobriberyPlan plan_microbribery(const AttackInstance& instance);
Verdict solve_microbribery_consent(const AttackInstance& instance);

} // namespace gid
