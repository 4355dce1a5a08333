#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gid/individual_set.hpp"
#include "gid/profile.hpp"
#include "gid/rule.hpp"

namespace gid {

enum class Family { GCAI, GCDI, GCPI, GB, GMB };
enum class Objective { Constructive, Destructive, Exact, General };

const char* to_string(Family f);
const char* to_string(Objective o);
Family parse_family(const std::string& s);
Objective parse_objective(const std::string& s);

struct AttackInstance {
    Profile profile;
    SocialRule rule;
    Family family = Family::GCAI;
    Objective objective = Objective::Constructive;
    IndividualSet aplus;
    IndividualSet aminus;
    IndividualSet pool; // T, GCAI only
    std::optional<std::int64_t> budget;
    std::optional<std::vector<std::int64_t>> agent_prices; // size n
    std::optional<std::vector<std::int64_t>> pair_prices;  // n*n, row-major
    std::optional<int> r_restriction;

    int n() const { return profile.size(); }
    std::int64_t agent_price(Individual a) const;
    std::int64_t pair_price(Individual from, Individual to) const;
    std::int64_t agent_cost(IndividualSet u) const;
    // T for GCAI, N otherwise.
    IndividualSet start_set() const;
    bool targets_satisfied(IndividualSet qualified) const;
};

enum class SolutionKind { Added, Deleted, Partition, Bribed, Flipped };

struct RowRewrite {
    Individual who = 0;
    IndividualSet qualifies;
    friend bool operator==(const RowRewrite&, const RowRewrite&) = default;
};

struct EntryChange {
    Individual from = 0;
    Individual to = 0;
    Cell value = Cell::Pos;
    friend bool operator==(const EntryChange&, const EntryChange&) = default;
};

struct Solution {
    SolutionKind kind = SolutionKind::Added;
    IndividualSet members;           // U
    std::vector<RowRewrite> rows;    // bribery: one rewrite per member of U
    std::vector<EntryChange> entries; // microbribery: M with new values

    static Solution of(SolutionKind kind, IndividualSet u) { return Solution{kind, u, {}, {}}; }
    friend bool operator==(const Solution&, const Solution&) = default;
};

SolutionKind solution_kind_for(Family f);

enum class Answer { Yes, No, Immune };
const char* to_string(Answer a);

struct Verdict {
    Answer answer = Answer::No;
    std::optional<Solution> witness;
    std::optional<std::string> immunity_ref;

    static Verdict yes(Solution s) { return Verdict{Answer::Yes, std::move(s), std::nullopt}; }
    static Verdict no() { return Verdict{}; }
    static Verdict immune(std::string tag) { return Verdict{Answer::Immune, std::nullopt, std::move(tag)}; }
    bool is_yes() const { return answer == Answer::Yes; }
};

enum class ViolationKind {
    IndexOutOfRange,
    RuleInvalid,
    DisjointnessViolated,
    TargetsOutsidePool,
    PoolNotApplicable,
    ExactCoverageViolated,
    ExactNotApplicable,
    ObjectiveSetMismatch,
    BudgetMissing,
    BudgetNotApplicable,
    NegativeBudget,
    PricesNotApplicable,
    InvalidPrice,
    RProfileViolated,
    ConstructiveAlreadySatisfied,
    DestructiveAlreadySatisfied,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string detail;
    bool warning = false; // nontriviality only
};

std::vector<Violation> validate(const AttackInstance& instance);
bool has_errors(const std::vector<Violation>& violations);

// Final qualified set after applying the solution; throws on domain errors.
IndividualSet outcome(const AttackInstance& instance, const Solution& solution);
std::int64_t solution_cost(const AttackInstance& instance, const Solution& solution);
// Throws KindMismatch, WitnessOutOfDomain.
bool check_witness(const AttackInstance& instance, const Solution& solution);

struct TargetSlack {
    Individual who = 0;
    bool qualify = true; // A+ member (s side) or A- member (t side)
    int missing = 0;
    int choices = 0;
};

struct InstanceDiagnostics {
    std::optional<int> s_star;
    std::optional<int> t_star;
    std::vector<TargetSlack> per_individual;
};

// Throws PreconditionViolated when neither s* nor t* is defined.
InstanceDiagnostics diagnostics(const AttackInstance& instance);

} // namespace gid
