#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gid/instance.hpp"

namespace gid {

// Binary: fair coins. Partial: each entry unknown with probability `density`.
// Ternary: each entry indifferent with probability `density`.
Profile gen_random_profile(int n, ProfileKind kind, double density, std::uint64_t seed);

// Every row has exactly r positives, uniformly placed. Throws InvalidR.
Profile gen_random_r_profile(int n, int r, std::uint64_t seed);

// A random r-profile with entries hidden at the given density; always
// r-extendable.
Profile gen_random_r_partial(int n, int r, double density, std::uint64_t seed);

struct Rx3cInstance {
    int m = 0;                            // |X| = |F| = 3m
    std::vector<std::array<int, 3>> triples; // ascending within a triple
    std::optional<std::vector<int>> planted_cover;

    int elements() const { return 3 * m; }
    // Sizes and element frequency 3.
    bool valid() const;
};

// m disjoint triples covering X, then 2m more with frequency 2 each.
Rx3cInstance gen_rx3c_planted(int m, std::uint64_t seed);
// A frequency-3 family without exact cover; needs m >= 2.
Rx3cInstance gen_rx3c_without_cover(int m, std::uint64_t seed);
// Triple indices of an exact cover, smallest first.
std::optional<std::vector<int>> find_exact_cover(const Rx3cInstance& rx3c);

// Constructive GB, consent(6m-2, 1): N_X, then N_F. With `perturb`, x2 stops
// qualifying x1, which then misses two qualifications.
AttackInstance rx3c_to_cgb(const Rx3cInstance& rx3c, bool perturb = false);
// Same individuals under consent(2,1); every element only qualifies itself.
// Smoke tests only: bribing any single individual succeeds.
AttackInstance rx3c_to_cgb_clipped(const Rx3cInstance& rx3c);

enum class CgcaiVariant { Consent, Lsr };
struct ReductionOptions {
    int t = 1;            // consent variant only
    bool perturb = false; // the first element loses every covering triple
};
// Constructive GCAI on r-profiles (r = 3 consent(2,t), r = 4 LSR).
AttackInstance rx3c_to_cgcai_r(const Rx3cInstance& rx3c, CgcaiVariant variant, ReductionOptions options = {});

// Constructive GCDI under consent(2,4): every element disqualifies itself and
// is disqualified by the three triples containing it.
AttackInstance rx3c_to_cgcdi(const Rx3cInstance& rx3c, bool perturb = false);

enum class AugmentFlavor { Gcai, Gcdi };
// Adds the dummy gadget that makes A- = {d1} nonempty at the cost of one
// budget unit. Throws PreconditionViolated on unsuitable sources.
AttackInstance augment_to_general(const AttackInstance& instance, AugmentFlavor flavor,
                                  bool increment_budget = true);

struct InstanceShape {
    Family family = Family::GCAI;
    std::vector<Objective> objectives{Objective::Constructive};
    std::vector<SocialRule> rules{SocialRule::consent(2, 1)};
    int n_min = 3;
    int n_max = 6;
    int max_budget = 3;
    bool priced = false;
    std::optional<int> r;
    bool ternary = false;
    double indifferent_density = 0.25;
    bool nontrivial = true;
    int max_attempts = 100000;
};

// Rejection sampling until validate() reports nothing (or only warnings when
// nontriviality is not required). Throws InvalidArgument when attempts run out.
AttackInstance gen_random_instance(const InstanceShape& shape, std::uint64_t seed);

struct PartialShape {
    std::vector<SocialRule> rules{SocialRule::consent(1, 1)};
    int n_min = 2;
    int n_max = 5;
    double density = 0.2;
    int max_unknown = 8;
    std::optional<int> r; // r-partial profiles with 1 <= r <= min(*r, n)
};

struct PartialInstance {
    Profile profile;
    IndividualSet s;
    SocialRule rule;
    std::optional<int> r;
};

PartialInstance gen_random_partial_instance(const PartialShape& shape, std::uint64_t seed);

} // namespace gid
