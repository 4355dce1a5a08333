#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gid/individual_set.hpp"
#include "gid/profile.hpp"

namespace gid {

struct Consent {
    int s = 1;
    int t = 1;
    friend bool operator==(const Consent&, const Consent&) = default;
};
struct Csr {
    friend bool operator==(const Csr&, const Csr&) = default;
};
struct Lsr {
    friend bool operator==(const Lsr&, const Lsr&) = default;
};
struct Ternary {
    int s = 1;
    int s_prime = 1;
    int t = 1;
    friend bool operator==(const Ternary&, const Ternary&) = default;
};

class SocialRule {
public:
    using Variant = std::variant<Consent, Csr, Lsr, Ternary>;

    SocialRule() = default;
    SocialRule(Variant v) : v_(v) {}

    static SocialRule consent(int s, int t) { return SocialRule(Consent{s, t}); }
    static SocialRule csr() { return SocialRule(Csr{}); }
    static SocialRule lsr() { return SocialRule(Lsr{}); }
    static SocialRule ternary(int s, int s_prime, int t) { return SocialRule(Ternary{s, s_prime, t}); }
    // f^(s,⋆,t): s' = ceil((n+1)/2).
    static SocialRule ternary_majority(int s, int t, int n) { return ternary(s, (n + 2) / 2, t); }

    // "consent:s,t" | "csr" | "lsr" | "ternary:s,s',t"
    static SocialRule parse(std::string_view spec);
    std::string to_string() const;

    const Variant& variant() const noexcept { return v_; }
    const Consent* as_consent() const { return std::get_if<Consent>(&v_); }
    const Ternary* as_ternary() const { return std::get_if<Ternary>(&v_); }
    bool is_csr() const { return std::holds_alternative<Csr>(v_); }
    bool is_lsr() const { return std::holds_alternative<Lsr>(v_); }

    friend bool operator==(const SocialRule&, const SocialRule&) = default;

private:
    Variant v_ = Consent{1, 1};
};

struct EvalTrace {
    std::vector<IndividualSet> rounds;
};

// Throws RuleNotApplicable or QuotaConstraintViolated.
void check_applicable(const SocialRule& rule, const Profile& profile);
bool is_applicable(const SocialRule& rule, const Profile& profile);

// f(T, φ). The trace is filled for CSR and LSR only.
IndividualSet eval(const SocialRule& rule, IndividualSet subset, const Profile& profile,
                   EvalTrace* trace = nullptr);

} // namespace gid
