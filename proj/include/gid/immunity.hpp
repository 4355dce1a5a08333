#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gid/instance.hpp"

namespace gid {

enum class RuleClass { ConsentS1, ConsentT1, AnyConsent, Csr, Lsr };

// Which target sets are present, after folding a general objective with one
// empty side into the constructive/destructive case.
enum class Setting : unsigned {
    Constructive = 1U << 0,
    Destructive = 1U << 1,
    Exact = 1U << 2,
    Mixed = 1U << 3, // general with both sides nonempty
};

enum class SideCondition { Any, PlusNonEmpty, PlusEmpty, MinusNonEmpty, MinusEmpty };

// The individual whose status the attack provably cannot change.
enum class StuckFact {
    AddCannotQualify,       // s=1: a in A+ outside f(T)
    AddCannotDisqualify,    // t=1: a in A- inside f(T)
    RemoveCannotQualify,    // t=1: a in A+ outside f(N)
    RemoveCannotDisqualify, // s=1: a in A- inside f(N)
    AllMustSurvive,         // exact GCPI, A- empty: a in A+ outside f(N)
    LsrAddCannotDisqualify, // a in A- inside f_LSR(T)
    LsrRemoveCannotQualify, // a in A+ outside f_LSR(N)
    LsrSelfQualifierStays,  // a in A- with a self-loop
    CsrPathToMinus,         // A+ nonempty and a in A- inside f_CSR(T)
    R1NoNewQualification,   // r=1 (LSR/CSR): a in A+ outside f(T), or |A+| >= 2 for CSR
};

struct ImmunityEntry {
    std::string_view tag;
    unsigned families; // bit per Family
    unsigned settings; // bit per Setting
    RuleClass rule;
    SideCondition side;
    bool needs_r1;
    StuckFact fact;
    std::string_view reason;
};

std::span<const ImmunityEntry> immunity_table();

struct ImmunityVerdict {
    bool immune = false;
    std::string theorem_tag;
    std::string reason;
};

ImmunityVerdict check_immunity(const AttackInstance& instance);

constexpr unsigned family_bit(Family f) { return 1U << static_cast<unsigned>(f); }
constexpr unsigned setting_bit(Setting s) { return static_cast<unsigned>(s); }

} // namespace gid
