#include "gid/immunity.hpp"

#include <array>

namespace gid {

namespace {

constexpr unsigned kGcai = family_bit(Family::GCAI);
constexpr unsigned kGcdi = family_bit(Family::GCDI);
constexpr unsigned kGcpi = family_bit(Family::GCPI);
constexpr unsigned kCon = setting_bit(Setting::Constructive);
constexpr unsigned kDes = setting_bit(Setting::Destructive);
constexpr unsigned kExact = setting_bit(Setting::Exact);
constexpr unsigned kMixed = setting_bit(Setting::Mixed);

using R = RuleClass;
using S = SideCondition;
using F = StuckFact;

// Ordered: the first entry whose pattern matches and whose stuck individual
// exists wins.
constexpr std::array kTable{
    // Exact control.
    ImmunityEntry{"thm:fst_immune_egcai", kGcai, kExact, R::ConsentS1, S::PlusNonEmpty, false, F::AddCannotQualify,
                  "s=1: a disqualified member of A+ keeps at least t disqualifiers when individuals are added"},
    ImmunityEntry{"thm:fst_immune_egcai", kGcai, kExact, R::ConsentT1, S::MinusNonEmpty, false,
                  F::AddCannotDisqualify, "t=1: a qualified member of A- keeps at least s qualifiers when individuals are added"},
    ImmunityEntry{"thm:lsr_immune_egcai", kGcai, kExact, R::Lsr, S::MinusNonEmpty, false, F::LsrAddCannotDisqualify,
                  "LSR: adding individuals never disqualifies a qualified member of A-"},
    ImmunityEntry{"cor:fst_immune_egcpi", kGcpi, kExact, R::ConsentS1, S::MinusNonEmpty, false,
                  F::RemoveCannotDisqualify, "s=1: a qualified member of A- survives every sub-election"},
    ImmunityEntry{"cor:fst_immune_egcpi", kGcpi, kExact, R::ConsentS1, S::MinusEmpty, false, F::AllMustSurvive,
                  "A- empty: everyone must survive the first stage, so the final stage is the original election"},
    ImmunityEntry{"thm:fst_immune_egcpi", kGcpi, kExact, R::ConsentT1, S::PlusNonEmpty, false,
                  F::RemoveCannotQualify, "t=1: a disqualified member of A+ stays disqualified in every subset"},
    ImmunityEntry{"obs:fst_immune_egcpi", kGcpi, kExact, R::AnyConsent, S::MinusEmpty, false, F::AllMustSurvive,
                  "A- empty: everyone must survive the first stage, so the final stage is the original election"},
    ImmunityEntry{"thm:lsr_immune_egcpi", kGcpi, kExact, R::Lsr, S::PlusNonEmpty, false, F::LsrRemoveCannotQualify,
                  "LSR: removing individuals never qualifies a disqualified member of A+"},
    ImmunityEntry{"thm:lsr_immune_egcpi", kGcpi, kExact, R::Lsr, S::PlusEmpty, false, F::LsrSelfQualifierStays,
                  "LSR: a self-qualifying member of A- is qualified in every subset containing it"},
    // General objective, both target sets nonempty.
    ImmunityEntry{"cor:fst_immune_gcai_gcdi_gcpi", kGcai, kMixed, R::ConsentS1, S::Any, false, F::AddCannotQualify,
                  "s=1: a disqualified member of A+ keeps at least t disqualifiers when individuals are added"},
    ImmunityEntry{"cor:fst_immune_gcai_gcdi_gcpi", kGcai, kMixed, R::ConsentT1, S::Any, false,
                  F::AddCannotDisqualify, "t=1: a qualified member of A- keeps at least s qualifiers when individuals are added"},
    ImmunityEntry{"cor:fst_immune_gcai_gcdi_gcpi", kGcdi | kGcpi, kMixed, R::ConsentS1, S::Any, false,
                  F::RemoveCannotDisqualify, "s=1: a qualified member of A- stays qualified in every subset"},
    ImmunityEntry{"cor:fst_immune_gcai_gcdi_gcpi", kGcdi | kGcpi, kMixed, R::ConsentT1, S::Any, false,
                  F::RemoveCannotQualify, "t=1: a disqualified member of A+ stays disqualified in every subset"},
    ImmunityEntry{"obs:csr_immune_gcai", kGcai, kMixed, R::Csr, S::Any, false, F::CsrPathToMinus,
                  "CSR: any qualified member of A+ reaches the qualified member of A- through T"},
    // LSR with the relevant side nonempty, any non-exact objective.
    ImmunityEntry{"cor:lsr_immune_gcai", kGcai, kDes | kMixed, R::Lsr, S::MinusNonEmpty, false,
                  F::LsrAddCannotDisqualify, "LSR: adding individuals never disqualifies a qualified member of A-"},
    ImmunityEntry{"cor:lsr_immune_gcdi_gcpi", kGcdi | kGcpi, kCon | kMixed, R::Lsr, S::PlusNonEmpty, false,
                  F::LsrRemoveCannotQualify, "LSR: removing individuals never qualifies a disqualified member of A+"},
    // Constructive cells.
    ImmunityEntry{"tab:cgcai_consent_s1", kGcai, kCon, R::ConsentS1, S::Any, false, F::AddCannotQualify,
                  "s=1: a disqualified member of A+ keeps at least t disqualifiers when individuals are added"},
    ImmunityEntry{"tab:cgcdi_consent_t1", kGcdi, kCon, R::ConsentT1, S::Any, false, F::RemoveCannotQualify,
                  "t=1: a disqualified member of A+ stays disqualified in every subset"},
    ImmunityEntry{"tab:cgcpi_consent_t1", kGcpi, kCon, R::ConsentT1, S::Any, false, F::RemoveCannotQualify,
                  "t=1: a disqualified member of A+ stays disqualified in every subset"},
    // Destructive cells.
    ImmunityEntry{"tab:dgcai_consent_t1", kGcai, kDes, R::ConsentT1, S::Any, false, F::AddCannotDisqualify,
                  "t=1: a qualified member of A- keeps at least s qualifiers when individuals are added"},
    ImmunityEntry{"tab:dgcdi_consent_s1", kGcdi, kDes, R::ConsentS1, S::Any, false, F::RemoveCannotDisqualify,
                  "s=1: a qualified member of A- stays qualified in every subset"},
    ImmunityEntry{"tab:dgcpi_consent_s1", kGcpi, kDes, R::ConsentS1, S::Any, false, F::RemoveCannotDisqualify,
                  "s=1: a qualified member of A- stays qualified in every subset"},
    // r-profiles, r = 1.
    ImmunityEntry{"tab:cgcai_r1_lsr", kGcai, kCon, R::Lsr, S::Any, true, F::R1NoNewQualification,
                  "LSR on 1-profiles qualifies exactly the self-qualifiers"},
    ImmunityEntry{"tab:cgcai_r1_csr", kGcai, kCon, R::Csr, S::Any, true, F::R1NoNewQualification,
                  "CSR on 1-profiles qualifies at most one individual, who must be unanimously qualified in T"},
};

bool rule_matches(RuleClass rc, const SocialRule& rule)
{
    const Consent* c = rule.as_consent();
    switch (rc) {
    case RuleClass::ConsentS1: return c && c->s == 1;
    case RuleClass::ConsentT1: return c && c->t == 1;
    case RuleClass::AnyConsent: return c != nullptr;
    case RuleClass::Csr: return rule.is_csr();
    case RuleClass::Lsr: return rule.is_lsr();
    }
    return false;
}

bool side_matches(SideCondition side, const AttackInstance& in)
{
    switch (side) {
    case SideCondition::Any: return true;
    case SideCondition::PlusNonEmpty: return !in.aplus.empty();
    case SideCondition::PlusEmpty: return in.aplus.empty();
    case SideCondition::MinusNonEmpty: return !in.aminus.empty();
    case SideCondition::MinusEmpty: return in.aminus.empty();
    }
    return false;
}

unsigned setting_of(const AttackInstance& in)
{
    if (in.objective == Objective::Exact)
        return kExact;
    bool plus = !in.aplus.empty(), minus = !in.aminus.empty();
    if (plus && minus)
        return kMixed;
    if (plus)
        return kCon;
    if (minus)
        return kDes;
    return 0;
}

bool stuck_exists(StuckFact fact, const AttackInstance& in)
{
    const IndividualSet start = in.start_set();
    auto f_start = [&] { return eval(in.rule, start, in.profile); };
    switch (fact) {
    case StuckFact::AddCannotQualify:
    case StuckFact::RemoveCannotQualify:
    case StuckFact::AllMustSurvive:
    case StuckFact::LsrRemoveCannotQualify: return !in.aplus.is_subset_of(f_start());
    case StuckFact::AddCannotDisqualify:
    case StuckFact::RemoveCannotDisqualify:
    case StuckFact::LsrAddCannotDisqualify: return in.aminus.intersects(f_start());
    case StuckFact::LsrSelfQualifierStays:
        for (Individual a : in.aminus)
            if (in.profile.self_qualifies(a))
                return true;
        return false;
    case StuckFact::CsrPathToMinus: return !in.aplus.empty() && in.aminus.intersects(f_start());
    case StuckFact::R1NoNewQualification:
        if (in.rule.is_csr() && in.aplus.size() >= 2)
            return true;
        return !in.aplus.is_subset_of(f_start());
    }
    return false;
}

} // namespace

std::span<const ImmunityEntry> immunity_table() { return kTable; }

ImmunityVerdict check_immunity(const AttackInstance& in)
{
    if (in.profile.kind() != ProfileKind::Binary || has_errors(validate(in)))
        return {};
    const unsigned fam = family_bit(in.family);
    const unsigned setting = setting_of(in);
    for (const ImmunityEntry& e : kTable) {
        if ((e.families & fam) == 0 || (e.settings & setting) == 0)
            continue;
        if (!rule_matches(e.rule, in.rule) || !side_matches(e.side, in))
            continue;
        if (e.needs_r1 && !(in.r_restriction == 1 && is_r_profile(in.profile, 1)))
            continue;
        if (stuck_exists(e.fact, in))
            return ImmunityVerdict{true, std::string(e.tag), std::string(e.reason)};
    }
    return {};
}

} // namespace gid
