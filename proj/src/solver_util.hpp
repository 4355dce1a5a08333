#pragma once

#include <optional>
#include <string>

#include "gid/error.hpp"
#include "gid/immunity.hpp"
#include "gid/instance.hpp"

namespace gid::detail {

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw Error(Errc::PreconditionViolated, what);
}

inline void require_no_errors(const AttackInstance& in)
{
    for (const Violation& v : validate(in))
        if (!v.warning)
            throw Error(Errc::PreconditionViolated, std::string(to_string(v.kind)) + ": " + v.detail);
}

inline std::optional<Verdict> immunity_short_circuit(const AttackInstance& in)
{
    ImmunityVerdict iv = check_immunity(in);
    if (iv.immune)
        return Verdict::immune(iv.theorem_tag);
    return std::nullopt;
}

// Every YES leaving a solver has passed the checker.
inline Verdict checked_yes(const AttackInstance& in, Solution s)
{
    if (!check_witness(in, s))
        throw Error(Errc::PreconditionViolated, "internal: solver witness failed verification");
    return Verdict::yes(std::move(s));
}

} // namespace gid::detail
