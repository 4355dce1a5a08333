#include "gid/individual_set.hpp"

#include "gid/error.hpp"

namespace gid {

bool size_then_lex_less(IndividualSet a, IndividualSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    // Among equal-size sets, the first differing member decides; the set
    // holding the smaller one comes first.
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    int low = std::countr_zero(diff);
    return a.contains(low);
}

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::RuleNotApplicable: return "RuleNotApplicable";
    case Errc::QuotaConstraintViolated: return "QuotaConstraintViolated";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::WitnessOutOfDomain: return "WitnessOutOfDomain";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NoRExtension: return "NoRExtension";
    case Errc::InvalidR: return "InvalidR";
    case Errc::WrongKind: return "WrongKind";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what)
{
}

} // namespace gid
