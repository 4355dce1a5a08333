#include "gid/rule.hpp"

#include <charconv>

#include "gid/error.hpp"

namespace gid {

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view spec)
{
    std::vector<int> out;
    while (!text.empty()) {
        std::size_t comma = text.find(',');
        std::string_view part = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw Error(Errc::ParseError, "bad rule parameters in '" + std::string(spec) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

IndividualSet eval_consent(int s, int t, IndividualSet T, const Profile& p)
{
    IndividualSet out;
    for (Individual a : T) {
        if (p.self_qualifies(a)) {
            if ((p.qualifiers(a) & T).size() >= s)
                out.insert(a);
        } else if ((p.disqualifiers(a) & T).size() < t) {
            out.insert(a);
        }
    }
    return out;
}

IndividualSet eval_ternary(const Ternary& r, IndividualSet T, const Profile& p)
{
    IndividualSet out;
    for (Individual a : T) {
        switch (p.at(a, a)) {
        case Cell::Pos:
            if ((p.qualifiers(a) & T).size() >= r.s)
                out.insert(a);
            break;
        case Cell::Indifferent:
            if ((p.qualifiers(a) & T).size() >= r.s_prime)
                out.insert(a);
            break;
        default:
            if ((p.disqualifiers(a) & T).size() < r.t)
                out.insert(a);
            break;
        }
    }
    return out;
}

IndividualSet close_under_qualification(IndividualSet start, IndividualSet T, const Profile& p,
                                        EvalTrace* trace)
{
    IndividualSet k = start;
    if (trace)
        trace->rounds.push_back(k);
    for (;;) {
        IndividualSet next = k;
        for (Individual a : k)
            next |= p.qualified_by(a) & T;
        if (next == k)
            break;
        k = next;
        if (trace)
            trace->rounds.push_back(k);
    }
    return k;
}

} // namespace

SocialRule SocialRule::parse(std::string_view spec)
{
    if (spec == "csr")
        return csr();
    if (spec == "lsr")
        return lsr();
    std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::ParseError, "unknown rule '" + std::string(spec) + "'");
    std::string_view head = spec.substr(0, colon);
    std::vector<int> v = parse_ints(spec.substr(colon + 1), spec);
    if (head == "consent" && v.size() == 2)
        return consent(v[0], v[1]);
    if (head == "ternary" && v.size() == 3)
        return ternary(v[0], v[1], v[2]);
    throw Error(Errc::ParseError, "unknown rule '" + std::string(spec) + "'");
}

std::string SocialRule::to_string() const
{
    if (auto c = as_consent())
        return "consent:" + std::to_string(c->s) + "," + std::to_string(c->t);
    if (auto r = as_ternary())
        return "ternary:" + std::to_string(r->s) + "," + std::to_string(r->s_prime) + "," + std::to_string(r->t);
    return is_csr() ? "csr" : "lsr";
}

void check_applicable(const SocialRule& rule, const Profile& profile)
{
    if (auto r = rule.as_ternary()) {
        if (profile.kind() == ProfileKind::Partial)
            throw Error(Errc::RuleNotApplicable, "ternary rules need a binary or ternary profile");
        if (r->s < 1 || r->s_prime < 1 || r->t < 1)
            throw Error(Errc::QuotaConstraintViolated, "quotas must be positive");
        return;
    }
    if (profile.kind() != ProfileKind::Binary)
        throw Error(Errc::RuleNotApplicable, rule.to_string() + " needs a binary profile");
    if (auto c = rule.as_consent()) {
        if (c->s < 1 || c->t < 1)
            throw Error(Errc::QuotaConstraintViolated, "quotas must be positive");
        if (c->s + c->t > profile.size() + 2)
            throw Error(Errc::QuotaConstraintViolated,
                        "s + t = " + std::to_string(c->s + c->t) + " exceeds n + 2 = " +
                            std::to_string(profile.size() + 2));
    }
}

bool is_applicable(const SocialRule& rule, const Profile& profile)
{
    try {
        check_applicable(rule, profile);
        return true;
    } catch (const Error&) {
        return false;
    }
}

IndividualSet eval(const SocialRule& rule, IndividualSet subset, const Profile& profile, EvalTrace* trace)
{
    check_applicable(rule, profile);
    if (!subset.is_subset_of(profile.everyone()))
        throw Error(Errc::IndexOutOfRange, "subset contains individuals outside the profile");
    if (trace)
        trace->rounds.clear();

    if (auto c = rule.as_consent())
        return eval_consent(c->s, c->t, subset, profile);
    if (auto r = rule.as_ternary())
        return eval_ternary(*r, subset, profile);

    IndividualSet start;
    if (rule.is_csr()) {
        for (Individual a : subset)
            if (subset.is_subset_of(profile.qualifiers(a)))
                start.insert(a);
    } else {
        for (Individual a : subset)
            if (profile.self_qualifies(a))
                start.insert(a);
    }
    return close_under_qualification(start, subset, profile, trace);
}

} // namespace gid
