#pragma once

#include <cstdint>
#include <optional>

#include "gid/individual_set.hpp"
#include "gid/profile.hpp"
#include "gid/rule.hpp"

namespace gid {

enum class QueryMode { Possible, Necessary };

struct PartialQuery {
    IndividualSet s;
    std::optional<int> r;
    QueryMode mode = QueryMode::Possible;
};

// The extension the query settles on, and whether it qualifies all of S.
struct ExtensionAnswer {
    bool answer = false;
    Profile extension;
};

// Best case: every unknown resolved in favour of S.
ExtensionAnswer pqi_extension(const Profile& profile, IndividualSet s, const SocialRule& rule);
bool pqi(const Profile& profile, IndividualSet s, const SocialRule& rule);

// Worst case: every unknown resolved against S.
ExtensionAnswer nqi_extension(const Profile& profile, IndividualSet s, const SocialRule& rule);
bool nqi(const Profile& profile, IndividualSet s, const SocialRule& rule);

// Throws InvalidR unless 1 <= r <= n, NoRExtension unless every row can be
// completed to exactly r positives.
void check_r_extendable(const Profile& profile, int r);

// consent(s,1) with s >= 2, by one max-flow computation.
bool r_pqi_consent_flow(const Profile& profile, IndividualSet s, int r, const SocialRule& rule);

// consent(s,t): branch over unknown diagonal entries of S, then max flow.
bool r_pqi_general(const Profile& profile, IndividualSet s, int r, const SocialRule& rule,
                   std::uint64_t max_branches = std::uint64_t{1} << 20);

// Consent rules for any r; CSR and LSR for r = 1.
bool r_nqi(const Profile& profile, IndividualSet s, int r, const SocialRule& rule);

// Dispatches on the query.
bool answer_query(const Profile& profile, const PartialQuery& query, const SocialRule& rule);

} // namespace gid
