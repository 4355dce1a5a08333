#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gid/instance.hpp"

namespace gid {

// Text format v1:
//   gidinst v1
//   problem GCAI|GCDI|GCPI|GB|GMB
//   objective constructive|destructive|exact|general
//   rule consent 2 1 | rule csr | rule lsr | rule ternary 2 3 2
//   profile path/to/profile.gid     (relative to the instance file)
//   pool a1 a2
//   aplus a1
//   aminus
//   budget 2
//   agentprice a2 3
//   pairprice a1 a2 3
//   r 1
// Instead of a path, "profile inline" may be followed by a profile block
// closed by "end".
AttackInstance parse_instance(std::string_view text, const std::filesystem::path& base_dir = {});
AttackInstance read_instance_file(const std::filesystem::path& path);

// profile_ref empty => inline profile block.
std::string format_instance(const AttackInstance& instance, const std::string& profile_ref = {});

std::string format_set(const Profile& profile, IndividualSet s);
IndividualSet parse_set(const Profile& profile, const std::vector<std::string>& names);
std::string format_solution(const AttackInstance& instance, const Solution& s);

// FNV-1a over the canonical inline serialization.
std::string instance_digest(const AttackInstance& instance);
// 16 hex digits of FNV-1a 64.
std::string content_digest(std::string_view text);

} // namespace gid
