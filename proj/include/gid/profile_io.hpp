#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gid/profile.hpp"

namespace gid {

// Text format v1:
//   gid v1
//   kind binary|ternary|partial
//   n 5
//   row a1 + + + - +
// Cells: + - * (ternary) ? (partial). Blank lines and '#' comments are skipped.
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);

Profile read_profile_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace gid
