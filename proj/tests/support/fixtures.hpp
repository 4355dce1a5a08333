#pragma once

#include <string>

#include "gid/instance_io.hpp"
#include "gid/profile_io.hpp"

namespace fixtures {

inline const char* kEx1 = R"(gid v1
kind binary
n 5
row a1 + + + - +
row a2 - - + - +
row a3 - + + - -
row a4 + + + + -
row a5 - + + - -
)";

inline gid::Profile ex1() { return gid::parse_profile(kEx1); }

inline gid::IndividualSet names(const gid::Profile& p, std::initializer_list<std::string> who)
{
    return gid::parse_set(p, std::vector<std::string>(who));
}

// Rows given as strings of + - * ?, names a1..an.
inline gid::Profile rows(gid::ProfileKind kind, std::initializer_list<std::string> text)
{
    std::string src = "gid v1\nkind ";
    src += gid::to_string(kind);
    src += "\nn " + std::to_string(text.size()) + "\n";
    int i = 1;
    for (const std::string& r : text) {
        src += "row a" + std::to_string(i++);
        for (char c : r)
            src += std::string(" ") + c;
        src += "\n";
    }
    return gid::parse_profile(src);
}

} // namespace fixtures
