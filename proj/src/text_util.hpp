#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gid/error.hpp"

namespace gid::detail {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

// Whitespace-tokenized non-empty lines; '#' starts a comment.
inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
                ++j;
            if (j > i)
                line.tokens.emplace_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

inline std::int64_t parse_int(const std::string& tok, std::size_t line_no)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    return value;
}

} // namespace gid::detail
