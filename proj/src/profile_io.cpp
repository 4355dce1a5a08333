#include "gid/profile_io.hpp"

#include <fstream>
#include <sstream>

#include "gid/error.hpp"
#include "text_util.hpp"

namespace gid {

namespace {

Cell parse_cell(const std::string& tok, std::size_t line_no)
{
    if (tok == "+")
        return Cell::Pos;
    if (tok == "-")
        return Cell::Neg;
    if (tok == "*")
        return Cell::Indifferent;
    if (tok == "?")
        return Cell::Unknown;
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad cell '" + tok + "'");
}

} // namespace

Profile parse_profile(std::string_view text)
{
    std::vector<detail::Line> lines = detail::split_lines(text);
    std::size_t i = 0;
    auto expect = [&](const char* key) -> const detail::Line& {
        if (i >= lines.size() || lines[i].tokens.empty() || lines[i].tokens[0] != key)
            throw Error(Errc::ParseError, std::string("expected '") + key + "' line");
        return lines[i++];
    };

    const detail::Line& header = expect("gid");
    if (header.tokens.size() != 2 || header.tokens[1] != "v1")
        throw Error(Errc::ParseError, "unsupported profile header");

    const detail::Line& kind_line = expect("kind");
    if (kind_line.tokens.size() != 2)
        throw Error(Errc::ParseError, "line " + std::to_string(kind_line.number) + ": bad kind line");
    ProfileKind kind;
    const std::string& k = kind_line.tokens[1];
    if (k == "binary")
        kind = ProfileKind::Binary;
    else if (k == "ternary")
        kind = ProfileKind::Ternary;
    else if (k == "partial")
        kind = ProfileKind::Partial;
    else
        throw Error(Errc::ParseError, "unknown profile kind '" + k + "'");

    const detail::Line& n_line = expect("n");
    if (n_line.tokens.size() != 2)
        throw Error(Errc::ParseError, "bad n line");
    auto n = static_cast<int>(detail::parse_int(n_line.tokens[1], n_line.number));
    if (n < 0 || n > kMaxIndividuals)
        throw Error(Errc::ParseError, "n must lie in [0, 64]");

    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> names;
    bool saw_star = false;
    bool saw_unknown = false;
    for (; i < lines.size(); ++i) {
        const detail::Line& line = lines[i];
        if (line.tokens[0] != "row")
            throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": expected 'row'");
        if (line.tokens.size() != static_cast<std::size_t>(n) + 2)
            throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": expected " +
                                              std::to_string(n) + " cells");
        names.push_back(line.tokens[1]);
        std::vector<Cell> row;
        for (std::size_t c = 2; c < line.tokens.size(); ++c) {
            Cell cell = parse_cell(line.tokens[c], line.number);
            saw_star = saw_star || cell == Cell::Indifferent;
            saw_unknown = saw_unknown || cell == Cell::Unknown;
            row.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    if (saw_star && saw_unknown)
        throw Error(Errc::ParseError, "profile mixes '*' and '?' cells");
    if (rows.size() != static_cast<std::size_t>(n))
        throw Error(Errc::ParseError, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    try {
        return Profile::from_rows(kind, rows, names);
    } catch (const Error& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string format_profile(const Profile& profile)
{
    std::ostringstream out;
    out << "gid v1\n"
        << "kind " << to_string(profile.kind()) << "\n"
        << "n " << profile.size() << "\n";
    for (Individual a = 0; a < profile.size(); ++a) {
        out << "row " << profile.name(a);
        for (Individual b = 0; b < profile.size(); ++b)
            out << ' ' << cell_char(profile.at(a, b));
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::InvalidArgument, "cannot write " + path.string());
    out << text;
}

Profile read_profile_file(const std::filesystem::path& path) { return parse_profile(read_text_file(path)); }

} // namespace gid
