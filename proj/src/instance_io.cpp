#include "gid/instance_io.hpp"

#include <cstdio>
#include <sstream>

#include "gid/error.hpp"
#include "gid/profile_io.hpp"
#include "text_util.hpp"

namespace gid {

namespace {

Individual lookup(const Profile& p, const std::string& name)
{
    auto a = p.find(name);
    if (!a)
        throw Error(Errc::ParseError, "unknown individual '" + name + "'");
    return *a;
}

std::string rule_line(const SocialRule& rule)
{
    if (auto c = rule.as_consent())
        return "consent " + std::to_string(c->s) + " " + std::to_string(c->t);
    if (auto t = rule.as_ternary())
        return "ternary " + std::to_string(t->s) + " " + std::to_string(t->s_prime) + " " + std::to_string(t->t);
    return rule.is_csr() ? "csr" : "lsr";
}

SocialRule parse_rule_tokens(const detail::Line& line)
{
    const auto& tk = line.tokens;
    auto num = [&](std::size_t i) { return static_cast<int>(detail::parse_int(tk[i], line.number)); };
    if (tk.size() == 2 && tk[1] == "csr")
        return SocialRule::csr();
    if (tk.size() == 2 && tk[1] == "lsr")
        return SocialRule::lsr();
    if (tk.size() == 4 && tk[1] == "consent")
        return SocialRule::consent(num(2), num(3));
    if (tk.size() == 5 && tk[1] == "ternary")
        return SocialRule::ternary(num(2), num(3), num(4));
    throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": bad rule");
}

} // namespace

std::string format_set(const Profile& profile, IndividualSet s)
{
    std::string out;
    for (Individual a : s) {
        if (!out.empty())
            out += ' ';
        out += profile.name(a);
    }
    return out;
}

IndividualSet parse_set(const Profile& profile, const std::vector<std::string>& names)
{
    IndividualSet s;
    for (const std::string& nm : names)
        s.insert(lookup(profile, nm));
    return s;
}

AttackInstance parse_instance(std::string_view text, const std::filesystem::path& base_dir)
{
    std::vector<detail::Line> lines = detail::split_lines(text);
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "gidinst" || lines[0].tokens[1] != "v1")
        throw Error(Errc::ParseError, "expected 'gidinst v1' header");

    AttackInstance in;
    bool have_profile = false, have_problem = false, have_objective = false, have_rule = false;
    // Set lines may precede the profile line; resolve names afterwards.
    std::vector<std::pair<std::string, detail::Line>> deferred;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const detail::Line& line = lines[i];
        const std::string& key = line.tokens[0];
        auto need = [&](std::size_t count) {
            if (line.tokens.size() != count)
                throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": malformed '" + key + "'");
        };
        if (key == "problem") {
            need(2);
            in.family = parse_family(line.tokens[1]);
            have_problem = true;
        } else if (key == "objective") {
            need(2);
            in.objective = parse_objective(line.tokens[1]);
            have_objective = true;
        } else if (key == "rule") {
            in.rule = parse_rule_tokens(line);
            have_rule = true;
        } else if (key == "profile") {
            need(2);
            if (have_profile)
                throw Error(Errc::ParseError, "duplicate profile line");
            if (line.tokens[1] == "inline") {
                std::string block;
                for (++i; i < lines.size() && lines[i].tokens[0] != "end"; ++i) {
                    for (std::size_t k = 0; k < lines[i].tokens.size(); ++k)
                        block += (k ? " " : "") + lines[i].tokens[k];
                    block += '\n';
                }
                if (i >= lines.size())
                    throw Error(Errc::ParseError, "inline profile lacks 'end'");
                in.profile = parse_profile(block);
            } else {
                in.profile = read_profile_file(base_dir / line.tokens[1]);
            }
            have_profile = true;
        } else if (key == "pool" || key == "aplus" || key == "aminus" || key == "agentprice" ||
                   key == "pairprice") {
            deferred.emplace_back(key, line);
        } else if (key == "budget") {
            need(2);
            in.budget = detail::parse_int(line.tokens[1], line.number);
        } else if (key == "r") {
            need(2);
            in.r_restriction = static_cast<int>(detail::parse_int(line.tokens[1], line.number));
        } else {
            throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": unknown key '" + key + "'");
        }
    }
    if (!have_profile || !have_problem || !have_objective || !have_rule)
        throw Error(Errc::ParseError, "instance needs problem, objective, rule and profile lines");

    const auto n = static_cast<std::size_t>(in.n());
    for (const auto& [key, line] : deferred) {
        std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
        if (key == "pool")
            in.pool |= parse_set(in.profile, rest);
        else if (key == "aplus")
            in.aplus |= parse_set(in.profile, rest);
        else if (key == "aminus")
            in.aminus |= parse_set(in.profile, rest);
        else if (key == "agentprice") {
            if (rest.size() != 2)
                throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": malformed agentprice");
            if (!in.agent_prices)
                in.agent_prices.emplace(n, 1);
            (*in.agent_prices)[static_cast<std::size_t>(lookup(in.profile, rest[0]))] =
                detail::parse_int(rest[1], line.number);
        } else {
            if (rest.size() != 3)
                throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": malformed pairprice");
            if (!in.pair_prices)
                in.pair_prices.emplace(n * n, 1);
            auto a = static_cast<std::size_t>(lookup(in.profile, rest[0]));
            auto b = static_cast<std::size_t>(lookup(in.profile, rest[1]));
            (*in.pair_prices)[a * n + b] = detail::parse_int(rest[2], line.number);
        }
    }
    return in;
}

AttackInstance read_instance_file(const std::filesystem::path& path)
{
    return parse_instance(read_text_file(path), path.parent_path());
}

std::string format_instance(const AttackInstance& in, const std::string& profile_ref)
{
    const Profile& p = in.profile;
    std::ostringstream out;
    out << "gidinst v1\n"
        << "problem " << to_string(in.family) << "\n"
        << "objective " << to_string(in.objective) << "\n"
        << "rule " << rule_line(in.rule) << "\n";
    if (profile_ref.empty())
        out << "profile inline\n" << format_profile(p) << "end\n";
    else
        out << "profile " << profile_ref << "\n";
    if (in.family == Family::GCAI)
        out << "pool " << format_set(p, in.pool) << "\n";
    out << "aplus " << format_set(p, in.aplus) << "\n";
    out << "aminus " << format_set(p, in.aminus) << "\n";
    if (in.budget)
        out << "budget " << *in.budget << "\n";
    if (in.r_restriction)
        out << "r " << *in.r_restriction << "\n";
    if (in.agent_prices)
        for (Individual a = 0; a < in.n(); ++a)
            if (in.agent_price(a) != 1)
                out << "agentprice " << p.name(a) << " " << in.agent_price(a) << "\n";
    if (in.pair_prices)
        for (Individual a = 0; a < in.n(); ++a)
            for (Individual b = 0; b < in.n(); ++b)
                if (in.pair_price(a, b) != 1)
                    out << "pairprice " << p.name(a) << " " << p.name(b) << " " << in.pair_price(a, b) << "\n";
    std::string s = out.str();
    // Trailing blanks after "aplus"/"aminus" with empty sets.
    std::string cleaned;
    cleaned.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == ' ' && i + 1 < s.size() && s[i + 1] == '\n')
            continue;
        cleaned += s[i];
    }
    return cleaned;
}

std::string format_solution(const AttackInstance& in, const Solution& s)
{
    const Profile& p = in.profile;
    switch (s.kind) {
    case SolutionKind::Added:
    case SolutionKind::Deleted:
    case SolutionKind::Partition: return format_set(p, s.members);
    case SolutionKind::Bribed: {
        std::string out;
        for (const RowRewrite& rw : s.rows) {
            if (!out.empty())
                out += ' ';
            out += p.name(rw.who) + "=>{";
            std::string inner = format_set(p, rw.qualifies);
            for (char& ch : inner)
                if (ch == ' ')
                    ch = ',';
            out += inner + "}";
        }
        return out;
    }
    case SolutionKind::Flipped: {
        std::string out;
        for (const EntryChange& e : s.entries) {
            if (!out.empty())
                out += ' ';
            out += p.name(e.from) + ">" + p.name(e.to) + ":" + cell_char(e.value);
        }
        return out;
    }
    }
    return {};
}

std::string instance_digest(const AttackInstance& in) { return content_digest(format_instance(in)); }

std::string content_digest(std::string_view text)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace gid
