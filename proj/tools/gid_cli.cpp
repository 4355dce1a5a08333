// gid: command-line workbench for group identification attacks.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gid/dispatch.hpp"
#include "gid/error.hpp"
#include "gid/generators.hpp"
#include "gid/instance_io.hpp"
#include "gid/oracle.hpp"
#include "gid/partial.hpp"
#include "gid/profile_io.hpp"
#include "gid/sweep.hpp"

namespace fs = std::filesystem;
using namespace gid;

namespace {

enum Exit {
    kYes = 0,
    kNo = 1,
    kParse = 2,
    kMismatch = 3,
    kImmune = 4,
    kTooLarge = 5,
    kDisagree = 6,
};

int exit_for(const Error& e)
{
    switch (e.code()) {
    case Errc::ParseError: return kParse;
    case Errc::InstanceTooLarge: return kTooLarge;
    default: return kMismatch;
    }
}

enum class Format { Tsv, JsonLines };

class Report {
public:
    void add(std::string key, std::string value) { kv_.emplace_back(std::move(key), std::move(value)); }

    void emit(Format f, std::ostream& out) const
    {
        if (f == Format::Tsv) {
            for (const auto& [k, v] : kv_)
                out << k << '\t' << v << '\n';
            return;
        }
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : kv_) {
            if (!obj.contains(k))
                obj[k] = v;
            else {
                if (!obj[k].is_array())
                    obj[k] = nlohmann::ordered_json::array({obj[k]});
                obj[k].push_back(v);
            }
        }
        out << obj.dump() << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

std::string braced(const Profile& p, IndividualSet s)
{
    std::string out = "{";
    for (Individual a : s) {
        if (out.size() > 1)
            out += ',';
        out += p.name(a);
    }
    return out + "}";
}

std::string fmt_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string echo(int argc, char** argv)
{
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            out += ' ';
        out += argv[i];
    }
    return out;
}

Family family_arg(const std::string& s) { return parse_family(s); }

// Options shared by gen and xval for random instances.
struct ShapeArgs {
    std::string family = "GCAI";
    std::vector<std::string> objectives{"constructive"};
    std::vector<std::string> rules{"consent:2,1"};
    int n_min = 3;
    int n_max = 6;
    int max_budget = 3;
    bool priced = false;
    int r = 0;
    bool ternary = false;
    double density = 0.2;
    int max_unknown = 8;

    void attach(CLI::App* app)
    {
        app->add_option("--family", family, "GCAI|GCDI|GCPI|GB|GMB");
        app->add_option("--objective", objectives, "constructive|destructive|exact|general (repeatable)");
        app->add_option("--rule", rules, "rule spec (repeatable)");
        app->add_option("--n-min", n_min);
        app->add_option("--n-max", n_max);
        app->add_option("--max-budget", max_budget);
        app->add_flag("--priced", priced, "random agent or pair prices in 1..3");
        app->add_option("--r", r, "r-profiles (instances) or r-partial profiles (queries)");
        app->add_flag("--ternary", ternary, "ternary profiles");
        app->add_option("--density", density, "indifferent or unknown entry density");
        app->add_option("--max-unknown", max_unknown);
    }

    void load(const nlohmann::json& j)
    {
        family = j.value("family", family);
        if (j.contains("objectives"))
            objectives = j["objectives"].get<std::vector<std::string>>();
        if (j.contains("rules"))
            rules = j["rules"].get<std::vector<std::string>>();
        n_min = j.value("n_min", n_min);
        n_max = j.value("n_max", n_max);
        max_budget = j.value("max_budget", max_budget);
        priced = j.value("priced", priced);
        r = j.value("r", r);
        ternary = j.value("ternary", ternary);
        density = j.value("density", density);
        max_unknown = j.value("max_unknown", max_unknown);
    }

    InstanceShape shape() const
    {
        InstanceShape s;
        s.family = family_arg(family);
        s.objectives.clear();
        for (const auto& o : objectives)
            s.objectives.push_back(parse_objective(o));
        s.rules.clear();
        for (const auto& r : rules)
            s.rules.push_back(SocialRule::parse(r));
        s.n_min = n_min;
        s.n_max = n_max;
        s.max_budget = max_budget;
        s.priced = priced;
        if (r > 0)
            s.r = r;
        s.ternary = ternary;
        s.indifferent_density = density;
        return s;
    }

    PartialShape partial() const
    {
        PartialShape s;
        s.rules.clear();
        for (const auto& r : rules)
            s.rules.push_back(SocialRule::parse(r));
        s.n_min = n_min;
        s.n_max = n_max;
        s.density = density;
        s.max_unknown = max_unknown;
        if (r > 0)
            s.r = r;
        return s;
    }
};

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
    std::string profile;
    std::string rule;
    std::optional<std::string> subset;
    bool trace = false;
};

int cmd_eval(const EvalArgs& a, Format fmt)
{
    Profile p = read_profile_file(a.profile);
    SocialRule rule = SocialRule::parse(a.rule);
    IndividualSet subset = a.subset ? parse_set(p, split_names(*a.subset)) : p.everyone();
    EvalTrace trace;
    IndividualSet f = eval(rule, subset, p, &trace);
    if (fmt == Format::Tsv) {
        std::cout << format_set(p, f) << '\n';
        if (a.trace && !trace.rounds.empty()) {
            std::string line;
            for (IndividualSet k : trace.rounds)
                line += (line.empty() ? "" : " ") + braced(p, k);
            std::cout << "trace\t" << line << '\n';
        }
        return kYes;
    }
    nlohmann::ordered_json obj;
    obj["qualified"] = split_names(format_set(p, f));
    if (a.trace) {
        obj["trace"] = nlohmann::ordered_json::array();
        for (IndividualSet k : trace.rounds)
            obj["trace"].push_back(split_names(format_set(p, k)));
    }
    std::cout << obj.dump() << '\n';
    return kYes;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string instance;
    std::string solver = "auto";
    std::optional<std::uint64_t> node_limit;
    bool no_timing = false;
};

int cmd_solve(const SolveArgs& a, Format fmt, const std::string& command)
{
    AttackInstance in = read_instance_file(a.instance);
    Report rep;
    rep.add("command", command);
    rep.add("digest", instance_digest(in));
    for (const Violation& v : validate(in))
        rep.add(v.warning ? "warning" : "violation", std::string(to_string(v.kind)) + ": " + v.detail);

    SearchBudget budget;
    if (a.node_limit)
        budget.node_limit = *a.node_limit;
    auto t0 = std::chrono::steady_clock::now();
    SolveReport r;
    try {
        r = solve_with(in, a.solver, budget);
    } catch (const Error& e) {
        rep.add("solver", a.solver);
        rep.add("error", e.what());
        rep.emit(fmt, std::cout);
        return exit_for(e);
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    rep.add("solver", r.solver);
    rep.add("verdict", to_string(r.verdict.answer));
    int code = r.verdict.answer == Answer::Yes ? kYes : r.verdict.answer == Answer::No ? kNo : kImmune;
    if (r.verdict.immunity_ref)
        rep.add("immunity", *r.verdict.immunity_ref);
    if (r.verdict.witness) {
        const Solution& s = *r.verdict.witness;
        bool ok = check_witness(in, s);
        rep.add("witness", format_solution(in, s));
        rep.add("witness_size", std::to_string(s.kind == SolutionKind::Flipped ? s.entries.size()
                                                                               : static_cast<std::size_t>(s.members.size())));
        rep.add("cost", std::to_string(solution_cost(in, s)));
        rep.add("verified", ok ? "true" : "false");
        if (!ok)
            code = kMismatch;
    }
    if (!a.no_timing)
        rep.add("time_ms", fmt_ms(ms));
    rep.emit(fmt, std::cout);
    return code;
}

// ---- partial ---------------------------------------------------------------

struct PartialArgs {
    std::string profile;
    std::string mode = "pqi";
    std::string rule;
    std::string set;
    int r = 0;
    bool xval = false;
};

int cmd_partial(const PartialArgs& a, Format fmt, const std::string& command)
{
    Profile p = read_profile_file(a.profile);
    SocialRule rule = SocialRule::parse(a.rule);
    PartialQuery q;
    q.s = parse_set(p, split_names(a.set));
    q.mode = a.mode == "nqi" ? QueryMode::Necessary : QueryMode::Possible;
    if (a.mode != "pqi" && a.mode != "nqi")
        throw Error(Errc::ParseError, "mode must be pqi or nqi");
    if (a.r > 0)
        q.r = a.r;
    else if (a.r < 0)
        throw Error(Errc::InvalidR, "r must be positive");

    Report rep;
    rep.add("command", command);
    std::string solver = a.r ? (a.mode == "nqi" ? "r_nqi" : "r_pqi") : a.mode;
    bool result = false;
    try {
        result = answer_query(p, q, rule);
    } catch (const Error& e) {
        if (e.code() != Errc::PreconditionViolated || !q.r)
            throw;
        // r-queries outside the polynomial cases go to exhaustive search.
        if (a.r)
            check_r_extendable(p, a.r);
        PartialAnswer b = pqi_nqi_brute(p, q.s, rule, q.r);
        result = q.mode == QueryMode::Possible ? b.possible : b.necessary;
        solver = "brute";
    }
    rep.add("solver", solver);
    rep.add("result", result ? "true" : "false");
    int code = result ? kYes : kNo;
    if (a.xval) {
        PartialAnswer b = pqi_nqi_brute(p, q.s, rule, q.r);
        bool expected = q.mode == QueryMode::Possible ? b.possible : b.necessary;
        rep.add("brute", expected ? "true" : "false");
        rep.add("agree", expected == result ? "true" : "false");
        if (expected != result)
            code = kDisagree;
    }
    rep.emit(fmt, std::cout);
    return code;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string what;
    int n = 5;
    std::string kind = "binary";
    int m = 1;
    int t = 1;
    std::uint64_t seed = 1;
    int count = 1;
    bool perturb = false;
    bool no_cover = false;
    std::string augment;
    bool no_increment = false;
    std::string out;
    ShapeArgs shape;
};

AttackInstance reduction(const GenArgs& a, std::uint64_t seed)
{
    Rx3cInstance x = a.no_cover ? gen_rx3c_without_cover(a.m, seed) : gen_rx3c_planted(a.m, seed);
    AttackInstance in;
    if (a.what == "rx3c-cgb")
        in = rx3c_to_cgb(x, a.perturb);
    else if (a.what == "rx3c-cgb-clipped")
        in = rx3c_to_cgb_clipped(x);
    else if (a.what == "rx3c-cgcai-consent")
        in = rx3c_to_cgcai_r(x, CgcaiVariant::Consent, {a.t, a.perturb});
    else if (a.what == "rx3c-cgcai-lsr")
        in = rx3c_to_cgcai_r(x, CgcaiVariant::Lsr, {1, a.perturb});
    else if (a.what == "rx3c-cgcdi")
        in = rx3c_to_cgcdi(x, a.perturb);
    else
        throw Error(Errc::ParseError, "unknown generator '" + a.what + "'");
    if (a.augment == "gcai")
        in = augment_to_general(in, AugmentFlavor::Gcai, !a.no_increment);
    else if (a.augment == "gcdi")
        in = augment_to_general(in, AugmentFlavor::Gcdi, !a.no_increment);
    else if (!a.augment.empty())
        throw Error(Errc::ParseError, "augment must be gcai or gcdi");
    return in;
}

int cmd_gen(const GenArgs& a, Format fmt)
{
    const bool profile_kind = a.what == "profile" || a.what == "r-profile" || a.what == "r-partial";
    for (int i = 0; i < a.count; ++i) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
        std::string text, ext;
        if (profile_kind) {
            Profile p;
            if (a.what == "profile") {
                ProfileKind k = a.kind == "partial"   ? ProfileKind::Partial
                                : a.kind == "ternary" ? ProfileKind::Ternary
                                : a.kind == "binary"  ? ProfileKind::Binary
                                                      : throw Error(Errc::ParseError, "unknown kind " + a.kind);
                p = gen_random_profile(a.n, k, a.shape.density, seed);
            } else if (a.what == "r-profile") {
                p = gen_random_r_profile(a.n, a.shape.r, seed);
            } else {
                p = gen_random_r_partial(a.n, a.shape.r, a.shape.density, seed);
            }
            text = format_profile(p);
            ext = ".gid";
        } else {
            AttackInstance in = a.what == "instance" ? gen_random_instance(a.shape.shape(), seed) : reduction(a, seed);
            text = format_instance(in);
            ext = ".gidinst";
        }
        if (a.out.empty()) {
            std::cout << text;
            continue;
        }
        fs::create_directories(a.out);
        fs::path file = fs::path(a.out) / (a.what + "-" + std::to_string(seed) + ext);
        write_text_file(file, text);
        Report rep;
        rep.add("file", file.string());
        rep.add("digest", content_digest(text));
        rep.emit(fmt, std::cout);
    }
    return kYes;
}

// ---- xval ------------------------------------------------------------------

struct XvalArgs {
    std::string solver = "auto";
    std::size_t count = 100;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string config;
    bool rows = false;
    bool no_timing = false;
    std::optional<std::uint64_t> node_limit;
    ShapeArgs shape;
};

SweepSpec make_spec(const std::string& solver, const ShapeArgs& shape, std::size_t count, std::uint64_t seed,
                    const std::optional<std::uint64_t>& node_limit)
{
    SweepSpec spec;
    spec.solver = solver;
    spec.count = count;
    spec.seed = seed;
    if (is_partial_sweep(solver))
        spec.partial = shape.partial();
    else
        spec.shape = shape.shape();
    if (node_limit)
        spec.budget.node_limit = *node_limit;
    return spec;
}

int cmd_xval(const XvalArgs& a, Format fmt)
{
    std::vector<std::pair<std::string, SweepSpec>> sweeps;
    if (!a.config.empty()) {
        nlohmann::json cfg;
        try {
            cfg = nlohmann::json::parse(read_text_file(a.config));
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, std::string("config: ") + e.what());
        }
        if (!cfg.is_array())
            cfg = nlohmann::json::array({cfg});
        for (const auto& j : cfg) {
            ShapeArgs shape = a.shape;
            try {
                shape.load(j);
                std::string solver = j.value("solver", a.solver);
                std::string label = j.value("label", solver + " " + shape.family);
                sweeps.emplace_back(label, make_spec(solver, shape, j.value("count", a.count),
                                                     j.value("seed", a.seed), a.node_limit));
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::ParseError, std::string("config: ") + e.what());
            }
        }
    } else {
        sweeps.emplace_back(a.solver + " " + a.shape.family, make_spec(a.solver, a.shape, a.count, a.seed, a.node_limit));
    }

    bool all_ok = true;
    if (fmt == Format::Tsv) {
        std::cout << "sweep\tcount\tagree\tdisagree";
        if (!a.no_timing)
            std::cout << "\tfast_ms\tbrute_ms";
        std::cout << '\n';
    }
    std::vector<std::string> row_lines;
    for (const auto& [label, spec] : sweeps) {
        SweepSummary sum = run_sweep(spec, a.jobs);
        all_ok = all_ok && sum.ok();
        double fast = 0, brute = 0;
        for (const SweepRow& r : sum.rows) {
            fast += r.fast_ms;
            brute += r.brute_ms;
        }
        if (fmt == Format::Tsv) {
            std::cout << label << '\t' << sum.rows.size() << '\t' << sum.agreements << '\t' << sum.disagreements;
            if (!a.no_timing)
                std::cout << '\t' << fmt_ms(fast) << '\t' << fmt_ms(brute);
            std::cout << '\n';
        } else {
            nlohmann::ordered_json obj{{"sweep", label},
                                       {"count", sum.rows.size()},
                                       {"agree", sum.agreements},
                                       {"disagree", sum.disagreements}};
            if (!a.no_timing) {
                obj["fast_ms"] = fmt_ms(fast);
                obj["brute_ms"] = fmt_ms(brute);
            }
            std::cout << obj.dump() << '\n';
        }
        for (const SweepRow& r : sum.rows) {
            if (!a.rows && r.agree)
                continue;
            if (fmt == Format::Tsv) {
                std::ostringstream line;
                line << "row\t" << label << '\t' << r.index << '\t' << r.seed << '\t' << r.digest << '\t' << r.n << '\t'
                     << r.fast << '\t' << r.brute << '\t' << (r.agree ? "agree" : "DISAGREE") << '\t' << r.note;
                if (!a.no_timing)
                    line << '\t' << fmt_ms(r.fast_ms) << '\t' << fmt_ms(r.brute_ms);
                row_lines.push_back(line.str());
            } else {
                nlohmann::ordered_json obj{{"row", label}, {"index", r.index}, {"seed", r.seed},
                                           {"digest", r.digest}, {"n", r.n}, {"fast", r.fast},
                                           {"brute", r.brute}, {"agree", r.agree}, {"note", r.note}};
                if (!a.no_timing) {
                    obj["fast_ms"] = fmt_ms(r.fast_ms);
                    obj["brute_ms"] = fmt_ms(r.brute_ms);
                }
                row_lines.push_back(obj.dump());
            }
        }
    }
    for (const auto& line : row_lines)
        std::cout << line << '\n';
    return all_ok ? kYes : kDisagree;
}

// ---- diag ------------------------------------------------------------------

int cmd_diag(const std::string& path, Format fmt)
{
    AttackInstance in = read_instance_file(path);
    InstanceDiagnostics d = diagnostics(in);
    Report rep;
    rep.add("digest", instance_digest(in));
    rep.add("s_star", d.s_star ? std::to_string(*d.s_star) : "undefined");
    rep.add("t_star", d.t_star ? std::to_string(*d.t_star) : "undefined");
    for (const TargetSlack& t : d.per_individual)
        rep.add("slack", in.profile.name(t.who) + (t.qualify ? " s" : " t") + " missing=" + std::to_string(t.missing) +
                             " choices=" + std::to_string(t.choices));
    rep.emit(fmt, std::cout);
    return kYes;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gid: group identification attacks, solvers and cross-validation"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "tsv|json-lines")->check(CLI::IsMember({"tsv", "json-lines"}));

    EvalArgs ea;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a rule on a profile");
    eval_cmd->add_option("profile", ea.profile)->required();
    eval_cmd->add_option("--rule", ea.rule, "consent:s,t | csr | lsr | ternary:s,s',t")->required();
    eval_cmd->add_option("--subset", ea.subset, "comma-separated names; empty for the empty set");
    eval_cmd->add_flag("--trace", ea.trace, "print the rounds of CSR/LSR");

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "decide an attack instance");
    solve_cmd->add_option("instance", sa.instance)->required();
    solve_cmd->add_option("--solver", sa.solver)->check(CLI::IsMember(solver_names()));
    solve_cmd->add_option("--limit-nodes", sa.node_limit);
    solve_cmd->add_flag("--no-timing", sa.no_timing);

    PartialArgs pa;
    auto* partial_cmd = app.add_subcommand("partial", "possible/necessary qualification on a partial profile");
    partial_cmd->add_option("profile", pa.profile)->required();
    partial_cmd->add_option("--mode", pa.mode, "pqi|nqi");
    partial_cmd->add_option("--rule", pa.rule)->required();
    partial_cmd->add_option("--set", pa.set, "query set S")->required();
    partial_cmd->add_option("--r", pa.r);
    partial_cmd->add_flag("--xval", pa.xval, "also run exhaustive search");

    GenArgs ga;
    auto* gen_cmd = app.add_subcommand("gen", "generate profiles and instances");
    gen_cmd->add_option("what", ga.what,
                        "profile | r-profile | r-partial | instance | rx3c-cgb | rx3c-cgb-clipped | "
                        "rx3c-cgcai-consent | rx3c-cgcai-lsr | rx3c-cgcdi")
        ->required();
    gen_cmd->add_option("--n", ga.n);
    gen_cmd->add_option("--kind", ga.kind, "binary|partial|ternary");
    gen_cmd->add_option("--m", ga.m, "RX3C size");
    gen_cmd->add_option("--t", ga.t, "consent t of the r-profile reduction");
    gen_cmd->add_option("--seed", ga.seed);
    gen_cmd->add_option("--count", ga.count);
    gen_cmd->add_flag("--perturb", ga.perturb);
    gen_cmd->add_flag("--no-cover", ga.no_cover, "source family without exact cover (m >= 2)");
    gen_cmd->add_option("--augment", ga.augment, "gcai|gcdi");
    gen_cmd->add_flag("--no-increment", ga.no_increment, "keep the budget when augmenting");
    gen_cmd->add_option("--out", ga.out, "directory; stdout when absent");
    ga.shape.attach(gen_cmd);

    XvalArgs xa;
    auto* xval_cmd = app.add_subcommand("xval", "sweep a solver against exhaustive search");
    xval_cmd->add_option("--solver", xa.solver, "solver name, immunity, pqi, nqi, r_pqi_flow, r_pqi, r_nqi");
    xval_cmd->add_option("--count", xa.count);
    xval_cmd->add_option("--seed", xa.seed);
    xval_cmd->add_option("--jobs", xa.jobs);
    xval_cmd->add_option("--config", xa.config, "JSON object or array of sweeps");
    xval_cmd->add_flag("--rows", xa.rows, "print every row, not only disagreements");
    xval_cmd->add_flag("--no-timing", xa.no_timing);
    xval_cmd->add_option("--limit-nodes", xa.node_limit);
    xa.shape.attach(xval_cmd);

    std::string diag_path;
    auto* diag_cmd = app.add_subcommand("diag", "print s* and t*");
    diag_cmd->add_option("instance", diag_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    const Format fmt = format == "json-lines" ? Format::JsonLines : Format::Tsv;
    const std::string command = echo(argc, argv);
    try {
        if (*eval_cmd)
            return cmd_eval(ea, fmt);
        if (*solve_cmd)
            return cmd_solve(sa, fmt, command);
        if (*partial_cmd)
            return cmd_partial(pa, fmt, command);
        if (*gen_cmd)
            return cmd_gen(ga, fmt);
        if (*xval_cmd)
            return cmd_xval(xa, fmt);
        if (*diag_cmd)
            return cmd_diag(diag_path, fmt);
    } catch (const Error& e) {
        std::cerr << "gid: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "gid: " << e.what() << '\n';
        return kMismatch;
    }
    return kParse;
}
