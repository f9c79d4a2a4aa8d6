#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cgame/gadgets.hpp"
#include "cgame/qbf.hpp"
#include "cgame/solver.hpp"
#include "cgame/text_format.hpp"
#include "cgame/unfolding.hpp"
#include "crosscheck.hpp"

using namespace cgame;

namespace {

enum Exit { kOk = 0, kDisagree = 1, kInput = 2, kResource = 3, kPrecondition = 4 };

/// key: value lines, emitted in insertion order.
class Report {
public:
    template <class T>
    void add(const std::string& key, const T& value)
    {
        std::ostringstream os;
        os << std::boolalpha << value;
        out_ << key << ": " << os.str() << '\n';
    }
    void block(const std::string& key, const std::vector<std::string>& lines)
    {
        out_ << key << ":\n";
        for (const auto& l : lines) out_ << "  " << l << '\n';
    }
    void print(int exit_code)
    {
        add("exit", exit_code);
        std::cout << out_.str();
    }

private:
    std::ostringstream out_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GameError(ErrorKind::SyntaxError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv(const std::vector<std::int64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::vector<std::string> antichain_lines(const Antichain& a)
{
    std::vector<std::string> lines;
    for (const auto& v : a) lines.push_back(csv(v.values()));
    return lines;  // Antichain keeps its elements sorted lexicographically
}

LoadVector parse_vector(const std::string& text, int d)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size())
            throw GameError(ErrorKind::InvalidVector, "'" + part + "' is not an integer");
        out.push_back(x);
    }
    if (static_cast<int>(out.size()) != d)
        throw GameError(ErrorKind::DimensionMismatch,
                        "vector has " + std::to_string(out.size()) + " components, game has dimension " +
                            std::to_string(d));
    return LoadVector(std::move(out));
}

struct GameQuery {
    std::string file;
    std::string state;
};

struct Loaded {
    Game game;
    StateId s;
};

Loaded load(const GameQuery& q, Report& r)
{
    Game g = parse_game(read_file(q.file));
    const StateId s = q.state.empty() ? 0 : g.state(q.state);
    const auto cls = classify(g);
    r.add("file", q.file);
    r.add("state", g.name(s));
    r.add("dimension", g.dimension());
    r.add("states", g.num_states());
    r.add("edges", g.num_edges());
    r.add("max-drop", max_finite_drop(g));
    r.add("one-player", cls.one_player);
    r.add("decreasing", cls.decreasing);
    return {std::move(g), s};
}

void add_game_options(CLI::App* sub, GameQuery& q)
{
    sub->add_option("file", q.file, "game file")->required();
    sub->add_option("--state", q.state, "state to query (default: first declared)");
}

int exit_for(const GameError& e)
{
    switch (category(e.kind())) {
    case ErrorCategory::Input: return kInput;
    case ErrorCategory::Resource: return kResource;
    case ErrorCategory::Precondition: return kPrecondition;
    }
    return kInput;
}

int cmd_check(const GameQuery& q)
{
    Report r;
    r.add("command", "check");
    auto [g, s] = load(q, r);
    const auto res = safe_emptiness_detail(g, s);
    r.add("safe", res.empty ? "empty" : "nonempty");
    // Cover(s) is empty exactly when Safe(s) is, since (D,...,D) lies in both.
    r.add("cover", res.empty ? "empty" : "nonempty");
    r.add("method", to_string(res.method));
    r.print(kOk);
    return kOk;
}

int cmd_membership(const GameQuery& q, const std::string& vector, bool cover, bool explain)
{
    Report r;
    r.add("command", "membership");
    auto [g, s] = load(q, r);
    const LoadVector alpha = parse_vector(vector, g.dimension());
    r.add("vector", csv(alpha.values()));
    r.add("set", cover ? "cover" : "safe");
    const auto res = cover ? cover_membership_detail(g, s, alpha) : safe_membership_detail(g, s, alpha);
    r.add("member", res.member);
    if (explain) {
        r.add("arena-caps", csv(res.caps));
        r.add("arena-vertices", res.arena_vertices);
        r.add("arena-edges", res.arena_edges);
    }
    r.print(kOk);
    return kOk;
}

struct MinimalFlags {
    bool cover = false;
    std::string method = "auto";
    std::optional<std::int64_t> max_cover_bound;
    bool cpi_literal = false;
};

int cmd_minimal(const GameQuery& q, const MinimalFlags& f, int jobs)
{
    Report r;
    r.add("command", "minimal");
    auto [g, s] = load(q, r);
    r.add("set", f.cover ? "cover" : "safe");
    const auto cls = classify(g);

    if (f.cover) {
        if (f.method != "auto" && f.method != "general")
            throw GameError(ErrorKind::NotOnePlayer, "cover minimal elements only support --method general");
        CoverOptions co;
        co.bound_override = f.max_cover_bound;
        co.jobs = jobs;
        const auto res = cover_minimal_elements(g, s, co);
        r.add("method", "general");
        r.add("cover-box", res.box);
        r.add("cover-bound", res.exact_bound);
        r.add("truncated", res.truncated);
        r.add("membership-calls", res.membership_calls);
        r.add("size", res.minimals.size());
        r.block("antichain", antichain_lines(res.minimals));
        r.print(kOk);
        return kOk;
    }

    std::string method = f.method;
    if (method == "auto") method = cls.one_player ? "permutation" : cls.decreasing ? "decreasing" : "general";
    r.add("method", method);

    Antichain result;
    MinSafeRun run;
    if (method == "permutation") {
        result = min_safe_one_player(g, s, {jobs, f.cpi_literal ? EdgeRule::Literal : EdgeRule::Exact}, &run);
        r.add("edge-rule", f.cpi_literal ? "literal" : "exact");
    } else if (method == "decreasing") {
        result = min_safe_decreasing(g, s, &run);
    } else {
        result = safe_minimal_elements(g, s);
    }
    if (!run.stats.empty()) {
        int iterations = 0;
        std::size_t peak = 0;
        for (const auto& st : run.stats) {
            iterations = std::max(iterations, st.iterations);
            peak = std::max(peak, st.peak_antichain);
        }
        r.add("min-dist-calls", run.stats.size());
        r.add("max-iterations", iterations);
        r.add("peak-antichain", peak);
    }
    r.add("size", result.size());
    r.block("antichain", antichain_lines(result));
    r.print(kOk);
    return kOk;
}

void print_header_comment(const std::string& text)
{
    std::cout << "# " << text << '\n';
}

int cmd_gen_qbf(const std::string& file)
{
    const QbfInstance q = parse_qbf(read_file(file));
    const QbfGadget gadget = gen_qbf(q);
    print_header_comment("qbf gadget from " + file);
    print_header_comment("start " + gadget.game.name(gadget.start));
    print_header_comment("critical " + csv(gadget.critical.values()));
    std::cout << serialize_game(gadget.game);
    return kOk;
}

int cmd_gen_satunsat(const std::string& phi_file, const std::string& psi_file, bool gamma_literal)
{
    const QbfInstance phi = parse_qbf(read_file(phi_file));
    QbfInstance psi = parse_qbf(read_file(psi_file));
    const int offset = max_variable(phi);
    psi = shift_variables(psi, offset);
    const SatUnsatGadget gadget = gen_satunsat(phi, psi, gamma_literal ? GammaRule::EvenDrop : GammaRule::OddDrop);
    print_header_comment("sat-unsat gadget from " + phi_file + " and " + psi_file);
    print_header_comment("psi variables shifted by " + std::to_string(offset));
    print_header_comment(std::string("gamma rule ") + (gamma_literal ? "even drops" : "odd drops"));
    print_header_comment("start " + gadget.game.name(gadget.start));
    print_header_comment("xi " + csv(gadget.xi.values()));
    std::cout << serialize_game(gadget.game);
    return kOk;
}

struct RandomArgs {
    std::uint64_t seed = 1;
    int states = 4;
    int dimension = 2;
    int max_drop = 3;
    RandomGameFlags flags;
};

int cmd_gen_random(const RandomArgs& a)
{
    const Game g = random_game(a.seed, a.states, a.dimension, a.max_drop, a.flags);
    std::ostringstream hdr;
    hdr << "random seed " << a.seed << " states " << a.states << " dimension " << a.dimension << " max-drop "
        << a.max_drop << (a.flags.one_player ? " one-player" : "") << (a.flags.decreasing ? " decreasing" : "");
    print_header_comment(hdr.str());
    std::cout << serialize_game(g);
    return kOk;
}

struct CrossArgs {
    std::string file;
    std::string suite;
    std::uint64_t seed = 1;
    int count = 50;
    bool inject_fault = false;
};

int cmd_crosscheck(const CrossArgs& a, int jobs)
{
    check::Options options;
    options.jobs = jobs;
    options.inject_fault = a.inject_fault;

    Report r;
    r.add("command", "crosscheck");
    check::SuiteReport report;
    if (!a.file.empty()) {
        const Game g = parse_game(read_file(a.file));
        r.add("file", a.file);
        report.instances = 1;
        report.outcome = check::check_game(g, options);
        if (!report.outcome.agree()) {
            report.counterexample_name = a.file;
            report.counterexample = serialize_game(check::minimize(g, options));
        }
    } else if (a.suite == "fixtures") {
        r.add("suite", a.suite);
        report = check::run_fixtures(options);
    } else if (a.suite == "random") {
        r.add("suite", a.suite);
        r.add("seed", a.seed);
        report = check::run_random(a.seed, a.count, options);
    } else if (a.suite == "gadgets") {
        r.add("suite", a.suite);
        r.add("seed", a.seed);
        report = check::run_gadgets(a.seed, a.count, options);
    } else {
        throw GameError(ErrorKind::SyntaxError, "give a game file or --suite fixtures|random|gadgets");
    }

    const auto& o = report.outcome;
    r.add("instances", report.instances);
    r.add("checks", o.checks);
    r.add("skipped", o.skipped);
    r.add("disagreements", o.disagreements.size());
    r.add("verdict", o.agree() ? "agree" : "disagree");
    if (!o.agree()) {
        r.block("disagreement", o.disagreements);
        r.add("counterexample-source", report.counterexample_name);
        if (report.counterexample) {
            std::vector<std::string> lines;
            std::stringstream ss(*report.counterexample);
            for (std::string line; std::getline(ss, line);) lines.push_back(line);
            r.block("counterexample", lines);
        }
    }
    const int code = o.agree() ? kOk : kDisagree;
    r.print(code);
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver for consumption games: emptiness, membership and minimal vectors of Safe and Cover"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for the permutation loop and cover scans")
        ->check(CLI::PositiveNumber);

    GameQuery check_q;
    auto* check_cmd = app.add_subcommand("check", "classification and emptiness of Safe and Cover");
    add_game_options(check_cmd, check_q);

    GameQuery mem_q;
    std::string mem_vector;
    bool mem_cover = false, mem_explain = false;
    auto* mem_cmd = app.add_subcommand("membership", "is a load vector in Safe (or Cover)");
    add_game_options(mem_cmd, mem_q);
    mem_cmd->add_option("--vector", mem_vector, "comma-separated positive loads")->required();
    mem_cmd->add_flag("--cover", mem_cover, "query Cover instead of Safe");
    mem_cmd->add_flag("--explain", mem_explain, "report the capped arena");

    GameQuery min_q;
    MinimalFlags min_f;
    auto* min_cmd = app.add_subcommand("minimal", "minimal vectors of Safe (or Cover)");
    add_game_options(min_cmd, min_q);
    min_cmd->add_flag("--cover", min_f.cover, "minimal vectors of Cover");
    min_cmd->add_option("--method", min_f.method, "auto, general, permutation or decreasing")
        ->check(CLI::IsMember({"auto", "general", "permutation", "decreasing"}));
    min_cmd->add_option("--max-cover-bound", min_f.max_cover_bound, "cap the cover candidate box")
        ->check(CLI::PositiveNumber);
    min_cmd->add_flag("--cpi-literal", min_f.cpi_literal, "permutation unfolding with the literal edge rule");

    auto* gen_cmd = app.add_subcommand("gen", "generate games");
    gen_cmd->require_subcommand(1);
    std::string qbf_file;
    auto* gen_qbf_cmd = gen_cmd->add_subcommand("qbf", "QBF gadget (two-player, decreasing)");
    gen_qbf_cmd->add_option("file", qbf_file, "QDIMACS formula")->required();
    std::string phi_file, psi_file;
    bool gamma_literal = false;
    auto* gen_su_cmd = gen_cmd->add_subcommand("sat-unsat", "SAT-UNSAT gadget (one-player)");
    gen_su_cmd->add_option("phi", phi_file, "formula that should be satisfiable")->required();
    gen_su_cmd->add_option("psi", psi_file, "formula that should be unsatisfiable")->required();
    gen_su_cmd->add_flag("--gamma-literal", gamma_literal, "drops of 2(n'-i+1) on the psi side");
    RandomArgs rnd;
    auto* gen_rnd_cmd = gen_cmd->add_subcommand("random", "seeded random game");
    gen_rnd_cmd->add_option("--seed", rnd.seed, "seed");
    gen_rnd_cmd->add_option("--states", rnd.states, "number of states")->check(CLI::PositiveNumber);
    gen_rnd_cmd->add_option("--dimension", rnd.dimension, "dimension")->check(CLI::Range(1, 32));
    gen_rnd_cmd->add_option("--max-drop", rnd.max_drop, "largest finite drop")->check(CLI::NonNegativeNumber);
    gen_rnd_cmd->add_flag("--one-player", rnd.flags.one_player, "every state owned by box");
    gen_rnd_cmd->add_flag("--decreasing", rnd.flags.decreasing, "every cycle touches every resource");
    gen_rnd_cmd->add_option("--omega-density", rnd.flags.omega_density, "reload probability per component")
        ->check(CLI::Range(0.0, 1.0));

    CrossArgs cross;
    auto* cross_cmd = app.add_subcommand("crosscheck", "compare every applicable algorithm and the oracle");
    cross_cmd->add_option("file", cross.file, "game file");
    cross_cmd->add_option("--suite", cross.suite, "fixtures, random or gadgets")
        ->check(CLI::IsMember({"fixtures", "random", "gadgets"}));
    cross_cmd->add_option("--seed", cross.seed, "first seed of a generated suite");
    cross_cmd->add_option("--count", cross.count, "instances in a generated suite")->check(CLI::PositiveNumber);
    cross_cmd->add_flag("--inject-fault", cross.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (check_cmd->parsed()) return cmd_check(check_q);
        if (mem_cmd->parsed()) return cmd_membership(mem_q, mem_vector, mem_cover, mem_explain);
        if (min_cmd->parsed()) return cmd_minimal(min_q, min_f, jobs);
        if (gen_qbf_cmd->parsed()) return cmd_gen_qbf(qbf_file);
        if (gen_su_cmd->parsed()) return cmd_gen_satunsat(phi_file, psi_file, gamma_literal);
        if (gen_rnd_cmd->parsed()) return cmd_gen_random(rnd);
        if (cross_cmd->parsed()) return cmd_crosscheck(cross, jobs);
    } catch (const GameError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    }
    return kInput;
}
