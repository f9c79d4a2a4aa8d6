// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select criteria by number.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cgame/fixtures.hpp"
#include "cgame/gadgets.hpp"
#include "cgame/oracle.hpp"
#include "cgame/qbf.hpp"
#include "cgame/solver.hpp"
#include "cgame/streett.hpp"
#include "cgame/buchi.hpp"
#include "cgame/streett_automaton.hpp"
#include "cgame/text_format.hpp"
#include "cgame/unfolding.hpp"

using namespace cgame;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Collects violations; prints the first few.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what)
    {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) failures_.push_back(what());
        ++failed_;
    }
    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }
    const std::vector<std::string>& samples() const { return failures_; }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

struct Result {
    bool pass;
    std::string detail;
};

std::vector<LoadVector> sorted_loads(const Antichain& a)
{
    std::vector<LoadVector> out;
    for (const auto& v : a) out.push_back(v.to_load());
    std::sort(out.begin(), out.end());
    return out;
}

std::string show(const std::vector<LoadVector>& vs)
{
    std::string out = "{";
    for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? " " : "") + to_string(vs[k]);
    return out + "}";
}

std::string show(const Antichain& a) { return show(sorted_loads(a)); }

Antichain chain(std::vector<std::vector<std::int64_t>> vs)
{
    std::vector<ExtVector> out;
    for (auto& v : vs) out.emplace_back(std::move(v));
    return min_set(std::move(out));
}

Result finish(const Tally& t, std::string summary, double elapsed, double limit)
{
    std::ostringstream os;
    os << summary << ", " << t.checks() << " checks, " << t.failed() << " violations, " << std::fixed;
    os.precision(2);
    os << elapsed << " s (limit " << limit << " s)";
    for (const auto& f : t.samples()) os << "\n    " << f;
    const bool in_time = elapsed < limit;
    if (!in_time) os << "\n    time limit exceeded";
    return {t.failed() == 0 && in_time && t.checks() > 0, os.str()};
}

// Random instance parameters shared by criteria 2 and 3.
struct Instance {
    std::uint64_t seed;
    Game game;
};

std::vector<Instance> oracle_instances()
{
    std::vector<Instance> out;
    for (int k = 0; k < 500; ++k) {
        const std::uint64_t seed = 20'000 + static_cast<std::uint64_t>(k);
        RandomGameFlags f;
        f.one_player = k % 4 == 1 || k % 4 == 3;
        f.decreasing = k % 4 >= 2;
        f.omega_density = k % 8 < 4 ? 0.25 : 0.5;
        out.push_back({seed, random_game(seed, 1 + k % 6, 1 + (k / 6) % 2, (k / 12) % 4, f)});
    }
    return out;
}

/// Candidate box for cover comparisons: the exact bound for d = 1, at most 16
/// for d = 2.
std::int64_t cover_box(const Game& g) { return std::min(cover_bound(g), g.dimension() == 1 ? cover_bound(g) : 16); }

LoadVector random_vector(std::mt19937_64& rng, int d, std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> pick(1, std::max<std::int64_t>(hi, 1));
    std::vector<std::int64_t> v(d);
    for (auto& x : v) x = pick(rng);
    return LoadVector(std::move(v));
}

std::vector<LoadVector> with_lower_neighbours(const Antichain& a)
{
    std::vector<LoadVector> out;
    for (const auto& e : a) {
        out.push_back(e.to_load());
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto w = e.values();
            if (--w[i] >= 1) out.emplace_back(w);
        }
    }
    return out;
}

Result criterion1()
{
    const auto t0 = Clock::now();
    Tally t;
    const auto safe = [&](const char* f, const char* s, const Antichain& expected) {
        const Game g = fixture(f);
        const auto got = safe_minimal_elements(g, g.state(s));
        t.check(got == expected, [&] { return std::string(f) + " " + s + " safe " + show(got); });
    };
    const auto cover = [&](const char* f, const char* s, const Antichain& expected) {
        const Game g = fixture(f);
        const auto got = cover_minimal_elements(g, g.state(s)).minimals;
        t.check(got == expected, [&] { return std::string(f) + " " + s + " cover " + show(got); });
    };
    safe("F1", "s", chain({{1}}));
    safe("F2", "s", {});
    safe("F3", "s", chain({{4}}));
    safe("F4", "s", chain({{2}}));
    safe("F4", "u", chain({{6}}));
    safe("F5", "q", chain({{3}}));
    safe("F8", "s", chain({{2, 4}}));
    cover("F4", "s", chain({{6}}));
    cover("F1", "s", chain({{1}}));
    return finish(t, "fixture antichains", seconds_since(t0), 1.0);
}

Result criterion2(const std::vector<Instance>& instances)
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t vectors = 0;
    for (const auto& [seed, g] : instances) {
        std::mt19937_64 rng(seed);
        const int d = g.dimension();
        const std::int64_t D = global_bound(g);
        const auto mine = safe_minimal_elements_all(g);
        const auto ref = oracle_safe_minimals_all(g, D);
        const std::int64_t C = cover_box(g);
        for (StateId s = 0; s < g.num_states(); ++s) {
            const auto tag = [&] { return "seed " + std::to_string(seed) + " state " + g.name(s); };
            const auto got = sorted_loads(mine[s]);
            t.check(got == ref[s], [&] { return tag() + ": safe minimals " + show(got) + " vs oracle " + show(ref[s]); });

            auto probes = with_lower_neighbours(mine[s]);
            for (int k = 0; k < 3; ++k) probes.push_back(random_vector(rng, d, D + 2));
            for (const auto& v : probes) {
                const std::int64_t cap = std::max(D, *std::max_element(v.values().begin(), v.values().end()));
                const bool a = safe_membership(g, s, v), b = oracle_safe_membership(g, s, v, cap);
                ++vectors;
                t.check(a == b, [&] { return tag() + ": safe membership " + to_string(v); });
            }
            for (int k = 0; k < 3; ++k) {
                const auto v = random_vector(rng, d, C);
                const bool a = cover_membership(g, s, v), b = oracle_cover_membership(g, s, v);
                ++vectors;
                t.check(a == b, [&] { return tag() + ": cover membership " + to_string(v); });
            }

            CoverOptions co;
            co.bound_override = C;
            const auto cov = cover_minimal_elements(g, s, co);
            const auto cref = oracle_cover_minimals(g, s, C);
            const auto cgot = sorted_loads(cov.minimals);
            t.check(cgot == cref,
                    [&] { return tag() + ": cover minimals " + show(cgot) + " vs oracle " + show(cref); });
        }
    }
    return finish(t, std::to_string(instances.size()) + " games, " + std::to_string(vectors) + " membership probes",
                  seconds_since(t0), 600.0);
}

Result criterion3(const std::vector<Instance>& instances)
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t nonempty = 0;
    for (const auto& [seed, g] : instances) {
        const std::int64_t D = global_bound(g);
        const auto mins = safe_minimal_elements_all(g);
        const auto top = LoadVector::uniform(g.dimension(), D);
        for (StateId s = 0; s < g.num_states(); ++s) {
            const auto tag = [&] { return "seed " + std::to_string(seed) + " state " + g.name(s); };
            for (const auto& v : mins[s])
                for (std::size_t i = 0; i < v.size(); ++i)
                    t.check(v[i] <= D, [&] { return tag() + ": component above " + std::to_string(D); });
            const bool safe_nonempty = !mins[s].empty();
            nonempty += safe_nonempty;
            if (safe_nonempty) {
                t.check(oracle_safe_membership(g, s, top, D), [&] { return tag() + ": (D..D) not safe"; });
                t.check(oracle_cover_membership(g, s, top), [&] { return tag() + ": (D..D) not in Cover"; });
            }
            // Cover is nonempty iff it holds (D,...,D) for some large D; the
            // oracle probes a box twice as large.
            const bool cover_nonempty = oracle_cover_membership(g, s, LoadVector::uniform(g.dimension(), 2 * D));
            t.check(safe_nonempty == cover_nonempty, [&] { return tag() + ": Safe and Cover emptiness differ"; });
        }
    }
    return finish(t, std::to_string(nonempty) + " nonempty states", seconds_since(t0), 600.0);
}

Result criterion4()
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t restricted = 0;
    for (int k = 0; k < 500; ++k) {
        const std::uint64_t seed = 40'000 + static_cast<std::uint64_t>(k);
        RandomGameFlags f;
        f.one_player = k % 4 == 1 || k % 4 == 3;
        f.decreasing = k % 4 >= 2;
        const Game g = random_game(seed, 1 + k % 8, 1 + (k / 8) % 3, 1 + (k / 24) % 3, f);
        const auto cls = classify(g);
        const auto streett = solve_streett_game(to_streett(g));
        std::optional<std::vector<char>> buchi, automaton;
        if (cls.decreasing) buchi = solve_generalized_buchi(to_generalized_buchi(g));
        if (cls.one_player) automaton = streett_automaton_nonempty_states(g);
        restricted += buchi.has_value() + automaton.has_value();
        for (StateId s = 0; s < g.num_states(); ++s) {
            const bool nonempty = streett[s];
            const auto tag = [&] { return "seed " + std::to_string(seed) + " state " + g.name(s); };
            t.check(capped_arena_emptiness(g, s) == !nonempty, [&] { return tag() + ": capped arena"; });
            if (buchi) t.check(bool((*buchi)[s]) == nonempty, [&] { return tag() + ": generalized Buchi"; });
            if (automaton) t.check(bool((*automaton)[s]) == nonempty, [&] { return tag() + ": Streett automaton"; });
            t.check(safe_emptiness(g, s) == !nonempty, [&] { return tag() + ": dispatcher"; });
        }
    }
    return finish(t, "500 games, " + std::to_string(restricted) + " restricted-route runs", seconds_since(t0), 600.0);
}

struct FamilyRuns {
    struct Run {
        std::size_t states;
        int d;
        std::int64_t l;
        MinDistStats stats;
        bool hat;
    };
    std::vector<Run> runs;
};

Result criterion5(FamilyRuns& runs)
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t nonempty = 0;
    for (int family = 0; family < 2; ++family) {
        for (int k = 0; k < 200; ++k) {
            const std::uint64_t seed = 60'000 + 1000 * static_cast<std::uint64_t>(family) + static_cast<std::uint64_t>(k);
            RandomGameFlags f;
            f.one_player = family == 0;
            f.decreasing = family == 1;
            f.omega_density = k % 2 ? 0.5 : 0.3;
            const Game g = random_game(seed, 1 + k % 5, 1 + (k / 5) % 2, 1 + (k / 10) % 3, f);
            const auto general = safe_minimal_elements_all(g);
            for (StateId s = 0; s < g.num_states(); ++s) {
                nonempty += !general[s].empty();
                MinSafeRun run;
                const Antichain got = family == 0 ? min_safe_one_player(g, s, {}, &run) : min_safe_decreasing(g, s, &run);
                t.check(got == general[s], [&] {
                    return std::string(family == 0 ? "one-player" : "decreasing") + " seed " + std::to_string(seed) +
                           " state " + g.name(s) + ": " + show(got) + " vs general " + show(general[s]);
                });
                for (const auto& st : run.stats)
                    runs.runs.push_back({g.num_states(), g.dimension(), max_finite_drop(g), st, family == 1});
            }
        }
    }
    return finish(t, "200 one-player and 200 decreasing games, " + std::to_string(nonempty) + " nonempty states",
                  seconds_since(t0), 600.0);
}

Result criterion6(const FamilyRuns& runs)
{
    const auto t0 = Clock::now();
    Tally t;
    int max_iter = 0;
    std::size_t max_peak = 0;
    for (const auto& r : runs.runs) {
        const std::int64_t a = static_cast<std::int64_t>(r.states) * r.d + 1;
        std::int64_t bound = 1;
        for (int i = 0; i < r.d; ++i) bound *= a * std::max<std::int64_t>(r.l, 1);
        max_iter = std::max(max_iter, r.stats.iterations);
        max_peak = std::max(max_peak, r.stats.peak_antichain);
        t.check(r.stats.iterations <= a, [&] {
            return std::string(r.hat ? "hat" : "C(pi)") + " iterations " + std::to_string(r.stats.iterations) +
                   " > " + std::to_string(a);
        });
        t.check(static_cast<std::int64_t>(r.stats.peak_antichain) <= bound, [&] {
            return "antichain size " + std::to_string(r.stats.peak_antichain) + " > " + std::to_string(bound);
        });
    }
    return finish(t,
                  std::to_string(runs.runs.size()) + " min-dist runs, max iterations " + std::to_string(max_iter) +
                      ", max antichain " + std::to_string(max_peak),
                  seconds_since(t0), 60.0);
}

bool minimal_safe(const Game& g, StateId s, const LoadVector& v)
{
    if (!safe_membership(g, s, v)) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto w = v.values();
        if (--w[i] >= 1 && safe_membership(g, s, LoadVector(w))) return false;
    }
    return true;
}

Result criterion7()
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t truths = 0;
    for (int k = 0; k < 200; ++k) {
        const std::uint64_t seed = 70'000 + static_cast<std::uint64_t>(k);
        const QbfInstance q = random_qbf(seed, 1 + k % 3, 1 + (k / 3) % 3);
        const QbfGadget gadget = gen_qbf(q);
        const bool truth = eval_qbf(q);
        truths += truth;
        const auto tag = [&] { return "seed " + std::to_string(seed) + " (" + (truth ? "true" : "false") + ")"; };
        const Antichain mins = min_safe_decreasing(gadget.game, gadget.start);
        t.check(mins.contains(ExtVector(gadget.critical)) == truth,
                [&] { return tag() + ": minimal elements " + show(mins); });
        t.check(safe_membership(gadget.game, gadget.start, gadget.critical) == truth,
                [&] { return tag() + ": membership of the critical vector"; });
        t.check(minimal_safe(gadget.game, gadget.start, gadget.critical) == truth,
                [&] { return tag() + ": neighbour test"; });
    }

    const Game f9 = fixture("F9");
    const auto label_of = [&](const char* a, const char* b) {
        for (auto e : f9.out_edges(f9.state(a)))
            if (f9.edge(e).target == f9.state(b)) return to_string(f9.edge(e).label);
        return std::string("missing");
    };
    t.check(label_of("s1", "s_x1") == "-6,-1,-1", [&] { return "s1 -> s_x1 is " + label_of("s1", "s_x1"); });
    t.check(label_of("s2", "s_nx2") == "-4,-1,-4", [&] { return "s2 -> s_nx2 is " + label_of("s2", "s_nx2"); });
    return finish(t, "200 formulas (" + std::to_string(truths) + " true) plus the 3-variable example labels",
                  seconds_since(t0), 300.0);
}

Result criterion8()
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t positive = 0;
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t seed = 80'000 + static_cast<std::uint64_t>(k);
        const QbfInstance phi = random_qbf(seed, 1 + k % 2, 1 + (k / 2) % 2, true);
        const QbfInstance psi = random_qbf(seed + 5000, 1 + (k / 4) % 2, 1 + (k / 8) % 2, true, max_variable(phi) + 1);
        const SatUnsatGadget gadget = gen_satunsat(phi, psi);
        const bool expected = satisfiable(phi) && !satisfiable(psi);
        positive += expected;
        const auto tag = [&] { return "seed " + std::to_string(seed) + (expected ? " (positive)" : " (negative)"); };
        t.check(minimal_safe(gadget.game, gadget.start, gadget.xi) == expected,
                [&] { return tag() + ": neighbour test"; });
        const Antichain mins = min_safe_one_player(gadget.game, gadget.start);
        t.check(mins.contains(ExtVector(gadget.xi)) == expected, [&] { return tag() + ": " + show(mins); });
    }

    const Game f10 = fixture("F10");
    const StateId s1 = f10.state("s1");
    const LoadVector xi({5, 12, 12, 13});
    const QbfInstance phi = parse_qbf(kSatUnsatPhiText);
    const SatUnsatGadget two = gen_satunsat(phi, shift_variables(parse_qbf(kSatUnsatPsiText), max_variable(phi)));
    t.check(two.xi == xi, [&] { return "xi is " + to_string(two.xi); });
    const bool safe = safe_membership(f10, s1, xi), minimal = minimal_safe(f10, s1, xi);
    t.check(safe && !minimal, [&] {
        return std::string("example verdict: ") + (safe ? "safe" : "unsafe") + ", " + (minimal ? "minimal" : "not minimal");
    });
    return finish(t,
                  "100 pairs (" + std::to_string(positive) + " positive); example xi " + to_string(xi) + " " +
                      (safe ? "safe" : "unsafe") + ", " + (minimal ? "minimal" : "not minimal"),
                  seconds_since(t0), 600.0);
}

Result criterion9()
{
    const auto t0 = Clock::now();
    Tally t;
    std::size_t triples = 0, decreasing_calls = 0, certificate_calls = 0;
    const auto probe = [&](const Game& g, StateId s, const LoadVector& v, const std::string& where) {
        const auto cls = classify(g);
        if (!cls.decreasing && !cls.one_player) return;
        ++triples;
        const bool truth = safe_membership(g, s, v);
        if (cls.decreasing) {
            ++decreasing_calls;
            t.check(membership_decreasing_bounded(g, s, v) == truth,
                    [&] { return where + " " + to_string(v) + ": bounded decreasing decider"; });
        }
        if (cls.one_player) {
            ++certificate_calls;
            t.check(membership_one_player_certificate(g, s, v) == truth,
                    [&] { return where + " " + to_string(v) + ": certificate decider"; });
        }
    };

    for (const auto& name : fixture_names()) {
        const Game g = fixture(name);
        const auto cls = classify(g);
        if (!cls.decreasing && !cls.one_player) continue;
        for (StateId s = 0; s < g.num_states(); ++s) {
            const Antichain mins = cls.decreasing ? min_safe_decreasing(g, s) : min_safe_one_player(g, s);
            for (const auto& v : with_lower_neighbours(mins)) probe(g, s, v, name + " " + g.name(s));
        }
    }
    const std::size_t from_fixtures = triples;

    std::mt19937_64 rng(90'000);
    for (std::uint64_t seed = 90'000; triples < 300; ++seed) {
        RandomGameFlags f;
        f.one_player = seed % 3 != 1;
        f.decreasing = seed % 3 != 0;
        const Game g = random_game(seed, 1 + seed % 5, 1 + (seed / 5) % 2, 1 + (seed / 10) % 3, f);
        const StateId s = static_cast<StateId>(seed % g.num_states());
        probe(g, s, random_vector(rng, g.dimension(), global_bound(g)), "seed " + std::to_string(seed));
    }
    return finish(t,
                  std::to_string(triples) + " triples (" + std::to_string(from_fixtures) + " from fixtures), " +
                      std::to_string(decreasing_calls) + " decreasing and " + std::to_string(certificate_calls) +
                      " certificate calls",
                  seconds_since(t0), 600.0);
}

std::string mutate_line(std::mt19937_64& rng, const std::string& line)
{
    static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz0123456789-,w# \t.+:;!xX";
    static const std::vector<std::string> tokens = {"dimension", "state", "edge", "box", "diamond", "w", "-1",
                                                    "0", "1", ",", "-", "99999999999", "-2000000000", "s", ""};
    std::string out = line;
    const auto pos = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng); };
    const int ops = 1 + static_cast<int>(pos(2));
    for (int k = 0; k < ops; ++k) {
        switch (pos(5)) {
        case 0:
            if (!out.empty()) out[pos(out.size() - 1)] = alphabet[pos(alphabet.size() - 1)];
            break;
        case 1:
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos(out.size())), alphabet[pos(alphabet.size() - 1)]);
            break;
        case 2:
            if (!out.empty()) out.erase(pos(out.size() - 1), 1 + pos(3));
            break;
        case 3: {
            std::vector<std::string> words;
            std::istringstream ss(out);
            for (std::string w; ss >> w;) words.push_back(w);
            if (words.empty()) break;
            words[pos(words.size() - 1)] = tokens[pos(tokens.size() - 1)];
            out.clear();
            for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
            break;
        }
        case 4:
            out += " " + tokens[pos(tokens.size() - 1)];
            break;
        default:
            out = tokens[pos(tokens.size() - 1)] + " " + out;
            break;
        }
    }
    return out;
}

Result criterion10()
{
    const auto t0 = Clock::now();
    Tally t;
    std::vector<std::string> corpus;
    for (int k = 0; k < 1000; ++k) {
        const std::uint64_t seed = 100'000 + static_cast<std::uint64_t>(k);
        RandomGameFlags f;
        f.one_player = k % 3 == 0;
        f.omega_density = (k % 5) / 4.0;
        f.max_out_degree = 1 + k % 4;
        const Game g = random_game(seed, 1 + k % 9, 1 + k % 4, k % 7, f);
        const std::string text = serialize_game(g);
        bool ok = false;
        try {
            const Game back = parse_game(text);
            ok = back == g && serialize_game(back) == text;
        } catch (const GameError&) {
        }
        t.check(ok, [&] { return "round trip failed for seed " + std::to_string(seed); });
        if (k < 50) corpus.push_back(text);
    }
    for (const auto& name : fixture_names()) corpus.push_back(serialize_game(fixture(name)));

    std::mt19937_64 rng(110'000);
    std::size_t accepted = 0, rejected = 0;
    for (int k = 0; k < 100'000; ++k) {
        const std::string& base = corpus[k % corpus.size()];
        std::vector<std::string> lines;
        std::istringstream ss(base);
        for (std::string l; std::getline(ss, l);) lines.push_back(l);
        const std::size_t victim = std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng);
        lines[victim] = mutate_line(rng, lines[victim]);
        std::string text;
        for (const auto& l : lines) text += l + '\n';
        try {
            parse_game(text);
            ++accepted;
        } catch (const GameError& e) {
            ++rejected;
            t.check(e.line() >= 1, [&] { return std::string("unpositioned error: ") + e.what(); });
        } catch (const std::exception& e) {
            t.check(false, [&] { return std::string("foreign exception: ") + e.what() + " on\n" + text; });
        }
    }
    return finish(t,
                  "1000 round trips; 100000 mutated documents, " + std::to_string(rejected) + " rejected with position, " +
                      std::to_string(accepted) + " still valid",
                  seconds_since(t0), 600.0);
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    const auto want = [&](int n) { return wanted.empty() || wanted.count(n) > 0; };

    bool all_pass = true;
    const auto report = [&](int n, const std::function<Result()>& run) {
        if (!want(n)) return;
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        all_pass &= r.pass;
        std::printf("criterion %d: %s %s\n", n, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
    };

    std::vector<Instance> instances;
    if (want(2) || want(3)) instances = oracle_instances();
    FamilyRuns runs;

    report(1, criterion1);
    report(2, [&] { return criterion2(instances); });
    report(3, [&] { return criterion3(instances); });
    report(4, criterion4);
    report(5, [&] { return criterion5(runs); });
    if (want(6) && !want(5)) criterion5(runs);
    report(6, [&] { return criterion6(runs); });
    report(7, criterion7);
    report(8, criterion8);
    report(9, criterion9);
    report(10, criterion10);
    return all_pass ? 0 : 1;
}
