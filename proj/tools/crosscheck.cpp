#include "crosscheck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cgame/buchi.hpp"
#include "cgame/fixtures.hpp"
#include "cgame/gadgets.hpp"
#include "cgame/oracle.hpp"
#include "cgame/solver.hpp"
#include "cgame/streett.hpp"
#include "cgame/streett_automaton.hpp"
#include "cgame/text_format.hpp"
#include "cgame/unfolding.hpp"

namespace cgame::check {

void Outcome::merge(const Outcome& o)
{
    checks += o.checks;
    skipped += o.skipped;
    disagreements.insert(disagreements.end(), o.disagreements.begin(), o.disagreements.end());
}

namespace {

std::vector<LoadVector> to_loads(const Antichain& a)
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

/// The injected fault: bump the first minimal vector, or invent (1,...,1).
Antichain corrupt(const Antichain& a, int d)
{
    std::vector<ExtVector> vs(a.begin(), a.end());
    if (vs.empty()) {
        vs.push_back(ExtVector::ones(d));
    } else {
        auto v = vs.front().values();
        ++v[0];
        vs.front() = ExtVector(v);
    }
    return min_set(std::move(vs));
}

std::int64_t int_pow(std::int64_t base, int e, std::int64_t ceiling)
{
    std::int64_t r = 1;
    for (int k = 0; k < e; ++k) {
        if (r > ceiling / std::max<std::int64_t>(base, 1)) return ceiling + 1;
        r *= base;
    }
    return r;
}

/// Candidate box used when comparing cover minimals with the oracle.
std::int64_t cover_compare_box(const Game& g)
{
    const std::int64_t exact = cover_bound(g);
    const int d = g.dimension();
    return std::min(exact, d == 1 ? std::int64_t{64} : d == 2 ? std::int64_t{16} : std::int64_t{5});
}

class Checker {
public:
    Checker(const Game& g, const Options& options) : g_(g), opt_(options) {}

    Outcome run()
    {
        guarded("emptiness", [&] { emptiness(); });
        guarded("safe minimals", [&] { safe_minimals(); });
        guarded("cover minimals", [&] { cover_minimals(); });
        return out_;
    }

private:
    void guarded(const char* what, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const GameError& e) {
            if (category(e.kind()) == ErrorCategory::Resource) {
                ++out_.skipped;
                return;
            }
            disagree(std::string(what) + ": unexpected " + e.what());
        }
    }

    void expect(bool ok, const std::string& message)
    {
        ++out_.checks;
        if (!ok) disagree(message);
    }

    void disagree(const std::string& message) { out_.disagreements.push_back(message); }

    const std::string& name(StateId s) const { return g_.name(s); }

    void emptiness()
    {
        const auto cls = classify(g_);
        const auto dispatched = safe_nonempty_states(g_);
        nonempty_ = dispatched;

        std::optional<std::vector<char>> streett;
        try {
            streett = solve_streett_game(to_streett(g_));
        } catch (const GameError& e) {
            if (category(e.kind()) != ErrorCategory::Resource) throw;
            ++out_.skipped;
        }
        std::optional<std::vector<char>> buchi, automaton;
        if (cls.decreasing) buchi = solve_generalized_buchi(to_generalized_buchi(g_));
        if (cls.one_player) automaton = streett_automaton_nonempty_states(g_);

        for (StateId s = 0; s < g_.num_states(); ++s) {
            const bool d = dispatched[s];
            const std::string at = "emptiness at " + name(s) + ": dispatcher says " + (d ? "nonempty" : "empty");
            if (streett) expect(bool((*streett)[s]) == d, at + ", Streett game disagrees");
            if (buchi) expect(bool((*buchi)[s]) == d, at + ", generalized Buchi disagrees");
            if (automaton) expect(bool((*automaton)[s]) == d, at + ", Streett automaton disagrees");
            try {
                expect(!capped_arena_emptiness(g_, s) == d, at + ", capped arena disagrees");
            } catch (const GameError& e) {
                if (category(e.kind()) != ErrorCategory::Resource) throw;
                ++out_.skipped;
            }
        }
    }

    bool oracle_fits(std::int64_t cap) const
    {
        const auto budget = static_cast<std::int64_t>(opt_.oracle_budget);
        const std::int64_t volume = int_pow(cap, g_.dimension(), budget);
        return volume <= budget && volume * static_cast<std::int64_t>(g_.num_states()) <= budget;
    }

    template <class F>
    std::optional<std::vector<Antichain>> attempt(F&& f)
    {
        try {
            return f();
        } catch (const GameError& e) {
            if (category(e.kind()) != ErrorCategory::Resource) throw;
            ++out_.skipped;
            return std::nullopt;
        }
    }

    void safe_minimals()
    {
        const auto cls = classify(g_);
        const int d = g_.dimension();
        const std::int64_t D = global_bound(g_);
        const std::size_t n = g_.num_states();

        auto general = attempt([&] { return safe_minimal_elements_all(g_); });
        if (general && opt_.inject_fault) (*general)[0] = corrupt((*general)[0], d);
        std::optional<std::vector<Antichain>> perm, hat;
        if (cls.one_player && d <= 5) perm = attempt([&] {
            std::vector<Antichain> out;
            for (StateId s = 0; s < n; ++s) out.push_back(min_safe_one_player(g_, s, {opt_.jobs, EdgeRule::Exact}));
            return out;
        });
        if (cls.decreasing) hat = attempt([&] {
            std::vector<Antichain> out;
            for (StateId s = 0; s < n; ++s) out.push_back(min_safe_decreasing(g_, s));
            return out;
        });

        std::optional<std::vector<std::vector<LoadVector>>> oracle;
        if (oracle_fits(D))
            oracle = oracle_safe_minimals_all(g_, D);
        else
            ++out_.skipped;

        const auto& ref = general ? general : perm ? perm : hat;
        const char* ref_name = general ? "general" : perm ? "permutation" : "decreasing";
        if (!ref) return;

        for (StateId s = 0; s < n; ++s) {
            const auto mins = to_loads((*ref)[s]);
            const std::string at = "safe minimals at " + name(s) + " " + show(mins) + " (" + ref_name + ")";
            if (oracle) expect((*oracle)[s] == mins, at + " vs oracle " + show((*oracle)[s]));
            if (!nonempty_.empty()) expect(mins.empty() == !nonempty_[s], at + " vs emptiness dispatcher");
            if (perm && &ref != &perm) {
                const auto other = to_loads((*perm)[s]);
                expect(other == mins, at + " vs permutation " + show(other));
            }
            if (hat && &ref != &hat) {
                const auto other = to_loads((*hat)[s]);
                expect(other == mins, at + " vs decreasing " + show(other));
            }

            for (const auto& v : mins)
                for (std::size_t i = 0; i < v.size(); ++i)
                    expect(v[i] <= D, at + ": component above d*max(l,1)*|S| = " + std::to_string(D));
            if (!mins.empty()) {
                const auto top = LoadVector::uniform(d, D);
                expect(safe_membership(g_, s, top), at + ": (D,...,D) not safe");
                expect(cover_membership(g_, s, top), at + ": (D,...,D) not in Cover");
            }

            for (const auto& v : mins) {
                membership_point(s, v, true, cls);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (v[i] <= 1) continue;
                    auto w = v.values();
                    --w[i];
                    membership_point(s, LoadVector(w), false, cls);
                }
            }
        }
    }

    void membership_point(StateId s, const LoadVector& v, bool expected, const GameClass& cls)
    {
        const std::string at = "membership at " + name(s) + " " + to_string(v) + " expected " +
                               (expected ? "true" : "false");
        expect(safe_membership(g_, s, v) == expected, at + ", general solver disagrees");
        if (cls.decreasing)
            expect(membership_decreasing_bounded(g_, s, v) == expected, at + ", bounded decider disagrees");
        if (cls.one_player)
            expect(membership_one_player_certificate(g_, s, v) == expected, at + ", certificate decider disagrees");
    }

    void cover_minimals()
    {
        const std::int64_t box = cover_compare_box(g_);
        const bool oracle_ok = oracle_fits(box) && int_pow(box, g_.dimension(), 5000) * std::int64_t(g_.num_states()) <= 5000;
        for (StateId s = 0; s < g_.num_states(); ++s) {
            CoverOptions co;
            co.bound_override = box;
            co.jobs = opt_.jobs;
            const auto res = cover_minimal_elements(g_, s, co);
            const auto mins = to_loads(res.minimals);
            const std::string at = "cover minimals at " + name(s) + " " + show(mins);
            if (!nonempty_.empty() && !res.truncated)
                expect(mins.empty() == !nonempty_[s], at + " vs emptiness dispatcher");
            if (oracle_ok) {
                const auto ref = oracle_cover_minimals(g_, s, box);
                expect(ref == mins, at + " vs oracle " + show(ref));
            } else {
                ++out_.skipped;
            }
        }
    }

    const Game& g_;
    Options opt_;
    Outcome out_;
    std::vector<char> nonempty_;
};

RawGame without_edge(const RawGame& raw, std::size_t k)
{
    RawGame r = raw;
    r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

RawGame without_state(const RawGame& raw, std::size_t k)
{
    RawGame r = raw;
    const std::string gone = r.states[k].name;
    r.states.erase(r.states.begin() + static_cast<std::ptrdiff_t>(k));
    std::erase_if(r.edges, [&](const RawGame::EdgeDecl& e) { return e.source == gone || e.target == gone; });
    return r;
}

void record(SuiteReport& report, const std::string& instance, const Outcome& o, const Game* g,
            const Options& options)
{
    ++report.instances;
    Outcome tagged = o;
    for (auto& m : tagged.disagreements) m = instance + ": " + m;
    report.outcome.merge(tagged);
    if (!o.agree() && !report.counterexample) {
        report.counterexample_name = instance;
        if (g) report.counterexample = serialize_game(minimize(*g, options));
    }
}

}  // namespace

Outcome check_game(const Game& g, const Options& options)
{
    return Checker(g, options).run();
}

Game minimize(const Game& g, const Options& options)
{
    const auto fails = [&](const RawGame& raw) -> std::optional<Game> {
        try {
            Game h = validate_game(raw);
            if (!check_game(h, options).agree()) return h;
        } catch (const GameError&) {
        }
        return std::nullopt;
    };

    Game best = g;
    for (bool changed = true; changed;) {
        changed = false;
        RawGame raw = best.to_raw();
        for (std::size_t k = raw.edges.size(); k-- > 0;) {
            if (auto h = fails(without_edge(raw, k))) {
                best = *h;
                raw = best.to_raw();
                changed = true;
            }
        }
        for (std::size_t k = raw.states.size(); k-- > 0 && raw.states.size() > 1;) {
            if (auto h = fails(without_state(raw, k))) {
                best = *h;
                raw = best.to_raw();
                changed = true;
            }
        }
    }
    return best;
}

SuiteReport run_fixtures(const Options& options)
{
    SuiteReport report;
    for (const auto& name : fixture_names()) {
        const Game g = fixture(name);
        record(report, name, check_game(g, options), &g, options);
    }
    return report;
}

SuiteReport run_random(std::uint64_t seed, int count, const Options& options)
{
    SuiteReport report;
    for (int k = 0; k < count; ++k) {
        const std::uint64_t sd = seed + static_cast<std::uint64_t>(k);
        RandomGameFlags flags;
        flags.one_player = k % 4 == 1 || k % 4 == 3;
        flags.decreasing = k % 4 >= 2;
        const int states = 2 + k % 5;
        const int d = 1 + (k / 5) % 2;
        const int l = 1 + (k / 10) % 3;
        const Game g = random_game(sd, states, d, l, flags);
        record(report, "random seed " + std::to_string(sd), check_game(g, options), &g, options);
    }
    return report;
}

namespace {

/// v is safe at s and every v - e_i is not.
bool minimal_safe(const Game& g, StateId s, const LoadVector& v)
{
    if (!safe_membership(g, s, v)) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto w = v.values();
        if (--w[i] < 1) continue;
        if (safe_membership(g, s, LoadVector(w))) return false;
    }
    return true;
}

}  // namespace

SuiteReport run_gadgets(std::uint64_t seed, int count, const Options& options)
{
    SuiteReport report;
    for (int k = 0; k < count; ++k) {
        const std::uint64_t sd = seed + static_cast<std::uint64_t>(k);
        const int n = 1 + k % 3;
        const int m = 1 + (k / 3) % 3;
        const QbfInstance q = random_qbf(sd, n, m);
        const QbfGadget gadget = gen_qbf(q);
        const bool truth = eval_qbf(q);
        Outcome o;
        const auto expect = [&](bool ok, const std::string& message) {
            ++o.checks;
            if (!ok) o.disagreements.push_back(message);
        };
        bool minimal = minimal_safe(gadget.game, gadget.start, gadget.critical);
        if (options.inject_fault) minimal = !minimal;
        expect(minimal == truth, std::string("qbf bridge: formula is ") + (truth ? "true" : "false") +
                                     " but the critical vector is " + (minimal ? "" : "not ") + "minimal safe");
        expect(safe_membership(gadget.game, gadget.start, gadget.critical) == truth,
               "qbf membership bridge disagrees");
        const auto hat = min_safe_decreasing(gadget.game, gadget.start);
        expect(hat.contains(ExtVector(gadget.critical)) == truth, "qbf bridge: decreasing solver disagrees");
        record(report, "qbf seed " + std::to_string(sd), o, nullptr, options);
        if (!o.agree() && report.counterexample_name == "qbf seed " + std::to_string(sd))
            report.counterexample = serialize_game(gadget.game);
    }
    for (int k = 0; k < count; ++k) {
        const std::uint64_t sd = seed + 100'000 + static_cast<std::uint64_t>(k);
        const QbfInstance phi = random_qbf(sd, 1 + k % 2, 1 + (k / 2) % 2, true);
        const QbfInstance psi = random_qbf(sd + 7919, 1 + (k / 4) % 2, 1 + (k / 8) % 2, true, max_variable(phi) + 1);
        const SatUnsatGadget gadget = gen_satunsat(phi, psi);
        const bool expected = satisfiable(phi) && !satisfiable(psi);
        Outcome o;
        ++o.checks;
        bool minimal = minimal_safe(gadget.game, gadget.start, gadget.xi);
        if (options.inject_fault) minimal = !minimal;
        if (minimal != expected)
            o.disagreements.push_back(std::string("sat-unsat bridge: expected ") + (expected ? "" : "not ") +
                                      "minimal safe");
        const std::string name = "sat-unsat seed " + std::to_string(sd);
        record(report, name, o, nullptr, options);
        if (!o.agree() && report.counterexample_name == name) report.counterexample = serialize_game(gadget.game);
    }
    return report;
}

}  // namespace cgame::check
