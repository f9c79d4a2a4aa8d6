#include "cgame/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "cgame/buchi.hpp"
#include "cgame/capped_arena.hpp"
#include "cgame/streett.hpp"
#include "cgame/streett_automaton.hpp"

namespace cgame {

namespace {

void check_query(const Game& g, StateId s, const LoadVector& alpha)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    if (alpha.size() != static_cast<std::size_t>(g.dimension())) {
        throw GameError(ErrorKind::DimensionMismatch, "vector " + to_string(alpha) + " has dimension " +
                                                          std::to_string(alpha.size()) + ", game has " +
                                                          std::to_string(g.dimension()));
    }
}

MembershipResult solve_rooted(const Game& g, StateId s, const LoadVector& root, std::vector<std::int64_t> caps)
{
    const CappedArena a = build_capped_arena_from(g, std::move(caps), s, root);
    MembershipResult r;
    r.member = a.winning()[*a.vertex(s, root)];
    r.arena_vertices = a.size();
    r.arena_edges = a.arena().num_edges();
    r.caps = a.caps();
    return r;
}

}  // namespace

MembershipResult safe_membership_detail(const Game& g, StateId s, const LoadVector& alpha)
{
    check_query(g, s, alpha);
    const std::int64_t b = global_bound(g);
    return solve_rooted(g, s, alpha.capped(b), std::vector<std::int64_t>(g.dimension(), b));
}

bool safe_membership(const Game& g, StateId s, const LoadVector& alpha)
{
    return safe_membership_detail(g, s, alpha).member;
}

std::vector<Antichain> safe_minimal_elements_all(const Game& g)
{
    const int d = g.dimension();
    const std::int64_t b = global_bound(g);
    const CappedArena a = build_capped_arena(g, std::vector<std::int64_t>(d, b));
    const VertexSet win = a.winning();

    std::vector<std::vector<ExtVector>> found(g.num_states());
    for (Vertex v = 0; v < a.size(); ++v) {
        if (v == a.fail() || !win[v]) continue;
        const Config c = a.config(v);
        // keep local minima only; min_set below removes the rest
        bool local = true;
        std::vector<std::int64_t> lower = c.load().values();
        for (int i = 0; i < d && local; ++i) {
            if (lower[i] == 1) continue;
            --lower[i];
            local = !win[*a.vertex(c.state(), LoadVector(lower))];
            ++lower[i];
        }
        if (local) found[c.state()].emplace_back(c.load());
    }
    std::vector<Antichain> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(min_set(std::move(f)));
    return out;
}

Antichain safe_minimal_elements(const Game& g, StateId s)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    return safe_minimal_elements_all(g)[s];
}

MembershipResult cover_membership_detail(const Game& g, StateId s, const LoadVector& alpha)
{
    check_query(g, s, alpha);
    return solve_rooted(g, s, alpha, alpha.values());
}

bool cover_membership(const Game& g, StateId s, const LoadVector& alpha)
{
    return cover_membership_detail(g, s, alpha).member;
}

std::int64_t cover_bound(const Game& g)
{
    const std::int64_t base = global_bound(g);
    std::int64_t exponent = 1;
    for (int k = 2; k <= g.dimension(); ++k) {
        if (exponent > 64) break;
        exponent *= k;
    }
    std::int64_t r = 1;
    for (std::int64_t k = 0; k < exponent; ++k) {
        if (base > 1 && r > kInfinity / base) return kInfinity;
        r *= base;
    }
    return r;
}

namespace {

/// Minimal elements of an upward-closed set of d-vectors restricted to a box,
/// given by a membership test. Some coordinates may be fixed.
class MinimalSearch {
public:
    MinimalSearch(std::int64_t box, std::function<bool(const std::vector<std::int64_t>&)> member)
        : box_(box), member_(std::move(member))
    {
    }

    /// Minimal members v with v(i) = value(i) for fixed i, free coordinates
    /// ranging over [1..box].
    std::vector<std::vector<std::int64_t>> run(std::vector<std::int64_t> v, std::vector<int> free)
    {
        std::vector<std::vector<std::int64_t>> out;
        search(v, free, out);
        return out;
    }

    std::size_t calls() const { return calls_; }

private:
    bool member(const std::vector<std::int64_t>& v)
    {
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
        ++calls_;
        const bool r = member_(v);
        cache_.emplace(v, r);
        return r;
    }

    void search(std::vector<std::int64_t>& v, const std::vector<int>& free, std::vector<std::vector<std::int64_t>>& out)
    {
        if (free.empty()) {
            if (member(v)) out.push_back(v);
            return;
        }
        const int i = free.front();
        if (free.size() == 1) {
            // smallest member along one axis
            v[i] = box_;
            if (!member(v)) return;
            std::int64_t lo = 1, hi = box_;
            while (lo < hi) {
                const std::int64_t mid = lo + (hi - lo) / 2;
                v[i] = mid;
                if (member(v)) hi = mid;
                else lo = mid + 1;
            }
            v[i] = lo;
            out.push_back(v);
            return;
        }
        if (free.size() == 2) {
            // staircase walk: the least j for each i is nonincreasing in i
            const int j = free[1];
            v[i] = box_;
            v[j] = box_;
            if (!member(v)) return;
            std::int64_t y = box_;
            std::optional<std::int64_t> last;
            for (std::int64_t x = 1; x <= box_; ++x) {
                v[i] = x;
                v[j] = y;
                if (!member(v)) continue;
                while (y > 1) {
                    v[j] = y - 1;
                    if (!member(v)) break;
                    --y;
                }
                if (!last || y < *last) {
                    v[j] = y;
                    out.push_back(v);
                    last = y;
                }
                if (y == 1) break;
            }
            return;
        }
        // scan the first free coordinate; keep slice minima not present one step lower
        const std::vector<int> rest(free.begin() + 1, free.end());
        std::vector<std::vector<std::int64_t>> previous;
        for (std::int64_t c = 1; c <= box_; ++c) {
            v[i] = c;
            std::vector<std::vector<std::int64_t>> slice;
            search(v, rest, slice);
            for (const auto& w : slice) {
                const bool seen = std::any_of(previous.begin(), previous.end(), [&](const auto& p) {
                    for (int k : rest)
                        if (p[k] > w[k]) return false;
                    return true;
                });
                if (!seen) out.push_back(w);
            }
            const bool floor = std::any_of(slice.begin(), slice.end(), [&](const auto& w) {
                return std::all_of(rest.begin(), rest.end(), [&](int k) { return w[k] == 1; });
            });
            previous = std::move(slice);
            if (floor) break;
        }
    }

    std::int64_t box_;
    std::function<bool(const std::vector<std::int64_t>&)> member_;
    std::map<std::vector<std::int64_t>, bool> cache_;
    std::size_t calls_ = 0;
};

}  // namespace

CoverMinimalResult cover_minimal_elements(const Game& g, StateId s, const CoverOptions& options)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    const int d = g.dimension();
    CoverMinimalResult result;
    result.exact_bound = cover_bound(g);
    result.box = std::min(result.exact_bound, kDefaultCoverBox);
    if (options.bound_override) result.box = std::min(result.box, std::max<std::int64_t>(*options.bound_override, 1));
    result.truncated = result.box < result.exact_bound;
    if (safe_emptiness(g, s)) return result;

    const auto member = [&](const std::vector<std::int64_t>& v) { return cover_membership(g, s, LoadVector(v)); };

    // Cover(s) holds (D,...,D) when nonempty, so each minimal vector has a
    // coordinate <= D; search the strips v(i) = c for c <= min(D, box).
    const std::int64_t strip = std::min(global_bound(g), result.box);
    struct Task {
        int axis;
        std::int64_t value;
    };
    std::vector<Task> tasks;
    if (d == 1) {
        tasks.push_back({-1, 0});
    } else {
        for (int i = 0; i < d; ++i)
            for (std::int64_t c = 1; c <= strip; ++c) tasks.push_back({i, c});
    }

    std::vector<std::vector<std::vector<std::int64_t>>> found(tasks.size());
    std::vector<std::size_t> calls(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    const auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            try {
                MinimalSearch search(result.box, member);
                std::vector<std::int64_t> v(d, 1);
                if (tasks[t].axis >= 0) v[tasks[t].axis] = tasks[t].value;
                std::vector<int> free;
                for (int k = 0; k < d; ++k)
                    if (k != tasks[t].axis) free.push_back(k);
                found[t] = search.run(v, free);
                calls[t] = search.calls();
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ExtVector> pool;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        result.membership_calls += calls[t];
        for (auto& v : found[t]) pool.emplace_back(std::move(v));
    }
    // neighbour test on the survivors
    std::vector<ExtVector> confirmed;
    for (const auto& v : min_set(std::move(pool))) {
        bool minimal = true;
        std::vector<std::int64_t> lower = v.values();
        for (int i = 0; i < d && minimal; ++i) {
            if (lower[i] == 1) continue;
            --lower[i];
            ++result.membership_calls;
            minimal = !member(lower);
            ++lower[i];
        }
        if (minimal) confirmed.push_back(v);
    }
    result.minimals = min_set(std::move(confirmed));
    return result;
}

const char* to_string(EmptinessMethod m)
{
    switch (m) {
    case EmptinessMethod::GeneralizedBuchi: return "generalized-buchi";
    case EmptinessMethod::StreettAutomaton: return "streett-automaton";
    case EmptinessMethod::StreettGame: return "streett-game";
    }
    return "?";
}

std::vector<char> safe_nonempty_states(const Game& g, EmptinessMethod* used)
{
    const GameClass cls = classify(g);
    EmptinessMethod method;
    std::vector<char> good;
    if (cls.decreasing) {
        method = EmptinessMethod::GeneralizedBuchi;
        good = solve_generalized_buchi(to_generalized_buchi(g));
    } else if (cls.one_player) {
        method = EmptinessMethod::StreettAutomaton;
        good = streett_automaton_nonempty_states(g);
    } else {
        method = EmptinessMethod::StreettGame;
        good = solve_streett_game(to_streett(g));
    }
    if (used) *used = method;
    return good;
}

EmptinessResult safe_emptiness_detail(const Game& g, StateId s)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    const GameClass cls = classify(g);
    if (cls.decreasing) return {emptiness_decreasing(g, s), EmptinessMethod::GeneralizedBuchi};
    if (cls.one_player) return {!streett_automaton_nonempty(g, s), EmptinessMethod::StreettAutomaton};
    return {!solve_streett_game(to_streett(g))[s], EmptinessMethod::StreettGame};
}

bool safe_emptiness(const Game& g, StateId s) { return safe_emptiness_detail(g, s).empty; }

bool capped_arena_emptiness(const Game& g, StateId s)
{
    return !safe_membership(g, s, LoadVector::uniform(g.dimension(), global_bound(g)));
}

Game prune_unsafe_states(const Game& g)
{
    const std::vector<char> good = safe_nonempty_states(g);
    if (std::none_of(good.begin(), good.end(), [](char c) { return c != 0; }))
        throw GameError(ErrorKind::AllStatesUnsafe, "Safe is empty at every state");
    RawGame raw;
    raw.dimension = g.dimension();
    for (StateId s = 0; s < g.num_states(); ++s)
        if (good[s]) raw.add_state(g.name(s), g.owner(s));
    for (const Edge& e : g.edges())
        if (good[e.source] && good[e.target]) raw.add_edge(g.name(e.source), g.name(e.target), e.label);
    return validate_game(raw);
}

}  // namespace cgame
