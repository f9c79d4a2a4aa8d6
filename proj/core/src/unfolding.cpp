#include "cgame/unfolding.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

#include "cgame/buchi.hpp"
#include "cgame/solver.hpp"

namespace cgame {

std::vector<Permutation> all_permutations(int d)
{
    std::vector<Permutation> out;
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

/// Collects states and deduplicated edges for a generated game.
class Builder {
public:
    explicit Builder(int d) { raw_.dimension = d; }

    void state(std::string name, Player owner)
    {
        names_.push_back(name);
        taken_.insert(name);
        raw_.add_state(std::move(name), owner);
    }

    /// A name not used by any state added so far.
    std::string fresh(std::string base) const
    {
        while (taken_.count(base)) base += '\'';
        return base;
    }

    void edge(StateId u, StateId v, const Label& label)
    {
        std::vector<std::int64_t> key;
        for (Delta x : label) key.push_back(x.is_omega() ? 1 : x.value());
        if (!seen_.emplace(u, v, std::move(key)).second) return;
        raw_.add_edge(names_[u], names_[v], label);
    }

    Game finish() const { return validate_game(raw_); }

private:
    RawGame raw_;
    std::vector<std::string> names_;
    std::unordered_set<std::string> taken_;
    std::set<std::tuple<StateId, StateId, std::vector<std::int64_t>>> seen_;
};

Label zeroed(const Label& l, ReloadSet J)
{
    Label out = l;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (contains(J, static_cast<int>(i)) || out[i].is_omega()) out[i] = Delta::finite(0);
    return out;
}

ReloadSet omega_set(const Label& l)
{
    ReloadSet w = 0;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i].is_omega()) w |= ReloadSet{1} << i;
    return w;
}

ReloadSet prefix_set(const Permutation& pi, int m)
{
    ReloadSet out = 0;
    for (int i = 0; i < m; ++i) out |= ReloadSet{1} << pi[i];
    return out;
}

std::string set_name(ReloadSet I, int d)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < d; ++i) {
        if (!contains(I, i)) continue;
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

void check_permutation(const Permutation& pi, int d)
{
    Permutation sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    Permutation expect(d);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw GameError(ErrorKind::InvalidVector, "not a permutation of the resources");
}

}  // namespace

StateId c_pi_state(const Game& g, StateId q, int m) { return q * (g.dimension() + 1) + m; }

StateId hat_state(const Game& g, StateId q, ReloadSet I) { return (q << g.dimension()) + I; }

DistanceGame build_c_pi(const Game& g, StateId s, const Permutation& pi, EdgeRule rule)
{
    if (!classify(g).one_player) throw GameError(ErrorKind::NotOnePlayer, "the game has diamond states");
    const int d = g.dimension();
    check_permutation(pi, d);
    const std::size_t n = g.num_states();

    Builder b(d);
    for (StateId q = 0; q < n; ++q)
        for (int m = 0; m <= d; ++m) b.state(g.name(q) + "/" + std::to_string(m), Player::Box);
    const StateId r = static_cast<StateId>(n * (d + 1));
    const StateId h = r + 1;
    b.state(b.fresh("r"), Player::Box);
    b.state(b.fresh("h"), Player::Box);

    const Label zero(d, Delta::finite(0));
    const Label minus(d, Delta::finite(-1));
    std::vector<std::vector<char>> safe(d + 1, std::vector<char>(n));
    for (int m = 0; m <= d; ++m)
        for (StateId q = 0; q < n; ++q) safe[m][q] = is_I_safe(g, q, prefix_set(pi, m));

    for (StateId q = 0; q < n; ++q) {
        for (int m = 0; m <= d; ++m) {
            const StateId from = c_pi_state(g, q, m);
            for (auto k : g.out_edges(q)) {
                const Edge& e = g.edge(k);
                const ReloadSet W = omega_set(e.label);
                const ReloadSet done = prefix_set(pi, m);
                if (rule == EdgeRule::Exact) {
                    const ReloadSet rest = W & ~done;
                    const int count = std::popcount(rest);
                    if (m + count > d || prefix_set(pi, m + count) != (done | rest)) continue;
                    b.edge(from, c_pi_state(g, e.target, m + count), zeroed(e.label, prefix_set(pi, m + count)));
                } else {
                    for (int k2 = 0; m + k2 <= d; ++k2) {
                        if (k2 > 0 && !contains(W, pi[m + k2 - 1])) break;
                        b.edge(from, c_pi_state(g, e.target, m + k2), zeroed(e.label, prefix_set(pi, m + k2)));
                    }
                }
            }
            if (safe[m][q]) b.edge(from, r, zero);
            b.edge(from, h, minus);
        }
    }
    b.edge(r, r, zero);
    b.edge(h, h, minus);
    return DistanceGame{b.finish(), c_pi_state(g, s, 0), r};
}

DistanceGame build_hat_game(const Game& g, StateId s)
{
    if (!classify(g).decreasing) throw GameError(ErrorKind::NotDecreasing, "the game is not decreasing");
    const int d = g.dimension();
    const std::size_t n = g.num_states();
    const ReloadSet full = full_set(d);

    Builder b(d);
    for (StateId q = 0; q < n; ++q)
        for (ReloadSet I = 0; I <= full; ++I) {
            const Player owner = (g.owner(q) == Player::Box || I == full) ? Player::Box : Player::Diamond;
            b.state(g.name(q) + "/" + set_name(I, d), owner);
        }
    const StateId r = static_cast<StateId>(n << d);
    b.state(b.fresh("r"), Player::Box);

    const Label zero(d, Delta::finite(0));
    for (StateId q = 0; q < n; ++q) {
        for (ReloadSet I = 0; I <= full; ++I) {
            for (auto k : g.out_edges(q)) {
                const Edge& e = g.edge(k);
                const ReloadSet J = I | omega_set(e.label);
                b.edge(hat_state(g, q, I), hat_state(g, e.target, J), zeroed(e.label, J));
            }
        }
        b.edge(hat_state(g, q, full), r, zero);
    }
    b.edge(r, r, zero);
    return DistanceGame{b.finish(), hat_state(g, s, 0), r};
}

namespace {

/// The game restricted to states with nonempty Safe, and s's index in it;
/// nullopt when Safe(s) is empty.
std::optional<std::pair<Game, StateId>> pruned(const Game& g, StateId s)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    if (safe_emptiness(g, s)) return std::nullopt;
    Game p = prune_unsafe_states(g);
    const StateId t = p.state(g.name(s));
    return std::pair{std::move(p), t};
}

void collect(const Antichain& a, std::vector<ExtVector>& into)
{
    for (const auto& v : a)
        if (!v.is_infinite()) into.push_back(v);
}

}  // namespace

Antichain min_safe_one_player(const Game& g, StateId s, const MinSafeOptions& options, MinSafeRun* run)
{
    if (!classify(g).one_player) throw GameError(ErrorKind::NotOnePlayer, "the game has diamond states");
    auto p = pruned(g, s);
    if (!p) return Antichain{};
    const auto& [game, start] = *p;

    const auto perms = all_permutations(g.dimension());
    std::vector<MinDistResult> results(perms.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex lock;
    const auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < perms.size();) {
            try {
                results[k] = min_dist(build_c_pi(game, start, perms[k], options.rule));
            } catch (...) {
                std::lock_guard guard(lock);
                if (!failure) failure = std::current_exception();
                next = perms.size();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(perms.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ExtVector> all;
    for (const auto& res : results) {
        collect(res.distances, all);
        if (run) run->stats.push_back(res.stats);
    }
    return min_set(std::move(all));
}

Antichain min_safe_decreasing(const Game& g, StateId s, MinSafeRun* run)
{
    if (!classify(g).decreasing) throw GameError(ErrorKind::NotDecreasing, "the game is not decreasing");
    auto p = pruned(g, s);
    if (!p) return Antichain{};
    const auto& [game, start] = *p;
    const MinDistResult res = min_dist(build_hat_game(game, start));
    if (run) run->stats.push_back(res.stats);
    std::vector<ExtVector> all;
    collect(res.distances, all);
    return min_set(std::move(all));
}

namespace {

struct Step {
    bool fail = false;
    std::vector<std::int64_t> load;
    ReloadSet reloaded = 0;
};

Step apply(const Edge& e, const std::vector<std::int64_t>& load, ReloadSet reloaded, std::int64_t reload_to)
{
    Step out{false, load, reloaded};
    for (std::size_t i = 0; i < load.size(); ++i) {
        const Delta x = e.label[i];
        if (x.is_omega()) {
            out.load[i] = std::max(load[i], reload_to);
            out.reloaded |= ReloadSet{1} << i;
        } else if ((out.load[i] += x.value()) <= 0) {
            out.fail = true;
            return out;
        }
    }
    return out;
}

void check_alpha(const Game& g, StateId s, const LoadVector& alpha)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    if (alpha.size() != static_cast<std::size_t>(g.dimension()))
        throw GameError(ErrorKind::DimensionMismatch, "vector dimension differs from the game");
}

class AlternatingSearch {
public:
    AlternatingSearch(const Game& g, std::vector<char> safe)
        : g_(g), safe_(std::move(safe)), full_(full_set(g.dimension())), reload_to_(2 * global_bound(g)),
          horizon_(g.dimension() * static_cast<int>(g.num_states()))
    {
    }

    bool run(StateId s, const std::vector<std::int64_t>& load) { return win(s, load, 0, 0); }

private:
    bool win(StateId s, const std::vector<std::int64_t>& load, ReloadSet reloaded, int depth)
    {
        if (reloaded == full_) return safe_[s];
        if (depth == horizon_) return false;
        auto key = std::tuple{s, reloaded, depth, load};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const bool box = g_.owner(s) == Player::Box;
        bool result = !box;
        for (auto k : g_.out_edges(s)) {
            const Edge& e = g_.edge(k);
            const Step next = apply(e, load, reloaded, reload_to_);
            const bool ok = !next.fail && win(e.target, next.load, next.reloaded, depth + 1);
            if (box && ok) {
                result = true;
                break;
            }
            if (!box && !ok) {
                result = false;
                break;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    const Game& g_;
    std::vector<char> safe_;
    ReloadSet full_;
    std::int64_t reload_to_;
    int horizon_;
    std::map<std::tuple<StateId, ReloadSet, int, std::vector<std::int64_t>>, bool> memo_;
};

}  // namespace

bool membership_decreasing_bounded(const Game& g, StateId s, const LoadVector& alpha)
{
    if (!classify(g).decreasing) throw GameError(ErrorKind::NotDecreasing, "the game is not decreasing");
    check_alpha(g, s, alpha);
    AlternatingSearch search(g, solve_generalized_buchi(to_generalized_buchi(g)));
    return search.run(s, alpha.capped(global_bound(g)).values());
}

namespace {

class CertificateSearch {
public:
    explicit CertificateSearch(const Game& g)
        : g_(g), reload_to_(2 * global_bound(g)), horizon_(g.dimension() * static_cast<int>(g.num_states()))
    {
    }

    bool run(StateId s, const std::vector<std::int64_t>& load) { return extend(s, load, 0, horizon_); }

private:
    bool tail_safe(StateId t, ReloadSet I)
    {
        auto [it, fresh] = tail_.emplace(std::pair{t, I}, false);
        if (!fresh) return it->second;
        std::vector<char> active(g_.num_edges(), 1);
        for (std::size_t k = 0; k < g_.num_edges(); ++k) {
            const Label& l = g_.edge(k).label;
            for (int i = 0; i < g_.dimension(); ++i)
                if (!contains(I, i) && l[i].is_negative()) active[k] = 0;
        }
        it->second = streett_path_exists(g_, t, active, full_set(g_.dimension()));
        return it->second;
    }

    bool extend(StateId t, const std::vector<std::int64_t>& load, ReloadSet I, int remaining)
    {
        if (tail_safe(t, I)) return true;
        if (remaining == 0) return false;
        // a failed search from here with at least this much depth left settles it
        auto key = std::tuple{t, I, load};
        if (auto it = explored_.find(key); it != explored_.end() && it->second >= remaining) return false;
        for (auto k : g_.out_edges(t)) {
            const Edge& e = g_.edge(k);
            const Step next = apply(e, load, I, reload_to_);
            if (!next.fail && extend(e.target, next.load, next.reloaded, remaining - 1)) return true;
        }
        explored_[std::move(key)] = remaining;
        return false;
    }

    const Game& g_;
    std::int64_t reload_to_;
    int horizon_;
    std::map<std::pair<StateId, ReloadSet>, bool> tail_;
    std::map<std::tuple<StateId, ReloadSet, std::vector<std::int64_t>>, int> explored_;
};

}  // namespace

bool membership_one_player_certificate(const Game& g, StateId s, const LoadVector& alpha)
{
    if (!classify(g).one_player) throw GameError(ErrorKind::NotOnePlayer, "the game has diamond states");
    check_alpha(g, s, alpha);
    CertificateSearch search(g);
    return search.run(s, alpha.capped(global_bound(g)).values());
}

}  // namespace cgame
