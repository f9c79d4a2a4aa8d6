#include "cgame/min_dist.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgame {

DistanceGame make_distance_game(Game g, StateId start, StateId target)
{
    for (const auto& e : g.edges()) {
        for (Delta x : e.label) {
            if (x.is_omega()) {
                throw GameError(ErrorKind::OmegaInDistanceLabel,
                                "edge " + g.name(e.source) + " -> " + g.name(e.target) + " carries a reload");
            }
        }
    }
    return DistanceGame{std::move(g), start, target};
}

MinDistResult min_dist(const DistanceGame& dg, const MinDistObserver& observer)
{
    const Game& g = dg.game;
    const int d = g.dimension();
    const std::size_t n = g.num_states();
    for (const auto& e : g.edges())
        for (Delta x : e.label)
            if (x.is_omega()) throw GameError(ErrorKind::OmegaInDistanceLabel, "distance labels may not contain reloads");

    std::vector<Antichain> current(n, min_set({ExtVector::infinite(d)}));
    current[dg.target] = min_set({ExtVector::ones(d)});

    MinDistResult result;
    // lambda^a is the fixpoint for a the longest acyclic path, and a < n
    const int max_rounds = static_cast<int>(n) + 1;
    for (int round = 1;; ++round) {
        if (round > max_rounds) throw std::logic_error("min_dist did not converge");
        std::vector<Antichain> next(n);
        for (StateId q = 0; q < n; ++q) {
            if (q == dg.target) {
                next[q] = current[q];
                continue;
            }
            const auto out = g.out_edges(q);
            if (g.owner(q) == Player::Box) {
                std::vector<ExtVector> pool;
                for (auto idx : out) {
                    const Edge& e = g.edge(idx);
                    auto shifted = subtract_label(current[e.target].elements(), e.label);
                    pool.insert(pool.end(), shifted.begin(), shifted.end());
                }
                next[q] = min_set(std::move(pool));
            } else {
                std::vector<ExtVector> acc;
                bool first = true;
                for (auto idx : out) {
                    const Edge& e = g.edge(idx);
                    auto shifted = subtract_label(current[e.target].elements(), e.label);
                    acc = first ? std::move(shifted) : min_set(cwm(acc, shifted)).elements();
                    first = false;
                }
                next[q] = min_set(std::move(acc));
            }
            result.stats.peak_antichain = std::max(result.stats.peak_antichain, next[q].size());
        }
        if (observer) observer(round, next);
        if (next == current) {
            result.stats.iterations = round - 1;
            break;
        }
        current = std::move(next);
    }
    for (const auto& a : current) result.stats.peak_antichain = std::max(result.stats.peak_antichain, a.size());
    result.distances = current[dg.start];
    result.table = std::move(current);
    return result;
}

Antichain min_dist(const DistanceGame& game, StateId from, StateId target)
{
    DistanceGame dg{game.game, from, target};
    return min_dist(dg).distances;
}

namespace {

void extend(const Game& g, StateId v, std::vector<char>& on_path, int depth, int& best)
{
    best = std::max(best, depth);
    for (auto idx : g.out_edges(v)) {
        StateId t = g.edge(idx).target;
        if (on_path[t]) continue;
        on_path[t] = 1;
        extend(g, t, on_path, depth + 1, best);
        on_path[t] = 0;
    }
}

}  // namespace

int longest_acyclic_path(const Game& g)
{
    int best = 0;
    std::vector<char> on_path(g.num_states(), 0);
    for (StateId s = 0; s < g.num_states(); ++s) {
        on_path[s] = 1;
        extend(g, s, on_path, 0, best);
        on_path[s] = 0;
    }
    return best;
}

}  // namespace cgame
