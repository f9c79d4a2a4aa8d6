#pragma once

#include <functional>
#include <span>

#include "cgame/antichain.hpp"
#include "cgame/game.hpp"

namespace cgame {

/// A game without reloads together with a start state and a target state.
struct DistanceGame {
    Game game;
    StateId start = 0;
    StateId target = 0;
};

/// Throws OmegaInDistanceLabel if any label contains a reload.
DistanceGame make_distance_game(Game g, StateId start, StateId target);

struct MinDistStats {
    /// Smallest k with lambda^k == lambda^(k+1) over all states.
    int iterations = 0;
    /// Largest antichain held in any table entry during the run.
    std::size_t peak_antichain = 0;
};

struct MinDistResult {
    /// lambda(start, target); {(inf,...,inf)} when no safe distance exists.
    Antichain distances;
    /// lambda(q, target) for every state q.
    std::vector<Antichain> table;
    MinDistStats stats;
};

/// Called after every round k >= 1 with the k-step table.
using MinDistObserver = std::function<void(int round, std::span<const Antichain> table)>;

/// Minimal safe multi-distances from every state to the target, by iterating
/// the k-step optimality equations to their fixpoint: box states take the
/// minimal elements of the union of successor sets shifted by the label,
/// diamond states the minimal elements of their componentwise maxima.
MinDistResult min_dist(const DistanceGame& game, const MinDistObserver& observer = {});
Antichain min_dist(const DistanceGame& game, StateId from, StateId target);

/// Number of edges on a longest simple path, by exhaustive search. Exponential;
/// meant for small games in tests.
int longest_acyclic_path(const Game& g);

}  // namespace cgame
