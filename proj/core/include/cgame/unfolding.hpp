#pragma once

#include <vector>

#include "cgame/antichain.hpp"
#include "cgame/min_dist.hpp"
#include "cgame/streett_automaton.hpp"

namespace cgame {

/// Order of first reloads, 0-based resource indices.
using Permutation = std::vector<int>;

/// All permutations of {0..d-1} in lexicographic order.
std::vector<Permutation> all_permutations(int d);

enum class EdgeRule {
    /// the reloads of an edge must be exactly the next k resources of pi
    Exact,
    /// the next k resources of pi must be among the reloads; other reloads
    /// are treated as 0
    Literal,
};

/// One-player unfolding forcing first reloads to follow pi. States (q,m)
/// count the resources of pi already reloaded; r is reached from (q,m) when
/// q is {pi_1..pi_m}-safe, h is a losing drain. Throws NotOnePlayer.
DistanceGame build_c_pi(const Game& g, StateId s, const Permutation& pi, EdgeRule rule = EdgeRule::Exact);

/// Decreasing-game unfolding over (q,I), I the reloaded set, with target r
/// reachable once I is full. Start state is (s, {}). Throws NotDecreasing.
DistanceGame build_hat_game(const Game& g, StateId s = 0);

/// State index of (q,m) in build_c_pi's output and of (q,I) in build_hat_game's.
StateId c_pi_state(const Game& g, StateId q, int m);
StateId hat_state(const Game& g, StateId q, ReloadSet I);

struct MinSafeRun {
    std::vector<MinDistStats> stats;  // one per min_dist call
};

struct MinSafeOptions {
    int jobs = 1;
    EdgeRule rule = EdgeRule::Exact;
};

/// Minimal elements of Safe(s) in a one-player game, as the minimal elements
/// of the min_dist results over all C(pi). Unsafe states are pruned first.
/// Throws NotOnePlayer.
Antichain min_safe_one_player(const Game& g, StateId s, const MinSafeOptions& options = {}, MinSafeRun* run = nullptr);

/// Minimal elements of Safe(s) in a decreasing game via one min_dist call on
/// the hat game. Unsafe states are pruned first. Throws NotDecreasing.
Antichain min_safe_decreasing(const Game& g, StateId s, MinSafeRun* run = nullptr);

/// Alternating search over exact configurations for d*|S| steps: alpha is
/// capped at d*max(l,1)*|S|, reloads go to twice that, and a branch accepts
/// once every resource was reloaded at a state with nonempty Safe.
/// Throws NotDecreasing.
bool membership_decreasing_bounded(const Game& g, StateId s, const LoadVector& alpha);

/// Searches paths of length <= d*|S| (reloads to 2*d*max(l,1)*|S|) for a
/// prefix ending in t with reloaded set I such that t is safe once every edge
/// consuming a resource outside I is removed. Throws NotOnePlayer.
bool membership_one_player_certificate(const Game& g, StateId s, const LoadVector& alpha);

}  // namespace cgame
