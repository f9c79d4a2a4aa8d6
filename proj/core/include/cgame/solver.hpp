#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgame/antichain.hpp"
#include "cgame/game.hpp"

namespace cgame {

struct MembershipResult {
    bool member = false;
    std::size_t arena_vertices = 0;
    std::size_t arena_edges = 0;
    std::vector<std::int64_t> caps;
};

/// alpha in Safe(s): alpha capped at d*max(l,1)*|S|, reloads to that cap,
/// safety solved on the part of the arena reachable from (s, alpha).
MembershipResult safe_membership_detail(const Game& g, StateId s, const LoadVector& alpha);
bool safe_membership(const Game& g, StateId s, const LoadVector& alpha);

/// Minimal elements of Safe(q) for every state q, from one solve of the
/// full capped arena.
std::vector<Antichain> safe_minimal_elements_all(const Game& g);
Antichain safe_minimal_elements(const Game& g, StateId s);

/// alpha in Cover(s): the arena is capped at alpha and reloads go to alpha.
MembershipResult cover_membership_detail(const Game& g, StateId s, const LoadVector& alpha);
bool cover_membership(const Game& g, StateId s, const LoadVector& alpha);

inline constexpr std::int64_t kDefaultCoverBox = 10'000;

/// (d*max(l,1)*|S|)^(d!), saturating at INT64_MAX.
std::int64_t cover_bound(const Game& g);

struct CoverOptions {
    std::optional<std::int64_t> bound_override;
    int jobs = 1;
};

struct CoverMinimalResult {
    Antichain minimals;
    /// The candidate box was smaller than the cover bound.
    bool truncated = false;
    std::int64_t box = 0;
    std::int64_t exact_bound = 0;
    std::size_t membership_calls = 0;
};

/// Minimal elements of Cover(s) inside [1..B]^d, B = min(cover bound,
/// override, 10^4). Each reported vector is a member whose lower neighbours
/// are not.
CoverMinimalResult cover_minimal_elements(const Game& g, StateId s, const CoverOptions& options = {});

enum class EmptinessMethod { GeneralizedBuchi, StreettAutomaton, StreettGame };
const char* to_string(EmptinessMethod m);

struct EmptinessResult {
    bool empty = false;
    EmptinessMethod method = EmptinessMethod::StreettGame;
};

/// Decreasing games go through generalized Buchi, other one-player games
/// through Streett automaton nonemptiness, everything else through the
/// Streett game solver.
EmptinessResult safe_emptiness_detail(const Game& g, StateId s);
bool safe_emptiness(const Game& g, StateId s);

/// Per-state nonemptiness of Safe via the dispatcher.
std::vector<char> safe_nonempty_states(const Game& g, EmptinessMethod* used = nullptr);

/// Emptiness by the capped arena alone: Safe(s) is nonempty iff it holds
/// (d*max(l,1)*|S|, ...).
bool capped_arena_emptiness(const Game& g, StateId s);

/// Induced subgame on the states with nonempty Safe. Throws AllStatesUnsafe.
Game prune_unsafe_states(const Game& g);

}  // namespace cgame
