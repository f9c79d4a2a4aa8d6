#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgame/arena.hpp"
#include "cgame/capped_arena.hpp"
#include "cgame/game.hpp"

namespace cgame {

/// Edge sets indexed like StreettGame::edges. A play wins the pair when it
/// hits `trigger` finitely often or `response` infinitely often.
struct StreettPair {
    std::vector<char> trigger;   // G_i
    std::vector<char> response;  // R_i
};

struct StreettGame {
    std::vector<std::string> names;
    std::vector<Player> owners;
    std::vector<std::pair<StateId, StateId>> edges;
    std::vector<StreettPair> pairs;
};

/// One pair per dimension: trigger = edges consuming it, response = edges
/// reloading it.
StreettGame to_streett(const Game& g);

/// Labels -1 on triggers, omega on responses, 0 elsewhere. Throws
/// AmbiguousStreettEdge for an edge in both sets of one pair, and
/// OmegaOnDiamond for a response edge leaving a diamond state.
Game from_streett(const StreettGame& sg);

inline constexpr int kDefaultMaxPairs = 8;

/// Per-state winning region of box. Index appearance records turn the pairs
/// into priorities; the product is solved as a parity game. Throws
/// TooManyPairs past `max_pairs` and ArenaTooLarge past `limit`.
std::vector<char> solve_streett_game(const StreettGame& sg, int max_pairs = kDefaultMaxPairs,
                                     std::size_t limit = arena_vertex_limit());

}  // namespace cgame
