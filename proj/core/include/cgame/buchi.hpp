#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgame/arena.hpp"
#include "cgame/game.hpp"

namespace cgame {

/// Box wins a play iff every target edge set is hit infinitely often.
struct GenBuchiGame {
    std::vector<std::string> names;
    std::vector<Player> owners;
    std::vector<std::pair<StateId, StateId>> edges;
    /// targets[i][k]: edge k belongs to target set i
    std::vector<std::vector<char>> targets;
};

/// Target set i = the edges reloading resource i.
GenBuchiGame to_generalized_buchi(const Game& g);

/// Winning region of box, per state.
std::vector<char> solve_generalized_buchi(const GenBuchiGame& bg);

/// Winning region of box in the one-target Buchi game on `arena`.
VertexSet solve_buchi(const Arena& arena, const VertexSet& accepting);

/// True iff Safe(s) is empty. Throws NotDecreasing.
bool emptiness_decreasing(const Game& g, StateId s);

}  // namespace cgame
