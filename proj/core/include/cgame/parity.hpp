#pragma once

#include <vector>

#include "cgame/arena.hpp"

namespace cgame {

/// Max-parity game: box wins a play iff the largest priority seen infinitely
/// often is even. Every vertex needs at least one successor.
struct ParityGame {
    Arena arena;
    std::vector<int> priority;
};

/// Winning region of box, by Zielonka's recursive attractor decomposition.
VertexSet solve_parity(const ParityGame& g);

}  // namespace cgame
