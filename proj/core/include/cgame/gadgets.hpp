#pragma once

#include <cstdint>

#include "cgame/game.hpp"
#include "cgame/qbf.hpp"

namespace cgame {

struct QbfGadget {
    Game game;
    StateId start = 0;
    /// (2n+1, ..., 2n+1): minimal safe at start iff the formula is true.
    LoadVector critical;
};

/// Two-player game of dimension m (one resource per clause) over states
/// s1..s{n+1}, s_x<i>, s_nx<i> and r; s<i> belongs to diamond iff x_i is
/// universally quantified. Throws on an invalid instance.
QbfGadget gen_qbf(const QbfInstance& q);

enum class GammaRule {
    /// odd drops 2(n'-i+1)+1 (default)
    OddDrop,
    /// even drops 2(n'-i+1)
    EvenDrop,
};

struct SatUnsatGadget {
    Game game;
    StateId start = 0;
    /// minimal safe at start iff phi is satisfiable and psi is not
    LoadVector xi;
};

/// One-player game of dimension m+m'+1 chaining the phi part (states s*, r)
/// into the psi part (states t*, p, p'). The two formulas must use disjoint
/// variable numbers (VariableOverlap otherwise).
SatUnsatGadget gen_satunsat(const QbfInstance& phi, const QbfInstance& psi, GammaRule rule = GammaRule::OddDrop);

struct RandomGameFlags {
    bool one_player = false;
    bool decreasing = false;
    double omega_density = 0.25;
    int max_out_degree = 3;
};

/// Seeded random game with |S| = states, dimension d and finite drops in
/// [0, l]. States left without an edge get a self-loop of -1s. The decreasing
/// flag is met by resampling; throws ResamplingExhausted after 1000 tries.
Game random_game(std::uint64_t seed, int states, int d, int l, const RandomGameFlags& flags = {});

/// Seeded random QBF with n variables and m clauses of 1..3 distinct
/// non-complementary literals. `all_exists` gives a plain CNF.
QbfInstance random_qbf(std::uint64_t seed, int n, int m, bool all_exists = false, int first_variable = 1);

}  // namespace cgame
