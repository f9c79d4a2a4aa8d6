#pragma once

#include <cstdint>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

/// Subset of resource indices (0-based), as a bit mask.
using ReloadSet = std::uint32_t;

inline bool contains(ReloadSet set, int i) { return (set >> i) & 1U; }
inline ReloadSet full_set(int d) { return d >= 32 ? ~ReloadSet{0} : (ReloadSet{1} << d) - 1; }

/// True iff some infinite path from s satisfies every pair "consumed
/// infinitely often implies reloaded infinitely often", i.e. Safe(s) is
/// nonempty in a one-player game. Throws NotOnePlayer.
bool streett_automaton_nonempty(const Game& g, StateId s);

/// All states with nonempty Safe in a one-player game.
std::vector<char> streett_automaton_nonempty_states(const Game& g);

/// Streett nonemptiness from s using only the edges with active[k] set and
/// only the resources in `dims`. Edges may leave states without successors.
bool streett_path_exists(const Game& g, StateId s, const std::vector<char>& active, ReloadSet dims);

/// True iff s keeps an infinite safe path that never consumes a resource
/// outside I: take the edges whose label is 0 outside I, drop states left
/// without such edges until stable, and require s to survive with a path
/// meeting the Streett condition on the resources in I. Throws NotOnePlayer.
bool is_I_safe(const Game& g, StateId s, ReloadSet I);

}  // namespace cgame
