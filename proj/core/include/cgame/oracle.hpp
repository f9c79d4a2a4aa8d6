#pragma once

#include <cstdint>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

/// Brute-force reference answers. The configuration graph is enumerated with
/// every load bounded by a cap and with a separate successor for every value
/// a reload may choose. Meant for desk-sized games only; throws ArenaTooLarge
/// past arena_vertex_limit().

/// Whether box avoids Fail from (s, alpha) with loads kept <= cap.
bool oracle_safe_membership(const Game& g, StateId s, const LoadVector& alpha, std::int64_t cap);

/// Minimal winning loads in [1..cap]^d at s, sorted lexicographically.
std::vector<LoadVector> oracle_safe_minimals(const Game& g, StateId s, std::int64_t cap);
/// The same for every state at once.
std::vector<std::vector<LoadVector>> oracle_safe_minimals_all(const Game& g, std::int64_t cap);

/// Whether box avoids Fail from (s, alpha) while no load ever exceeds alpha.
bool oracle_cover_membership(const Game& g, StateId s, const LoadVector& alpha);

/// Minimal alpha in [1..cap]^d with oracle_cover_membership, by enumeration.
std::vector<LoadVector> oracle_cover_minimals(const Game& g, StateId s, std::int64_t cap);

}  // namespace cgame
