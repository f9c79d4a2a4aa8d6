#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cgame/arena.hpp"
#include "cgame/game.hpp"

namespace cgame {

/// Vertex limit for explicit arenas: CONSUMPTION_ARENA_LIMIT if set, else 10^7.
std::size_t arena_vertex_limit();

/// Safety arena over (state, load) pairs with every load component in
/// [1, cap(i)], plus an absorbing Fail vertex owned by box. A finite delta
/// that would bring a component to <= 0 leads to Fail; a reload sets the
/// component to exactly cap(i).
class CappedArena {
public:
    const Arena& arena() const { return arena_; }
    const std::vector<std::int64_t>& caps() const { return caps_; }
    Vertex fail() const { return fail_; }
    std::size_t size() const { return arena_.size(); }

    /// The vertex for (s, load), if the arena contains it.
    std::optional<Vertex> vertex(StateId s, const LoadVector& load) const;
    Config config(Vertex v) const;

    /// Vertices from which box avoids Fail forever.
    VertexSet winning() const;

private:
    friend CappedArena build_capped_arena(const Game&, std::vector<std::int64_t>, std::size_t);
    friend CappedArena build_capped_arena_from(const Game&, std::vector<std::int64_t>, StateId, const LoadVector&,
                                               std::size_t);

    std::uint64_t encode(StateId s, const std::vector<std::int64_t>& load) const;

    Arena arena_;
    std::vector<std::int64_t> caps_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t box_volume_ = 0;
    std::size_t num_states_ = 0;
    Vertex fail_ = 0;
    // empty for full arenas, where vertex id == code
    std::unordered_map<std::uint64_t, Vertex> index_;
    std::vector<std::uint64_t> codes_;
};

/// Every (state, load) pair in the box. Throws ArenaTooLarge past `limit`.
CappedArena build_capped_arena(const Game& g, std::vector<std::int64_t> caps, std::size_t limit = arena_vertex_limit());

/// Only the part reachable from (root, load). `load` must lie in the box.
CappedArena build_capped_arena_from(const Game& g, std::vector<std::int64_t> caps, StateId root,
                                    const LoadVector& load, std::size_t limit = arena_vertex_limit());

}  // namespace cgame
