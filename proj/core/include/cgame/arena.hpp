#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

using Vertex = std::uint32_t;
/// Characteristic vector over the vertices of an arena.
using VertexSet = std::vector<char>;

/// Explicit finite two-player graph with successor and predecessor lists.
class Arena {
public:
    Arena() = default;
    Arena(std::vector<Player> owners, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t size() const { return owners_.size(); }
    std::size_t num_edges() const { return succ_.size(); }
    Player owner(Vertex v) const { return owners_[v]; }
    std::span<const Vertex> successors(Vertex v) const
    {
        return {succ_.data() + succ_off_[v], succ_.data() + succ_off_[v + 1]};
    }
    std::span<const Vertex> predecessors(Vertex v) const
    {
        return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
    }

private:
    std::vector<Player> owners_;
    std::vector<std::uint32_t> succ_off_, pred_off_;
    std::vector<Vertex> succ_, pred_;
};

/// Least superset of `target` closed under: a vertex of `player` with an edge
/// into the set, or a vertex of the opponent with all edges into the set.
/// When `within` is given, the computation is restricted to that subarena
/// (edges leaving it are ignored). Linear time via backward counting.
VertexSet attractor(const Arena& arena, Player player, const VertexSet& target, const VertexSet* within = nullptr);

}  // namespace cgame
