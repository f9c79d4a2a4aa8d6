#include "cgame/arena.hpp"

namespace cgame {

Arena::Arena(std::vector<Player> owners, std::span<const std::pair<Vertex, Vertex>> edges)
    : owners_(std::move(owners))
{
    const std::size_t n = owners_.size();
    succ_off_.assign(n + 1, 0);
    pred_off_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++succ_off_[u + 1];
        ++pred_off_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        succ_off_[i + 1] += succ_off_[i];
        pred_off_[i + 1] += pred_off_[i];
    }
    succ_.resize(edges.size());
    pred_.resize(edges.size());
    std::vector<std::uint32_t> si(succ_off_.begin(), succ_off_.end() - 1);
    std::vector<std::uint32_t> pi(pred_off_.begin(), pred_off_.end() - 1);
    for (auto [u, v] : edges) {
        succ_[si[u]++] = v;
        pred_[pi[v]++] = u;
    }
}

VertexSet attractor(const Arena& arena, Player player, const VertexSet& target, const VertexSet* within)
{
    const std::size_t n = arena.size();
    const auto inside = [&](Vertex v) { return within == nullptr || (*within)[v]; };

    VertexSet attr(n, 0);
    std::vector<std::uint32_t> escapes(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        if (!inside(v)) continue;
        if (target[v]) {
            attr[v] = 1;
            queue.push_back(v);
            continue;
        }
        if (arena.owner(v) != player) {
            for (Vertex w : arena.successors(v))
                if (inside(w)) ++escapes[v];
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex u : arena.predecessors(v)) {
            if (!inside(u) || attr[u]) continue;
            if (arena.owner(u) == player || --escapes[u] == 0) {
                attr[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return attr;
}

}  // namespace cgame
