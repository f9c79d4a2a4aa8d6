#include "cgame/buchi.hpp"

#include <algorithm>

namespace cgame {

GenBuchiGame to_generalized_buchi(const Game& g)
{
    GenBuchiGame bg;
    for (StateId s = 0; s < g.num_states(); ++s) {
        bg.names.push_back(g.name(s));
        bg.owners.push_back(g.owner(s));
    }
    bg.targets.assign(g.dimension(), std::vector<char>(g.num_edges(), 0));
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const Edge& e = g.edge(k);
        bg.edges.emplace_back(e.source, e.target);
        for (int i = 0; i < g.dimension(); ++i) bg.targets[i][k] = e.label[i].is_omega();
    }
    return bg;
}

VertexSet solve_buchi(const Arena& arena, const VertexSet& accepting)
{
    const std::size_t n = arena.size();
    VertexSet live(n, 1);
    for (;;) {
        VertexSet goal(n, 0);
        for (Vertex v = 0; v < n; ++v) goal[v] = live[v] && accepting[v];
        const VertexSet reach = attractor(arena, Player::Box, goal, &live);
        VertexSet trap(n, 0);
        bool any = false;
        for (Vertex v = 0; v < n; ++v) {
            trap[v] = live[v] && !reach[v];
            any = any || trap[v];
        }
        if (!any) return live;
        const VertexSet lost = attractor(arena, Player::Diamond, trap, &live);
        for (Vertex v = 0; v < n; ++v)
            if (lost[v]) live[v] = 0;
    }
}

std::vector<char> solve_generalized_buchi(const GenBuchiGame& bg)
{
    const std::size_t n = bg.names.size();
    const std::size_t m = bg.targets.size();
    if (m == 0) return std::vector<char>(n, 1);

    // product vertex (s, c, wrapped): c is the next target set awaited,
    // wrapped marks that the entering edge completed a full round
    const auto id = [&](std::size_t s, std::size_t c, bool wrapped) {
        return static_cast<Vertex>((s * m + c) * 2 + (wrapped ? 1 : 0));
    };
    const std::size_t total = n * m * 2;
    std::vector<Player> owners(total);
    VertexSet accepting(total, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t c = 0; c < m; ++c)
            for (int w = 0; w < 2; ++w) {
                owners[id(s, c, w)] = bg.owners[s];
                accepting[id(s, c, w)] = static_cast<char>(w);
            }
    for (std::size_t k = 0; k < bg.edges.size(); ++k) {
        const auto [u, v] = bg.edges[k];
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t next = c;
            bool wrapped = false;
            for (std::size_t step = 0; step < m && bg.targets[next][k]; ++step) {
                if (++next == m) {
                    next = 0;
                    wrapped = true;
                }
            }
            for (int w = 0; w < 2; ++w) edges.emplace_back(id(u, c, w), id(v, next, wrapped));
        }
    }
    const VertexSet win = solve_buchi(Arena(std::move(owners), edges), accepting);
    std::vector<char> result(n);
    for (std::size_t s = 0; s < n; ++s) result[s] = win[id(s, 0, false)];
    return result;
}

bool emptiness_decreasing(const Game& g, StateId s)
{
    if (!classify(g).decreasing) throw GameError(ErrorKind::NotDecreasing, "the game is not decreasing");
    return !solve_generalized_buchi(to_generalized_buchi(g))[s];
}

}  // namespace cgame
