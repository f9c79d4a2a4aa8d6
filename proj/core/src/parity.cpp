#include "cgame/parity.hpp"

#include <algorithm>

namespace cgame {

namespace {

struct Regions {
    VertexSet box, diamond;
    VertexSet& of(Player p) { return p == Player::Box ? box : diamond; }
};

Regions zielonka(const ParityGame& g, const VertexSet& sub)
{
    const std::size_t n = g.arena.size();
    Regions out{VertexSet(n, 0), VertexSet(n, 0)};
    int top = -1;
    for (Vertex v = 0; v < n; ++v)
        if (sub[v]) top = std::max(top, g.priority[v]);
    if (top < 0) return out;

    const Player me = top % 2 == 0 ? Player::Box : Player::Diamond;
    const Player other = opponent(me);

    VertexSet heads(n, 0);
    for (Vertex v = 0; v < n; ++v) heads[v] = sub[v] && g.priority[v] == top;
    const VertexSet a = attractor(g.arena, me, heads, &sub);

    VertexSet rest(n, 0);
    for (Vertex v = 0; v < n; ++v) rest[v] = sub[v] && !a[v];
    Regions inner = zielonka(g, rest);

    if (std::none_of(inner.of(other).begin(), inner.of(other).end(), [](char c) { return c != 0; })) {
        out.of(me) = sub;
        return out;
    }

    const VertexSet b = attractor(g.arena, other, inner.of(other), &sub);
    for (Vertex v = 0; v < n; ++v) rest[v] = sub[v] && !b[v];
    Regions second = zielonka(g, rest);
    out.of(me) = std::move(second.of(me));
    out.of(other) = std::move(second.of(other));
    for (Vertex v = 0; v < n; ++v)
        if (b[v]) out.of(other)[v] = 1;
    return out;
}

}  // namespace

VertexSet solve_parity(const ParityGame& g)
{
    VertexSet all(g.arena.size(), 1);
    return zielonka(g, all).box;
}

}  // namespace cgame
