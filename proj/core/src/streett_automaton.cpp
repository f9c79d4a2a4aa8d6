#include "cgame/streett_automaton.hpp"

#include <algorithm>
#include <functional>

namespace cgame {

namespace {

void require_one_player(const Game& g)
{
    if (!classify(g).one_player) throw GameError(ErrorKind::NotOnePlayer, "the game has diamond states");
}

/// Strongly connected components of the graph on `vertices` using the edges
/// with active[k] set. Iterative Tarjan.
std::vector<std::vector<StateId>> components(const Game& g, const std::vector<StateId>& vertices,
                                             const std::vector<char>& in_set, const std::vector<char>& active)
{
    const std::size_t n = g.num_states();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<StateId> stack;
    std::vector<std::vector<StateId>> out;
    int counter = 0;

    struct Frame {
        StateId v;
        std::size_t next;
    };
    for (StateId root : vertices) {
        if (index[root] >= 0) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto outs = g.out_edges(f.v);
            if (f.next < outs.size()) {
                const auto k = outs[f.next++];
                if (!active[k]) continue;
                const StateId w = g.edge(k).target;
                if (!in_set[w]) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const StateId v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<StateId> comp;
                StateId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

/// Whether some SCC inside `vertices` (over active edges) carries a cycle
/// meeting the Streett condition on the resources in `dims`.
bool good_cycle(const Game& g, const std::vector<StateId>& vertices, std::vector<char> active, ReloadSet dims)
{
    const std::size_t n = g.num_states();
    std::vector<char> in_set(n, 0);
    for (StateId v : vertices) in_set[v] = 1;

    for (auto& comp : components(g, vertices, in_set, active)) {
        std::vector<char> in_comp(n, 0);
        for (StateId v : comp) in_comp[v] = 1;
        std::vector<std::uint32_t> internal;
        for (StateId v : comp)
            for (auto k : g.out_edges(v))
                if (active[k] && in_comp[g.edge(k).target]) internal.push_back(k);
        if (internal.empty()) continue;

        ReloadSet consumed = 0, reloaded = 0;
        for (auto k : internal) {
            const Label& l = g.edge(k).label;
            for (int i = 0; i < g.dimension(); ++i) {
                if (!contains(dims, i)) continue;
                if (l[i].is_omega()) reloaded |= ReloadSet{1} << i;
                else if (l[i].is_negative()) consumed |= ReloadSet{1} << i;
            }
        }
        const ReloadSet bad = consumed & ~reloaded;
        if (bad == 0) return true;

        std::vector<char> sub_active = active;
        for (auto k : internal) {
            const Label& l = g.edge(k).label;
            for (int i = 0; i < g.dimension(); ++i)
                if (contains(bad, i) && l[i].is_negative()) sub_active[k] = 0;
        }
        if (good_cycle(g, comp, std::move(sub_active), dims)) return true;
    }
    return false;
}

std::vector<StateId> reachable(const Game& g, StateId s, const std::vector<char>& active)
{
    std::vector<char> seen(g.num_states(), 0);
    std::vector<StateId> order{s}, todo{s};
    seen[s] = 1;
    while (!todo.empty()) {
        const StateId v = todo.back();
        todo.pop_back();
        for (auto k : g.out_edges(v)) {
            const StateId w = g.edge(k).target;
            if (active[k] && !seen[w]) {
                seen[w] = 1;
                order.push_back(w);
                todo.push_back(w);
            }
        }
    }
    return order;
}

}  // namespace

bool streett_path_exists(const Game& g, StateId s, const std::vector<char>& active, ReloadSet dims)
{
    return good_cycle(g, reachable(g, s, active), active, dims);
}

bool streett_automaton_nonempty(const Game& g, StateId s)
{
    require_one_player(g);
    const std::vector<char> active(g.num_edges(), 1);
    return good_cycle(g, reachable(g, s, active), active, full_set(g.dimension()));
}

std::vector<char> streett_automaton_nonempty_states(const Game& g)
{
    require_one_player(g);
    const std::size_t n = g.num_states();
    const std::vector<char> active(g.num_edges(), 1);
    std::vector<char> good(n, 0);
    for (StateId s = 0; s < n; ++s) good[s] = good_cycle(g, reachable(g, s, active), active, full_set(g.dimension()));
    return good;
}

bool is_I_safe(const Game& g, StateId s, ReloadSet I)
{
    require_one_player(g);
    const std::size_t n = g.num_states();
    std::vector<char> active(g.num_edges(), 0);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const Label& l = g.edge(k).label;
        bool ok = true;
        for (int i = 0; i < g.dimension() && ok; ++i) ok = contains(I, i) || l[i].is_zero();
        active[k] = ok;
    }
    // drop states without an active successor until stable
    std::vector<char> alive(n, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (StateId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool has = false;
            for (auto k : g.out_edges(v)) has = has || (active[k] && alive[g.edge(k).target]);
            if (!has) {
                alive[v] = 0;
                changed = true;
            }
        }
    }
    if (!alive[s]) return false;
    for (std::size_t k = 0; k < g.num_edges(); ++k)
        if (!alive[g.edge(k).source] || !alive[g.edge(k).target]) active[k] = 0;
    return good_cycle(g, reachable(g, s, active), active, I);
}

}  // namespace cgame
