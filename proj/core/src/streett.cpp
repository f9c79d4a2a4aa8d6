#include "cgame/streett.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cgame/parity.hpp"

namespace cgame {

StreettGame to_streett(const Game& g)
{
    StreettGame sg;
    for (StateId s = 0; s < g.num_states(); ++s) {
        sg.names.push_back(g.name(s));
        sg.owners.push_back(g.owner(s));
    }
    const std::size_t m = g.num_edges();
    sg.pairs.assign(g.dimension(), StreettPair{std::vector<char>(m, 0), std::vector<char>(m, 0)});
    for (std::size_t k = 0; k < m; ++k) {
        const Edge& e = g.edge(k);
        sg.edges.emplace_back(e.source, e.target);
        for (int i = 0; i < g.dimension(); ++i) {
            if (e.label[i].is_omega())
                sg.pairs[i].response[k] = 1;
            else if (e.label[i].is_negative())
                sg.pairs[i].trigger[k] = 1;
        }
    }
    return sg;
}

Game from_streett(const StreettGame& sg)
{
    RawGame raw;
    raw.dimension = static_cast<int>(sg.pairs.size());
    for (std::size_t s = 0; s < sg.names.size(); ++s) raw.add_state(sg.names[s], sg.owners[s]);
    std::vector<std::tuple<StateId, StateId, Label>> seen;
    for (std::size_t k = 0; k < sg.edges.size(); ++k) {
        auto [u, v] = sg.edges[k];
        Label label(sg.pairs.size());
        for (std::size_t i = 0; i < sg.pairs.size(); ++i) {
            const bool g = sg.pairs[i].trigger[k], r = sg.pairs[i].response[k];
            if (g && r) {
                throw GameError(ErrorKind::AmbiguousStreettEdge, "edge " + sg.names[u] + " -> " + sg.names[v] +
                                                                     " is in both sets of pair " + std::to_string(i + 1));
            }
            label[i] = g ? Delta::finite(-1) : r ? Delta::omega() : Delta::finite(0);
        }
        // parallel edges with the same pair membership collapse
        auto key = std::tuple{u, v, label};
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        raw.add_edge(sg.names[u], sg.names[v], std::move(label));
    }
    return validate_game(raw);
}

namespace {

using Record = std::vector<std::uint8_t>;

struct RecordTable {
    std::map<Record, std::uint32_t> ids;
    std::vector<Record> records;
    std::uint32_t intern(const Record& r)
    {
        auto [it, fresh] = ids.emplace(r, static_cast<std::uint32_t>(records.size()));
        if (fresh) records.push_back(r);
        return it->second;
    }
};

}  // namespace

std::vector<char> solve_streett_game(const StreettGame& sg, int max_pairs, std::size_t limit)
{
    const std::size_t n = sg.names.size();
    const int m = static_cast<int>(sg.pairs.size());
    if (m > max_pairs) {
        throw GameError(ErrorKind::TooManyPairs,
                        std::to_string(m) + " Streett pairs exceed the limit of " + std::to_string(max_pairs));
    }
    if (m == 0) return std::vector<char>(n, 1);

    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t k = 0; k < sg.edges.size(); ++k) out[sg.edges[k].first].push_back(k);

    // record: pair indices, position 0 = longest since its last response
    RecordTable table;
    Record identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    const std::uint32_t id0 = table.intern(identity);

    const int num_prio = 2 * m + 3;
    const auto key_of = [&](std::uint64_t s, std::uint64_t rec, int prio) {
        return (rec * n + s) * num_prio + static_cast<std::uint64_t>(prio);
    };
    std::unordered_map<std::uint64_t, Vertex> index;
    std::vector<std::tuple<StateId, std::uint32_t, int>> info;
    std::vector<Player> owners;
    std::vector<int> priority;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::deque<Vertex> queue;

    const auto intern = [&](StateId s, std::uint32_t rec, int prio) {
        auto [it, fresh] = index.emplace(key_of(s, rec, prio), static_cast<Vertex>(info.size()));
        if (fresh) {
            if (info.size() + 1 > limit) {
                throw GameError(ErrorKind::ArenaTooLarge,
                                "Streett product exceeds the vertex limit of " + std::to_string(limit));
            }
            info.emplace_back(s, rec, prio);
            owners.push_back(sg.owners[s]);
            priority.push_back(prio);
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (StateId s = 0; s < n; ++s) intern(s, id0, 0);

    Record next;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const auto [s, rec_id, prio_unused] = info[v];
        (void)prio_unused;
        for (std::size_t k : out[s]) {
            const Record& rec = table.records[rec_id];
            int bad = 0, good = 0;
            for (int pos = 0; pos < m; ++pos) {
                if (sg.pairs[rec[pos]].trigger[k]) {
                    bad = 2 * (m - pos) + 1;
                    break;
                }
            }
            next.clear();
            int hit = -1;
            for (int pos = 0; pos < m; ++pos) {
                if (sg.pairs[rec[pos]].response[k]) {
                    if (hit < 0) hit = pos;
                } else {
                    next.push_back(rec[pos]);
                }
            }
            if (hit >= 0) {
                good = 2 * (m - hit) + 2;
                for (int pos = 0; pos < m; ++pos)
                    if (sg.pairs[rec[pos]].response[k]) next.push_back(rec[pos]);
            }
            const std::uint32_t nrec = hit >= 0 ? table.intern(next) : rec_id;
            const Vertex w = intern(sg.edges[k].second, nrec, std::max(good, bad));
            edges.emplace_back(v, w);
        }
    }

    ParityGame pg{Arena(std::move(owners), edges), std::move(priority)};
    const VertexSet win = solve_parity(pg);
    std::vector<char> result(n, 0);
    for (StateId s = 0; s < n; ++s) result[s] = win[index.at(key_of(s, id0, 0))];
    return result;
}

}  // namespace cgame
