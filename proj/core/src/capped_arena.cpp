#include "cgame/capped_arena.hpp"

#include <cstdlib>
#include <deque>
#include <string>

namespace cgame {

std::size_t arena_vertex_limit()
{
    if (const char* env = std::getenv("CONSUMPTION_ARENA_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

namespace {

/// Fills strides and the box volume; fails once the volume times the number
/// of states passes the limit.
std::uint64_t box_layout(const std::vector<std::int64_t>& caps, std::size_t num_states, std::size_t limit,
                         std::vector<std::uint64_t>& strides)
{
    strides.assign(caps.size(), 0);
    std::uint64_t volume = 1;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] < 1) throw GameError(ErrorKind::InvalidVector, "arena caps must be positive");
        strides[i] = volume;
        const auto c = static_cast<std::uint64_t>(caps[i]);
        if (volume > (std::uint64_t{1} << 62) / c) {
            throw GameError(ErrorKind::ArenaTooLarge, "capped arena box overflows");
        }
        volume *= c;
    }
    if (volume > (std::uint64_t{1} << 62) / std::max<std::size_t>(num_states, 1)) {
        throw GameError(ErrorKind::ArenaTooLarge, "capped arena box overflows");
    }
    (void)limit;
    return volume;
}

[[noreturn]] void too_large(std::uint64_t count, std::size_t limit)
{
    throw GameError(ErrorKind::ArenaTooLarge,
                    "capped arena needs " + std::to_string(count) + " vertices, limit is " + std::to_string(limit));
}

/// Successor load along `e`, or nullopt for Fail.
std::optional<std::vector<std::int64_t>> step(const Edge& e, const std::vector<std::int64_t>& load,
                                              const std::vector<std::int64_t>& caps)
{
    std::vector<std::int64_t> next(load.size());
    for (std::size_t i = 0; i < load.size(); ++i) {
        const Delta x = e.label[i];
        if (x.is_omega()) {
            next[i] = caps[i];
        } else {
            next[i] = load[i] + x.value();
            if (next[i] <= 0) return std::nullopt;
        }
    }
    return next;
}

}  // namespace

std::uint64_t CappedArena::encode(StateId s, const std::vector<std::int64_t>& load) const
{
    std::uint64_t code = static_cast<std::uint64_t>(s) * box_volume_;
    for (std::size_t i = 0; i < load.size(); ++i) code += static_cast<std::uint64_t>(load[i] - 1) * strides_[i];
    return code;
}

std::optional<Vertex> CappedArena::vertex(StateId s, const LoadVector& load) const
{
    if (s >= num_states_ || load.size() != caps_.size()) return std::nullopt;
    for (std::size_t i = 0; i < load.size(); ++i)
        if (load[i] > caps_[i]) return std::nullopt;
    const std::uint64_t code = encode(s, load.values());
    if (codes_.empty()) return static_cast<Vertex>(code);
    auto it = index_.find(code);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Config CappedArena::config(Vertex v) const
{
    if (v == fail_) return Config::fail();
    std::uint64_t code = codes_.empty() ? v : codes_[v];
    const auto s = static_cast<StateId>(code / box_volume_);
    code %= box_volume_;
    std::vector<std::int64_t> load(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) {
        load[i] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(caps_[i])) + 1;
        code /= static_cast<std::uint64_t>(caps_[i]);
    }
    return Config(s, LoadVector(std::move(load)));
}

VertexSet CappedArena::winning() const
{
    VertexSet target(arena_.size(), 0);
    target[fail_] = 1;
    VertexSet lose = attractor(arena_, Player::Diamond, target);
    for (auto& x : lose) x = !x;
    return lose;
}

CappedArena build_capped_arena(const Game& g, std::vector<std::int64_t> caps, std::size_t limit)
{
    CappedArena a;
    a.caps_ = std::move(caps);
    a.num_states_ = g.num_states();
    a.box_volume_ = box_layout(a.caps_, g.num_states(), limit, a.strides_);
    const std::uint64_t total = a.box_volume_ * g.num_states() + 1;
    if (total > limit) too_large(total, limit);

    a.fail_ = static_cast<Vertex>(total - 1);
    std::vector<Player> owners(total, Player::Box);
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(total * 2);
    for (Vertex v = 0; v + 1 < total; ++v) {
        const Config c = a.config(v);
        owners[v] = g.owner(c.state());
        for (auto idx : g.out_edges(c.state())) {
            const Edge& e = g.edge(idx);
            auto next = step(e, c.load().values(), a.caps_);
            edges.emplace_back(v, next ? static_cast<Vertex>(a.encode(e.target, *next)) : a.fail_);
        }
    }
    edges.emplace_back(a.fail_, a.fail_);
    a.arena_ = Arena(std::move(owners), edges);
    return a;
}

CappedArena build_capped_arena_from(const Game& g, std::vector<std::int64_t> caps, StateId root,
                                    const LoadVector& load, std::size_t limit)
{
    CappedArena a;
    a.caps_ = std::move(caps);
    a.num_states_ = g.num_states();
    a.box_volume_ = box_layout(a.caps_, g.num_states(), limit, a.strides_);
    for (std::size_t i = 0; i < load.size(); ++i) {
        if (load[i] > a.caps_[i]) throw GameError(ErrorKind::InvalidVector, "root load exceeds the arena caps");
    }

    const std::uint64_t fail_code = a.box_volume_ * g.num_states();
    std::vector<Player> owners;
    std::vector<std::pair<Vertex, Vertex>> edges;
    const auto intern = [&](std::uint64_t code, Player owner) {
        auto [it, fresh] = a.index_.emplace(code, static_cast<Vertex>(a.codes_.size()));
        if (fresh) {
            if (a.codes_.size() + 1 > limit) too_large(a.codes_.size() + 1, limit);
            a.codes_.push_back(code);
            owners.push_back(owner);
        }
        return std::pair{it->second, fresh};
    };

    a.fail_ = intern(fail_code, Player::Box).first;
    edges.emplace_back(a.fail_, a.fail_);
    std::deque<Vertex> queue{intern(a.encode(root, load.values()), g.owner(root)).first};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const Config c = a.config(v);
        for (auto idx : g.out_edges(c.state())) {
            const Edge& e = g.edge(idx);
            auto next = step(e, c.load().values(), a.caps_);
            if (!next) {
                edges.emplace_back(v, a.fail_);
                continue;
            }
            auto [w, fresh] = intern(a.encode(e.target, *next), g.owner(e.target));
            edges.emplace_back(v, w);
            if (fresh) queue.push_back(w);
        }
    }
    a.arena_ = Arena(std::move(owners), edges);
    return a;
}

}  // namespace cgame
