#include "cgame/game.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace cgame {

const char* to_string(Player p) { return p == Player::Box ? "box" : "diamond"; }

Delta Delta::finite(std::int64_t amount)
{
    if (amount > 0) throw GameError(ErrorKind::PositiveFiniteDelta, "finite delta " + std::to_string(amount) + " is positive");
    return Delta(amount);
}

std::strong_ordering compare_labels(const Label& a, const Label& b)
{
    const auto key = [](Delta x) {
        return x.is_omega() ? std::numeric_limits<std::int64_t>::max() : x.magnitude();
    };
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (auto c = key(a[i]) <=> key(b[i]); c != 0) return c;
    }
    return a.size() <=> b.size();
}

std::string to_string(const Label& label)
{
    std::string out;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) out += ',';
        out += label[i].is_omega() ? std::string("w") : std::to_string(label[i].value());
    }
    return out;
}

RawGame& RawGame::add_state(std::string name, Player owner, int line)
{
    states.push_back({std::move(name), owner, line});
    return *this;
}

RawGame& RawGame::add_edge(std::string source, std::string target, Label label, int line)
{
    edges.push_back({std::move(source), std::move(target), std::move(label), line});
    return *this;
}

std::optional<StateId> Game::find(std::string_view name) const
{
    for (StateId s = 0; s < names_.size(); ++s) {
        if (names_[s] == name) return s;
    }
    return std::nullopt;
}

StateId Game::state(std::string_view name) const
{
    if (auto s = find(name)) return *s;
    throw GameError(ErrorKind::UnknownState, "no state named '" + std::string(name) + "'");
}

RawGame Game::to_raw() const
{
    RawGame raw;
    raw.dimension = dimension_;
    for (StateId s = 0; s < names_.size(); ++s) raw.add_state(names_[s], owners_[s]);
    for (const auto& e : edges_) raw.add_edge(names_[e.source], names_[e.target], e.label);
    return raw;
}

bool operator==(const Game& a, const Game& b)
{
    if (a.dimension_ != b.dimension_ || a.names_ != b.names_ || a.owners_ != b.owners_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.source != y.source || x.target != y.target || x.label != y.label) return false;
    }
    return true;
}

Game validate_game(const RawGame& raw)
{
    if (raw.dimension < 1) {
        throw GameError(ErrorKind::DimensionMismatch, "dimension must be at least 1, got " + std::to_string(raw.dimension));
    }
    if (raw.states.empty()) throw GameError(ErrorKind::EmptyGame, "game declares no states");

    Game g;
    g.dimension_ = raw.dimension;
    std::unordered_map<std::string, StateId> index;
    for (const auto& decl : raw.states) {
        if (!index.emplace(decl.name, static_cast<StateId>(g.names_.size())).second) {
            throw GameError(ErrorKind::DuplicateState, "state '" + decl.name + "' declared twice", decl.line);
        }
        g.names_.push_back(decl.name);
        g.owners_.push_back(decl.owner);
    }

    const auto lookup = [&](const std::string& name, int line) {
        auto it = index.find(name);
        if (it == index.end()) throw GameError(ErrorKind::UnknownState, "edge refers to undeclared state '" + name + "'", line);
        return it->second;
    };

    std::vector<std::pair<Edge, int>> edges;
    edges.reserve(raw.edges.size());
    for (const auto& decl : raw.edges) {
        Edge e{lookup(decl.source, decl.line), lookup(decl.target, decl.line), decl.label};
        const std::string where = decl.source + " -> " + decl.target;
        if (static_cast<int>(e.label.size()) != raw.dimension) {
            throw GameError(ErrorKind::DimensionMismatch,
                            "edge " + where + " has " + std::to_string(e.label.size()) + " components, expected " +
                                std::to_string(raw.dimension),
                            decl.line);
        }
        for (Delta x : e.label) {
            if (!x.is_omega() && x.value() > 0) {
                throw GameError(ErrorKind::PositiveFiniteDelta, "edge " + where + " has a positive delta", decl.line);
            }
        }
        if (g.owners_[e.source] == Player::Diamond &&
            std::any_of(e.label.begin(), e.label.end(), [](Delta x) { return x.is_omega(); })) {
            throw GameError(ErrorKind::OmegaOnDiamond, "edge " + where + " leaves a diamond state with a reload", decl.line);
        }
        edges.emplace_back(std::move(e), decl.line);
    }

    std::stable_sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        if (x.first.source != y.first.source) return x.first.source < y.first.source;
        if (x.first.target != y.first.target) return x.first.target < y.first.target;
        return compare_labels(x.first.label, y.first.label) < 0;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        const auto& a = edges[i - 1].first;
        const auto& b = edges[i].first;
        if (a.source == b.source && a.target == b.target && a.label == b.label) {
            throw GameError(ErrorKind::DuplicateEdge,
                            "edge " + g.names_[b.source] + " -> " + g.names_[b.target] + " " + to_string(b.label) +
                                " declared twice",
                            edges[i].second);
        }
    }

    g.out_offset_.assign(g.names_.size() + 1, 0);
    for (const auto& [e, line] : edges) ++g.out_offset_[e.source + 1];
    for (StateId s = 0; s < g.names_.size(); ++s) {
        if (g.out_offset_[s + 1] == 0) {
            throw GameError(ErrorKind::MissingOutgoingEdge, "state '" + g.names_[s] + "' has no outgoing edge",
                            raw.states[s].line);
        }
        g.out_offset_[s + 1] += g.out_offset_[s];
    }
    g.edges_.reserve(edges.size());
    for (auto& [e, line] : edges) g.edges_.push_back(std::move(e));
    // edges are sorted by source, so out_index_ is just the identity
    g.out_index_.resize(g.edges_.size());
    std::iota(g.out_index_.begin(), g.out_index_.end(), 0u);
    return g;
}

namespace {

bool has_cycle(std::size_t n, const std::vector<std::vector<StateId>>& succ)
{
    std::vector<int> indegree(n, 0);
    for (const auto& out : succ)
        for (StateId t : out) ++indegree[t];
    std::vector<StateId> queue;
    for (StateId s = 0; s < n; ++s)
        if (indegree[s] == 0) queue.push_back(s);
    std::size_t removed = 0;
    while (!queue.empty()) {
        StateId s = queue.back();
        queue.pop_back();
        ++removed;
        for (StateId t : succ[s])
            if (--indegree[t] == 0) queue.push_back(t);
    }
    return removed != n;
}

}  // namespace

GameClass classify(const Game& g)
{
    GameClass c;
    c.one_player = true;
    for (StateId s = 0; s < g.num_states(); ++s)
        if (g.owner(s) == Player::Diamond) c.one_player = false;

    c.decreasing = true;
    for (int i = 0; i < g.dimension() && c.decreasing; ++i) {
        std::vector<std::vector<StateId>> zero_succ(g.num_states());
        for (const auto& e : g.edges())
            if (e.label[i].is_zero()) zero_succ[e.source].push_back(e.target);
        if (has_cycle(g.num_states(), zero_succ)) c.decreasing = false;
    }
    return c;
}

std::int64_t max_finite_drop(const Game& g)
{
    std::int64_t l = 0;
    for (const auto& e : g.edges())
        for (Delta x : e.label) l = std::max(l, x.magnitude());
    return l;
}

std::int64_t global_bound(const Game& g)
{
    return static_cast<std::int64_t>(g.dimension()) * std::max<std::int64_t>(max_finite_drop(g), 1) *
           static_cast<std::int64_t>(g.num_states());
}

LoadVector::LoadVector(std::vector<std::int64_t> components) : v_(std::move(components))
{
    for (auto x : v_) {
        if (x < 1) throw GameError(ErrorKind::InvalidVector, "load components must be positive, got " + std::to_string(x));
    }
}

LoadVector LoadVector::uniform(int dimension, std::int64_t value)
{
    return LoadVector(std::vector<std::int64_t>(static_cast<std::size_t>(dimension), value));
}

LoadVector LoadVector::capped(std::int64_t cap) const
{
    LoadVector out = *this;
    for (auto& x : out.v_) x = std::min(x, cap);
    return out;
}

bool leq(const LoadVector& a, const LoadVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string to_string(const LoadVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace cgame
