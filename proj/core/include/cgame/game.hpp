#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgame/errors.hpp"

namespace cgame {

enum class Player : std::uint8_t { Box, Diamond };

inline Player opponent(Player p) { return p == Player::Box ? Player::Diamond : Player::Box; }
const char* to_string(Player p);

/// One component of an edge label: a nonpositive amount consumed, or a
/// reload (omega).
class Delta {
public:
    constexpr Delta() = default;

    static constexpr Delta omega() { return Delta(kOmegaRaw); }
    /// Throws PositiveFiniteDelta when `amount > 0`.
    static Delta finite(std::int64_t amount);

    constexpr bool is_omega() const { return raw_ == kOmegaRaw; }
    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool is_negative() const { return raw_ < 0; }
    /// Only meaningful for finite deltas.
    constexpr std::int64_t value() const { return raw_; }
    constexpr std::int64_t magnitude() const { return is_omega() ? 0 : -raw_; }

    friend constexpr bool operator==(Delta, Delta) = default;

private:
    static constexpr std::int64_t kOmegaRaw = 1;
    constexpr explicit Delta(std::int64_t raw) : raw_(raw) {}

    std::int64_t raw_ = 0;
};

using Label = std::vector<Delta>;

/// Canonical label order: componentwise by magnitude, omega after every
/// finite value.
std::strong_ordering compare_labels(const Label& a, const Label& b);
std::string to_string(const Label& label);

using StateId = std::uint32_t;

struct Edge {
    StateId source = 0;
    StateId target = 0;
    Label label;
};

/// Unvalidated game description, as produced by the parser or by the
/// generators. Line numbers are carried into validation diagnostics.
struct RawGame {
    struct StateDecl {
        std::string name;
        Player owner = Player::Box;
        int line = 0;
    };
    struct EdgeDecl {
        std::string source;
        std::string target;
        Label label;
        int line = 0;
    };

    int dimension = 0;
    std::vector<StateDecl> states;
    std::vector<EdgeDecl> edges;

    RawGame& add_state(std::string name, Player owner, int line = 0);
    RawGame& add_edge(std::string source, std::string target, Label label, int line = 0);
};

/// A validated consumption game. Immutable; edges are stored in canonical
/// order (source, target, label).
class Game {
public:
    int dimension() const { return dimension_; }
    std::size_t num_states() const { return names_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::string& name(StateId s) const { return names_[s]; }
    Player owner(StateId s) const { return owners_[s]; }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_[index]; }
    /// Indices into edges() of the transitions leaving `s`.
    std::span<const std::uint32_t> out_edges(StateId s) const
    {
        return {out_index_.data() + out_offset_[s], out_index_.data() + out_offset_[s + 1]};
    }

    std::optional<StateId> find(std::string_view name) const;
    /// Throws UnknownState.
    StateId state(std::string_view name) const;

    RawGame to_raw() const;

    friend bool operator==(const Game& a, const Game& b);

private:
    friend Game validate_game(const RawGame& raw);

    int dimension_ = 0;
    std::vector<std::string> names_;
    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> out_offset_;
    std::vector<std::uint32_t> out_index_;
};

Game validate_game(const RawGame& raw);

struct GameClass {
    bool one_player = false;
    bool decreasing = false;
    friend bool operator==(const GameClass&, const GameClass&) = default;
};

GameClass classify(const Game& g);

/// Largest finite |delta(i)| over all labels; 0 when every finite delta is 0.
std::int64_t max_finite_drop(const Game& g);

/// d * max(l,1) * |S|, the per-dimension cap under which minimal safe vectors
/// live and beyond which reloads never need to go.
std::int64_t global_bound(const Game& g);

/// Positive resource loads.
class LoadVector {
public:
    LoadVector() = default;
    /// Throws InvalidVector unless every component is >= 1.
    explicit LoadVector(std::vector<std::int64_t> components);
    static LoadVector uniform(int dimension, std::int64_t value);

    std::size_t size() const { return v_.size(); }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    const std::vector<std::int64_t>& values() const { return v_; }

    /// Componentwise minimum with `cap`.
    LoadVector capped(std::int64_t cap) const;

    friend bool operator==(const LoadVector&, const LoadVector&) = default;
    friend auto operator<=>(const LoadVector&, const LoadVector&) = default;

private:
    std::vector<std::int64_t> v_;
};

/// Componentwise order.
bool leq(const LoadVector& a, const LoadVector& b);
std::string to_string(const LoadVector& v);

/// A vertex of the infinite configuration graph: a state with a load, or Fail.
class Config {
public:
    static Config fail() { return Config(); }
    Config(StateId state, LoadVector load) : state_(state), load_(std::move(load)) {}

    bool is_fail() const { return !state_.has_value(); }
    StateId state() const { return *state_; }
    const LoadVector& load() const { return load_; }

    friend bool operator==(const Config&, const Config&) = default;

private:
    Config() = default;
    std::optional<StateId> state_;
    LoadVector load_;
};

}  // namespace cgame
