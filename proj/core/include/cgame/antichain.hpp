#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

/// A vector whose components are positive integers or infinity. Inside
/// distance computations a vector is either entirely finite or entirely
/// infinite; the constructor rejects anything else.
class ExtVector {
public:
    ExtVector() = default;
    explicit ExtVector(std::vector<std::int64_t> components);
    explicit ExtVector(const LoadVector& v) : ExtVector(v.values()) {}

    static ExtVector infinite(int dimension);
    static ExtVector ones(int dimension);

    std::size_t size() const { return v_.size(); }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    const std::vector<std::int64_t>& values() const { return v_; }
    bool is_infinite() const { return !v_.empty() && v_.front() == kInfinity; }
    /// Precondition: !is_infinite().
    LoadVector to_load() const { return LoadVector(v_); }

    friend bool operator==(const ExtVector&, const ExtVector&) = default;
    /// Lexicographic; used only for canonical ordering.
    friend auto operator<=>(const ExtVector&, const ExtVector&) = default;

private:
    std::vector<std::int64_t> v_;
};

/// Componentwise order.
bool leq(const ExtVector& a, const ExtVector& b);
std::string to_string(const ExtVector& v);

/// Pairwise incomparable vectors, kept sorted lexicographically.
class Antichain {
public:
    Antichain() = default;

    const std::vector<ExtVector>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    /// True if some element is below `v`, i.e. `v` lies in the upward closure.
    bool covers(const ExtVector& v) const;
    bool contains(const ExtVector& v) const;
    /// The single-element {(inf,...,inf)} antichain used for "no distance".
    bool is_unreachable() const { return elems_.size() == 1 && elems_.front().is_infinite(); }

    friend bool operator==(const Antichain&, const Antichain&) = default;

private:
    friend Antichain min_set(std::vector<ExtVector> vectors);
    std::vector<ExtVector> elems_;
};

Antichain min_set(std::vector<ExtVector> vectors);

/// { a1 v ... v ak : ai in sets[i] } with v the componentwise maximum.
std::vector<ExtVector> cwm(std::span<const std::vector<ExtVector>> sets);
std::vector<ExtVector> cwm(const std::vector<ExtVector>& a, const std::vector<ExtVector>& b);

/// { b - delta : b in vectors }. Since delta <= 0 this raises each finite
/// component by |delta(i)|; infinity is absorbing.
std::vector<ExtVector> subtract_label(std::span<const ExtVector> vectors, const Label& delta);

std::string to_string(const Antichain& a);

}  // namespace cgame
