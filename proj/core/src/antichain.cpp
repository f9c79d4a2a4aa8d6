#include "cgame/antichain.hpp"

#include <algorithm>

namespace cgame {

ExtVector::ExtVector(std::vector<std::int64_t> components) : v_(std::move(components))
{
    const bool inf = !v_.empty() && v_.front() == kInfinity;
    for (auto x : v_) {
        if ((x == kInfinity) != inf) throw GameError(ErrorKind::MixedExtVector, "vector mixes finite and infinite components");
        if (x < 1) throw GameError(ErrorKind::InvalidVector, "vector components must be positive, got " + std::to_string(x));
    }
}

ExtVector ExtVector::infinite(int dimension)
{
    return ExtVector(std::vector<std::int64_t>(static_cast<std::size_t>(dimension), kInfinity));
}

ExtVector ExtVector::ones(int dimension)
{
    return ExtVector(std::vector<std::int64_t>(static_cast<std::size_t>(dimension), 1));
}

bool leq(const ExtVector& a, const ExtVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string to_string(const ExtVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i] == kInfinity ? std::string("inf") : std::to_string(v[i]);
    }
    return out;
}

bool Antichain::covers(const ExtVector& v) const
{
    return std::any_of(elems_.begin(), elems_.end(), [&](const ExtVector& e) { return leq(e, v); });
}

bool Antichain::contains(const ExtVector& v) const
{
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

Antichain min_set(std::vector<ExtVector> vectors)
{
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    // a strictly smaller vector is also lexicographically smaller, so only
    // already-kept vectors can dominate the current one
    Antichain out;
    for (auto& v : vectors) {
        if (std::none_of(out.elems_.begin(), out.elems_.end(), [&](const ExtVector& k) { return leq(k, v); })) {
            out.elems_.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<ExtVector> cwm(const std::vector<ExtVector>& a, const std::vector<ExtVector>& b)
{
    std::vector<ExtVector> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            std::vector<std::int64_t> m(x.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(x[i], y[i]);
            out.emplace_back(std::move(m));
        }
    }
    return out;
}

std::vector<ExtVector> cwm(std::span<const std::vector<ExtVector>> sets)
{
    if (sets.empty()) return {};
    std::vector<ExtVector> acc = sets.front();
    for (std::size_t k = 1; k < sets.size(); ++k) acc = cwm(acc, sets[k]);
    return acc;
}

std::vector<ExtVector> subtract_label(std::span<const ExtVector> vectors, const Label& delta)
{
    for (Delta x : delta) {
        if (x.is_omega()) throw GameError(ErrorKind::OmegaInDistanceLabel, "distance labels may not contain reloads");
    }
    std::vector<ExtVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.is_infinite()) {
            out.push_back(v);
            continue;
        }
        std::vector<std::int64_t> m(v.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = v[i] + delta[i].magnitude();
        out.emplace_back(std::move(m));
    }
    return out;
}

std::string to_string(const Antichain& a)
{
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ' ';
        out += '(' + to_string(a.elements()[i]) + ')';
    }
    return out + '}';
}

}  // namespace cgame
