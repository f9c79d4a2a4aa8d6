#include "cgame/oracle.hpp"

#include <algorithm>

#include "cgame/capped_arena.hpp"

namespace cgame {

namespace {

/// Configurations (s, v) with 1 <= v(i) <= bound(i), plus Fail at the end.
class Explicit {
public:
    Explicit(const Game& g, std::vector<std::int64_t> bound) : g_(g), bound_(std::move(bound))
    {
        volume_ = 1;
        for (auto b : bound_) {
            volume_ *= static_cast<std::size_t>(b);
            if (volume_ * g.num_states() > arena_vertex_limit())
                throw GameError(ErrorKind::ArenaTooLarge, "oracle arena exceeds the vertex limit");
        }
        fail_ = volume_ * g.num_states();
        lost_.assign(fail_ + 1, 0);
        lost_[fail_] = 1;
        solve();
    }

    bool wins(StateId s, const std::vector<std::int64_t>& v) const { return !lost_[index(s, v)]; }

    std::vector<std::int64_t> load_of(std::size_t x) const
    {
        std::vector<std::int64_t> v(bound_.size());
        x %= volume_;
        for (std::size_t i = 0; i < bound_.size(); ++i) {
            v[i] = static_cast<std::int64_t>(x % bound_[i]) + 1;
            x /= bound_[i];
        }
        return v;
    }

    std::size_t volume() const { return volume_; }

private:
    std::size_t index(StateId s, const std::vector<std::int64_t>& v) const
    {
        std::size_t x = 0;
        for (std::size_t i = bound_.size(); i-- > 0;) x = x * bound_[i] + static_cast<std::size_t>(v[i] - 1);
        return s * volume_ + x;
    }

    /// Does some reload choice along `e` from v reach a vertex not yet lost?
    /// Choices are tried from the top down, which only affects speed.
    bool some_choice_alive(const Edge& e, const std::vector<std::int64_t>& v) const
    {
        const std::size_t d = v.size();
        std::vector<std::int64_t> w(d);
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < d; ++i) {
            if (e.label[i].is_omega()) {
                free.push_back(i);
                w[i] = bound_[i];
            } else {
                w[i] = v[i] + e.label[i].value();
                if (w[i] <= 0) return false;
            }
        }
        for (;;) {
            if (!lost_[index(e.target, w)]) return true;
            // next choice: decrement like an odometer over [v(i)..bound(i)]
            std::size_t k = 0;
            for (; k < free.size(); ++k) {
                const std::size_t i = free[k];
                if (w[i] > v[i]) {
                    --w[i];
                    break;
                }
                w[i] = bound_[i];
            }
            if (k == free.size()) return false;
        }
    }

    void solve()
    {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t x = 0; x < fail_; ++x) {
                if (lost_[x]) continue;
                const StateId s = static_cast<StateId>(x / volume_);
                const auto v = load_of(x);
                bool lose;
                if (g_.owner(s) == Player::Box) {
                    lose = true;
                    for (auto k : g_.out_edges(s))
                        if (some_choice_alive(g_.edge(k), v)) {
                            lose = false;
                            break;
                        }
                } else {
                    lose = false;
                    for (auto k : g_.out_edges(s))
                        if (!some_choice_alive(g_.edge(k), v)) {
                            lose = true;
                            break;
                        }
                }
                if (lose) {
                    lost_[x] = 1;
                    changed = true;
                }
            }
        }
    }

    const Game& g_;
    std::vector<std::int64_t> bound_;
    std::size_t volume_ = 1;
    std::size_t fail_ = 0;
    std::vector<char> lost_;
};

bool below_or_equal(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<LoadVector> minimal_of(std::vector<std::vector<std::int64_t>> members)
{
    std::vector<LoadVector> out;
    for (std::size_t a = 0; a < members.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < members.size() && minimal; ++b)
            if (b != a && members[b] != members[a] && below_or_equal(members[b], members[a])) minimal = false;
        if (minimal) out.emplace_back(members[a]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check(const Game& g, StateId s, std::size_t size)
{
    if (s >= g.num_states()) throw GameError(ErrorKind::UnknownState, "state index out of range");
    if (size != static_cast<std::size_t>(g.dimension()))
        throw GameError(ErrorKind::DimensionMismatch, "vector dimension differs from the game");
}

}  // namespace

bool oracle_safe_membership(const Game& g, StateId s, const LoadVector& alpha, std::int64_t cap)
{
    check(g, s, alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > cap) throw GameError(ErrorKind::InvalidVector, "alpha exceeds the oracle cap");
    const Explicit x(g, std::vector<std::int64_t>(g.dimension(), cap));
    return x.wins(s, alpha.values());
}

std::vector<std::vector<LoadVector>> oracle_safe_minimals_all(const Game& g, std::int64_t cap)
{
    const Explicit x(g, std::vector<std::int64_t>(g.dimension(), cap));
    std::vector<std::vector<LoadVector>> out;
    for (StateId s = 0; s < g.num_states(); ++s) {
        std::vector<std::vector<std::int64_t>> members;
        for (std::size_t k = 0; k < x.volume(); ++k) {
            auto v = x.load_of(k);
            if (x.wins(s, v)) members.push_back(std::move(v));
        }
        out.push_back(minimal_of(std::move(members)));
    }
    return out;
}

std::vector<LoadVector> oracle_safe_minimals(const Game& g, StateId s, std::int64_t cap)
{
    check(g, s, g.dimension());
    return oracle_safe_minimals_all(g, cap)[s];
}

bool oracle_cover_membership(const Game& g, StateId s, const LoadVector& alpha)
{
    check(g, s, alpha.size());
    const Explicit x(g, alpha.values());
    return x.wins(s, alpha.values());
}

std::vector<LoadVector> oracle_cover_minimals(const Game& g, StateId s, std::int64_t cap)
{
    check(g, s, g.dimension());
    const int d = g.dimension();
    std::vector<std::vector<std::int64_t>> members;
    std::vector<std::int64_t> v(d, 1);
    for (;;) {
        if (oracle_cover_membership(g, s, LoadVector(v))) members.push_back(v);
        int i = 0;
        for (; i < d; ++i) {
            if (v[i] < cap) {
                ++v[i];
                break;
            }
            v[i] = 1;
        }
        if (i == d) break;
    }
    return minimal_of(std::move(members));
}

}  // namespace cgame
