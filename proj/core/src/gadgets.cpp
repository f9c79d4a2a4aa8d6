#include "cgame/gadgets.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cgame {

namespace {

bool in_clause(const std::vector<int>& clause, int lit)
{
    return std::find(clause.begin(), clause.end(), lit) != clause.end();
}

/// Adds the chain s1 -> s_[n]x<i> -> s<i+1> ... s{n+1} of the phi part. Clause j
/// of `q` governs resource j; components from q.clauses.size() up to d are -1.
void formula_chain(RawGame& raw, const QbfInstance& q, const std::string& prefix, bool alternate)
{
    const int n = static_cast<int>(q.num_variables());
    const int d = raw.dimension;
    for (int i = 1; i <= n + 1; ++i) {
        const bool forall = alternate && i <= n && q.prefix[i - 1].first == Quantifier::Forall;
        raw.add_state(prefix + std::to_string(i), forall ? Player::Diamond : Player::Box);
        if (i <= n) {
            raw.add_state(prefix + "_x" + std::to_string(i), Player::Box);
            raw.add_state(prefix + "_nx" + std::to_string(i), Player::Box);
        }
    }
    for (int i = 1; i <= n; ++i) {
        const int var = q.prefix[i - 1].second;
        for (int sign : {1, -1}) {
            const std::string lit_state = prefix + (sign > 0 ? "_x" : "_nx") + std::to_string(i);
            Label a(d, Delta::finite(-1)), b(d, Delta::finite(-1));
            for (std::size_t j = 0; j < q.clauses.size(); ++j) {
                if (!in_clause(q.clauses[j], sign * var)) continue;
                a[j] = Delta::finite(-2 * (n - i + 1));
                b[j] = Delta::omega();
            }
            raw.add_edge(prefix + std::to_string(i), lit_state, a);
            raw.add_edge(lit_state, prefix + std::to_string(i + 1), b);
        }
    }
}

}  // namespace

QbfGadget gen_qbf(const QbfInstance& q)
{
    validate_qbf(q);
    const int n = static_cast<int>(q.num_variables());
    const int m = static_cast<int>(q.clauses.size());
    if (n < 1 || m < 1) throw GameError(ErrorKind::SyntaxError, "the formula needs at least one variable and one clause");

    RawGame raw;
    raw.dimension = m;
    formula_chain(raw, q, "s", true);
    raw.add_state("r", Player::Box);
    raw.add_edge("s" + std::to_string(n + 1), "r", Label(m, Delta::finite(-1)));
    raw.add_edge("r", "r", Label(m, Delta::omega()));
    Game g = validate_game(raw);
    const StateId start = g.state("s1");
    return {std::move(g), start, LoadVector::uniform(m, 2 * n + 1)};
}

SatUnsatGadget gen_satunsat(const QbfInstance& phi, const QbfInstance& psi, GammaRule rule)
{
    validate_qbf(phi);
    validate_qbf(psi);
    for (auto [qa, va] : phi.prefix)
        for (auto [qb, vb] : psi.prefix)
            if (va == vb) {
                throw GameError(ErrorKind::VariableOverlap,
                                "variable " + std::to_string(va) + " occurs in both formulas");
            }
    const int n = static_cast<int>(phi.num_variables());
    const int m = static_cast<int>(phi.clauses.size());
    const int n2 = static_cast<int>(psi.num_variables());
    const int m2 = static_cast<int>(psi.clauses.size());
    if (n < 1 || m < 1 || n2 < 1 || m2 < 1) {
        throw GameError(ErrorKind::SyntaxError, "both formulas need at least one variable and one clause");
    }
    const int M = m + m2 + 1;

    RawGame raw;
    raw.dimension = M;
    formula_chain(raw, phi, "s", false);
    raw.add_state("r", Player::Box);
    raw.add_edge("s" + std::to_string(n + 1), "r", Label(M, Delta::finite(-1)));

    for (int i = 1; i <= n2 + 1; ++i) {
        raw.add_state("t" + std::to_string(i), Player::Box);
        if (i <= n2) {
            raw.add_state("t_y" + std::to_string(i), Player::Box);
            raw.add_state("t_ny" + std::to_string(i), Player::Box);
        }
    }
    raw.add_state("p", Player::Box);
    raw.add_state("p'", Player::Box);

    const int extra = rule == GammaRule::OddDrop ? 1 : 0;
    for (int i = 1; i <= n2; ++i) {
        const int var = psi.prefix[i - 1].second;
        for (int sign : {1, -1}) {
            const std::string lit_state = (sign > 0 ? "t_y" : "t_ny") + std::to_string(i);
            Label gamma(M, Delta::finite(-1)), delta(M, Delta::finite(-1));
            for (int j = 0; j < m; ++j) {
                gamma[j] = Delta::omega();
                delta[j] = Delta::omega();
            }
            for (int j = 0; j < m2; ++j) {
                if (!in_clause(psi.clauses[j], sign * var)) continue;
                gamma[m + j] = Delta::finite(-(2 * (n2 - i + 1) + extra));
                delta[m + j] = Delta::omega();
            }
            raw.add_edge("t" + std::to_string(i), lit_state, gamma);
            raw.add_edge(lit_state, "t" + std::to_string(i + 1), delta);
        }
    }
    Label pi(M), pi2(M), rho(M, Delta::finite(-1));
    for (int j = 0; j < M; ++j) {
        const bool reload = j < m;
        const bool last = j == M - 1;
        pi[j] = reload ? Delta::omega() : Delta::finite(last ? -2 : -1);
        pi2[j] = reload ? Delta::omega() : Delta::finite(last ? -1 : -2);
        if (reload) rho[j] = Delta::omega();
    }
    const std::string tail = "t" + std::to_string(n2 + 1);
    raw.add_edge(tail, "p", pi);
    raw.add_edge(tail, "p'", pi2);
    raw.add_edge("p", "p", Label(M, Delta::omega()));
    raw.add_edge("p'", "p'", Label(M, Delta::omega()));
    raw.add_edge("r", "t1", rho);

    std::vector<std::int64_t> xi(M);
    for (int j = 0; j < M; ++j) {
        if (j < m) xi[j] = 2 * n + 1;
        else if (j < m + m2) xi[j] = 2 * n + 2 * n2 + 4;
        else xi[j] = 2 * n + 2 * n2 + 5;
    }
    Game g = validate_game(raw);
    const StateId start = g.state("s1");
    return {std::move(g), start, LoadVector(std::move(xi))};
}

Game random_game(std::uint64_t seed, int states, int d, int l, const RandomGameFlags& flags)
{
    if (states < 1 || d < 1 || l < 0 || flags.max_out_degree < 1) {
        throw GameError(ErrorKind::InvalidVector, "random_game parameters must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto below = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

    for (int attempt = 0; attempt < 1000; ++attempt) {
        RawGame raw;
        raw.dimension = d;
        std::vector<Player> owners(states);
        for (int s = 0; s < states; ++s) {
            owners[s] = flags.one_player || below(2) == 0 ? Player::Box : Player::Diamond;
            raw.add_state("s" + std::to_string(s), owners[s]);
        }
        for (int s = 0; s < states; ++s) {
            std::set<std::pair<int, std::vector<std::int64_t>>> seen;
            const int degree = below(flags.max_out_degree + 1);
            for (int k = 0; k < degree; ++k) {
                const int t = below(states);
                Label label(d);
                std::vector<std::int64_t> key(d);
                for (int i = 0; i < d; ++i) {
                    if (owners[s] == Player::Box && unit(rng) < flags.omega_density) {
                        label[i] = Delta::omega();
                        key[i] = 1;
                    } else {
                        label[i] = Delta::finite(-below(l + 1));
                        key[i] = label[i].value();
                    }
                }
                if (seen.emplace(t, key).second) {
                    raw.add_edge("s" + std::to_string(s), "s" + std::to_string(t), std::move(label));
                }
            }
            if (seen.empty()) {
                raw.add_edge("s" + std::to_string(s), "s" + std::to_string(s), Label(d, Delta::finite(-1)));
            }
        }
        Game g = validate_game(raw);
        if (!flags.decreasing || classify(g).decreasing) return g;
    }
    throw GameError(ErrorKind::ResamplingExhausted, "no decreasing game found after 1000 samples");
}

QbfInstance random_qbf(std::uint64_t seed, int n, int m, bool all_exists, int first_variable)
{
    std::mt19937_64 rng(seed);
    const auto below = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    QbfInstance q;
    for (int i = 0; i < n; ++i) {
        const bool forall = !all_exists && below(2) == 1;
        q.prefix.emplace_back(forall ? Quantifier::Forall : Quantifier::Exists, first_variable + i);
    }
    for (int j = 0; j < m; ++j) {
        const int size = 1 + below(std::min(n, 3));
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < size) {
            const int v = first_variable + below(n);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::sort(vars.begin(), vars.end());
        std::vector<int> clause;
        for (int v : vars) clause.push_back(below(2) ? v : -v);
        q.clauses.push_back(std::move(clause));
    }
    return q;
}

}  // namespace cgame
