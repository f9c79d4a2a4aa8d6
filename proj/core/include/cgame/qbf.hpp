#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cgame {

enum class Quantifier { Exists, Forall };

/// Prenex CNF formula. Variables are positive integers; a literal is +v or -v.
struct QbfInstance {
    std::vector<std::pair<Quantifier, int>> prefix;
    std::vector<std::vector<int>> clauses;

    std::size_t num_variables() const { return prefix.size(); }
    /// Position (0-based) of variable v in the prefix, or -1.
    int position(int v) const;
};

/// Checks that clauses are nonempty and non-tautological and that every
/// variable is quantified exactly once. Throws SyntaxError, UnboundVariable,
/// TautologicalClause.
void validate_qbf(const QbfInstance& q);

/// QDIMACS subset: `c` comments, `p cnf <n> <m>`, then `e`/`a` quantifier
/// lines and clause lines, each terminated by 0. Without quantifier lines every
/// variable occurring in a clause is existential.
QbfInstance parse_qbf(std::string_view text);

std::string to_qdimacs(const QbfInstance& q);

/// Adds `offset` to every variable number.
QbfInstance shift_variables(const QbfInstance& q, int offset);

/// Largest variable number in the prefix, 0 for an empty prefix.
int max_variable(const QbfInstance& q);

/// Truth value by exhaustive expansion of the prefix (at most 20 variables).
bool eval_qbf(const QbfInstance& q);

/// Satisfiability of the clauses, ignoring the prefix.
bool satisfiable(const QbfInstance& q);

}  // namespace cgame
