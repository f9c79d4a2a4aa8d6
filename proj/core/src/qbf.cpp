#include "cgame/qbf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "cgame/errors.hpp"

namespace cgame {

int QbfInstance::position(int v) const
{
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i].second == v) return static_cast<int>(i);
    return -1;
}

void validate_qbf(const QbfInstance& q)
{
    std::set<int> bound;
    for (auto [quant, v] : q.prefix) {
        if (v <= 0) throw GameError(ErrorKind::SyntaxError, "variable " + std::to_string(v) + " is not positive");
        if (!bound.insert(v).second)
            throw GameError(ErrorKind::SyntaxError, "variable " + std::to_string(v) + " quantified twice");
    }
    for (std::size_t c = 0; c < q.clauses.size(); ++c) {
        const auto& clause = q.clauses[c];
        if (clause.empty()) throw GameError(ErrorKind::SyntaxError, "clause " + std::to_string(c + 1) + " is empty");
        for (int lit : clause) {
            if (lit == 0 || !bound.count(std::abs(lit))) {
                throw GameError(ErrorKind::UnboundVariable, "variable " + std::to_string(std::abs(lit)) + " in clause " +
                                                                std::to_string(c + 1) + " is not quantified");
            }
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
                throw GameError(ErrorKind::TautologicalClause,
                                "clause " + std::to_string(c + 1) + " contains both polarities of variable " +
                                    std::to_string(std::abs(lit)));
            }
        }
    }
}

namespace {

struct Tok {
    std::string_view text;
    int column;
};

std::vector<Tok> split(std::string_view line)
{
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long integer(const Tok& t, int line)
{
    long long v = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || end != t.text.data() + t.text.size()) {
        throw GameError(ErrorKind::SyntaxError, "expected an integer, got '" + std::string(t.text) + "'", line, t.column);
    }
    return v;
}

}  // namespace

QbfInstance parse_qbf(std::string_view text)
{
    QbfInstance q;
    long long declared_vars = -1, declared_clauses = -1;
    bool clauses_started = false;
    std::set<int> quantified;
    int line_no = 0;
    int last_line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto toks = split(line);
        if (toks.empty() || toks[0].text == "c") continue;
        last_line = line_no;

        if (toks[0].text == "p") {
            if (declared_vars >= 0) throw GameError(ErrorKind::SyntaxError, "second problem line", line_no, 1);
            if (toks.size() != 4 || toks[1].text != "cnf")
                throw GameError(ErrorKind::SyntaxError, "expected 'p cnf <variables> <clauses>'", line_no, 1);
            declared_vars = integer(toks[2], line_no);
            declared_clauses = integer(toks[3], line_no);
            if (declared_vars < 0 || declared_clauses < 0 || declared_vars > 1'000'000)
                throw GameError(ErrorKind::SyntaxError, "problem line counts out of range", line_no, toks[2].column);
            continue;
        }
        if (declared_vars < 0) throw GameError(ErrorKind::SyntaxError, "expected 'p cnf' before any content", line_no, 1);

        const bool quant_line = toks[0].text == "e" || toks[0].text == "a";
        if (quant_line && clauses_started)
            throw GameError(ErrorKind::SyntaxError, "quantifier line after the clauses", line_no, 1);
        const std::size_t first = quant_line ? 1 : 0;
        if (toks.size() == first || integer(toks.back(), line_no) != 0)
            throw GameError(ErrorKind::SyntaxError, "line must end with 0", line_no,
                            toks.back().column + static_cast<int>(toks.back().text.size()));

        std::vector<int> values;
        for (std::size_t k = first; k + 1 < toks.size(); ++k) {
            const long long v = integer(toks[k], line_no);
            if (v == 0) throw GameError(ErrorKind::SyntaxError, "0 before the end of the line", line_no, toks[k].column);
            if (std::llabs(v) > declared_vars) {
                throw GameError(ErrorKind::SyntaxError,
                                "variable " + std::to_string(std::llabs(v)) + " exceeds the declared count", line_no,
                                toks[k].column);
            }
            if (quant_line && v < 0)
                throw GameError(ErrorKind::SyntaxError, "negative variable in a quantifier line", line_no, toks[k].column);
            values.push_back(static_cast<int>(v));
        }

        if (quant_line) {
            const Quantifier kind = toks[0].text == "e" ? Quantifier::Exists : Quantifier::Forall;
            for (std::size_t k = 0; k < values.size(); ++k) {
                if (!quantified.insert(values[k]).second) {
                    throw GameError(ErrorKind::SyntaxError, "variable " + std::to_string(values[k]) + " quantified twice",
                                    line_no, toks[k + 1].column);
                }
                q.prefix.emplace_back(kind, values[k]);
            }
            continue;
        }

        clauses_started = true;
        if (values.empty()) throw GameError(ErrorKind::SyntaxError, "empty clause", line_no, toks[0].column);
        std::vector<int> clause;
        for (std::size_t k = 0; k < values.size(); ++k) {
            const int lit = values[k];
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
                throw GameError(ErrorKind::TautologicalClause,
                                "clause contains both polarities of variable " + std::to_string(std::abs(lit)), line_no,
                                toks[k].column);
            }
            if (!q.prefix.empty() && !quantified.count(std::abs(lit))) {
                throw GameError(ErrorKind::UnboundVariable,
                                "variable " + std::to_string(std::abs(lit)) + " is not quantified", line_no,
                                toks[k].column);
            }
            if (std::find(clause.begin(), clause.end(), lit) == clause.end()) clause.push_back(lit);
        }
        q.clauses.push_back(std::move(clause));
    }
    if (declared_vars < 0) throw GameError(ErrorKind::SyntaxError, "missing 'p cnf' line", last_line, 1);
    if (static_cast<long long>(q.clauses.size()) != declared_clauses) {
        throw GameError(ErrorKind::SyntaxError,
                        "expected " + std::to_string(declared_clauses) + " clauses, found " +
                            std::to_string(q.clauses.size()),
                        last_line, 1);
    }
    if (q.prefix.empty()) {
        std::set<int> used;
        for (const auto& c : q.clauses)
            for (int lit : c) used.insert(std::abs(lit));
        for (int v : used) q.prefix.emplace_back(Quantifier::Exists, v);
    }
    return q;
}

std::string to_qdimacs(const QbfInstance& q)
{
    std::string out = "p cnf " + std::to_string(max_variable(q)) + " " + std::to_string(q.clauses.size()) + "\n";
    for (std::size_t i = 0; i < q.prefix.size();) {
        const Quantifier kind = q.prefix[i].first;
        out += kind == Quantifier::Exists ? "e" : "a";
        for (; i < q.prefix.size() && q.prefix[i].first == kind; ++i) out += " " + std::to_string(q.prefix[i].second);
        out += " 0\n";
    }
    for (const auto& c : q.clauses) {
        for (int lit : c) out += std::to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

QbfInstance shift_variables(const QbfInstance& q, int offset)
{
    QbfInstance out = q;
    for (auto& [quant, v] : out.prefix) v += offset;
    for (auto& c : out.clauses)
        for (int& lit : c) lit += lit > 0 ? offset : -offset;
    return out;
}

int max_variable(const QbfInstance& q)
{
    int best = 0;
    for (auto [quant, v] : q.prefix) best = std::max(best, v);
    return best;
}

namespace {

bool holds(const QbfInstance& q, const std::vector<char>& value)
{
    for (const auto& clause : q.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const int pos = q.position(std::abs(lit));
            if (value[pos] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool expand(const QbfInstance& q, std::size_t depth, std::vector<char>& value, bool ignore_prefix)
{
    if (depth == q.prefix.size()) return holds(q, value);
    const bool forall = !ignore_prefix && q.prefix[depth].first == Quantifier::Forall;
    for (char b : {0, 1}) {
        value[depth] = b;
        const bool r = expand(q, depth + 1, value, ignore_prefix);
        if (forall && !r) return false;
        if (!forall && r) return true;
    }
    return forall;
}

}  // namespace

bool eval_qbf(const QbfInstance& q)
{
    validate_qbf(q);
    if (q.prefix.size() > 20) throw GameError(ErrorKind::TooManyVariables, "eval_qbf supports at most 20 variables");
    std::vector<char> value(q.prefix.size(), 0);
    return expand(q, 0, value, false);
}

bool satisfiable(const QbfInstance& q)
{
    validate_qbf(q);
    if (q.prefix.size() > 20) throw GameError(ErrorKind::TooManyVariables, "satisfiable supports at most 20 variables");
    std::vector<char> value(q.prefix.size(), 0);
    return expand(q, 0, value, true);
}

}  // namespace cgame
