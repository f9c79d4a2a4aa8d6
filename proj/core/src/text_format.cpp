#include "cgame/text_format.hpp"

#include <charconv>
#include <vector>

namespace cgame {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
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

[[noreturn]] void syntax(int line, int column, const std::string& msg)
{
    throw GameError(ErrorKind::SyntaxError, msg, line, column);
}

constexpr std::int64_t kMinDelta = -1'000'000'000;
constexpr int kMaxDimension = 32;

Label parse_label(const Token& tok, int line)
{
    Label label;
    std::size_t pos = 0;
    const std::string_view s = tok.text;
    for (;;) {
        const std::size_t comma = s.find(',', pos);
        const std::string_view part = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const int col = tok.column + static_cast<int>(pos);
        if (part.empty()) syntax(line, col, "expected a delta ('w' or an integer <= 0)");
        if (part == "w") {
            label.push_back(Delta::omega());
        } else {
            std::int64_t v = 0;
            const char* first = part.data();
            if (*first == '+') ++first;
            auto [end, ec] = std::from_chars(first, part.data() + part.size(), v);
            if (ec != std::errc() || end != part.data() + part.size() || first == part.data() + part.size()) {
                syntax(line, col, "expected a delta ('w' or an integer <= 0), got '" + std::string(part) + "'");
            }
            if (v > 0) {
                throw GameError(ErrorKind::PositiveFiniteDelta, "delta " + std::string(part) + " is positive", line, col);
            }
            if (v < kMinDelta) syntax(line, col, "delta " + std::string(part) + " is out of range");
            label.push_back(Delta::finite(v));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return label;
}

}  // namespace

RawGame parse_raw_game(std::string_view text)
{
    RawGame raw;
    int dimension_line = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = tokenize(line);
        if (toks.empty()) continue;

        const std::string_view kw = toks[0].text;
        if (dimension_line == 0) {
            if (kw != "dimension") syntax(line_no, toks[0].column, "expected 'dimension <d>' as the first declaration");
            if (toks.size() != 2) syntax(line_no, toks.size() < 2 ? static_cast<int>(line.size()) + 1 : toks[2].column,
                                         "expected 'dimension <d>'");
            int d = 0;
            const auto t = toks[1].text;
            auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
            if (ec != std::errc() || end != t.data() + t.size()) {
                syntax(line_no, toks[1].column, "expected a positive integer dimension");
            }
            if (d < 1 || d > kMaxDimension) {
                throw GameError(ErrorKind::DimensionMismatch,
                                "dimension must be between 1 and " + std::to_string(kMaxDimension), line_no,
                                toks[1].column);
            }
            raw.dimension = d;
            dimension_line = line_no;
        } else if (kw == "dimension") {
            syntax(line_no, toks[0].column, "dimension declared twice");
        } else if (kw == "state") {
            if (toks.size() != 3) {
                syntax(line_no, toks.size() < 3 ? static_cast<int>(line.size()) + 1 : toks[3].column,
                       "expected 'state <name> box|diamond'");
            }
            Player owner;
            if (toks[2].text == "box") owner = Player::Box;
            else if (toks[2].text == "diamond") owner = Player::Diamond;
            else syntax(line_no, toks[2].column, "expected 'box' or 'diamond'");
            raw.add_state(std::string(toks[1].text), owner, line_no);
        } else if (kw == "edge") {
            if (toks.size() != 4) {
                syntax(line_no, toks.size() < 4 ? static_cast<int>(line.size()) + 1 : toks[4].column,
                       "expected 'edge <src> <dst> <v1,...,vd>'");
            }
            raw.add_edge(std::string(toks[1].text), std::string(toks[2].text), parse_label(toks[3], line_no), line_no);
        } else {
            syntax(line_no, toks[0].column, "expected 'state' or 'edge', got '" + std::string(kw) + "'");
        }
    }
    if (dimension_line == 0) syntax(std::max(line_no, 1), 1, "missing 'dimension <d>' declaration");
    if (raw.states.empty()) throw GameError(ErrorKind::EmptyGame, "game declares no states", dimension_line, 1);
    return raw;
}

Game parse_game(std::string_view text) { return validate_game(parse_raw_game(text)); }

std::string serialize_game(const Game& g)
{
    std::string out = "dimension " + std::to_string(g.dimension()) + "\n";
    for (StateId s = 0; s < g.num_states(); ++s) {
        out += "state " + g.name(s) + (g.owner(s) == Player::Box ? " box\n" : " diamond\n");
    }
    for (const Edge& e : g.edges()) {
        out += "edge " + g.name(e.source) + " " + g.name(e.target) + " " + to_string(e.label) + "\n";
    }
    return out;
}

}  // namespace cgame
