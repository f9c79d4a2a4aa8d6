#include "cgame/fixtures.hpp"

#include "cgame/gadgets.hpp"
#include "cgame/text_format.hpp"

namespace cgame {

const char* const kQbf3Text = "p cnf 3 3\ne 1 0\na 2 0\ne 3 0\n1 -2 3 0\n-1 2 3 0\n-1 -2 0\n";
const char* const kSatUnsatPhiText = "p cnf 2 1\n1 -2 0\n";
const char* const kSatUnsatPsiText = "p cnf 2 2\n1 2 0\n-1 -2 0\n";

namespace {

struct Text {
    const char* name;
    const char* body;
};

const Text kTexts[] = {
    {"F1", "dimension 1\nstate s box\nedge s s w\n"},
    {"F2", "dimension 1\nstate s box\nedge s s -1\n"},
    {"F3", "dimension 1\nstate s box\nstate t box\nedge s t -3\nedge t t w\n"},
    {"F4", "dimension 1\nstate s box\nstate t box\nstate u box\nedge s t -1\nedge t u w\nedge u t -5\n"},
    {"F5", "dimension 1\nstate q diamond\nstate a box\nstate b box\n"
           "edge q a -1\nedge q b -2\nedge a a w\nedge b b w\n"},
    {"F6", "dimension 2\nstate s box\nstate r box\nedge s r -1,-2\nedge s r -2,-1\nedge r r 0,0\n"},
    {"F7", "dimension 1\nstate s diamond\nstate r box\nedge s r -1\nedge s r -3\nedge r r 0\n"},
    {"F8", "dimension 2\nstate s box\nstate a box\nstate b box\nstate c box\n"
           "edge s a -1,-2\nedge a b w,-1\nedge b c -1,w\nedge c c 0,0\n"},
};

}  // namespace

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (int k = 1; k <= 10; ++k) out.push_back("F" + std::to_string(k));
    return out;
}

Game fixture(std::string_view name)
{
    for (const auto& t : kTexts)
        if (name == t.name) return parse_game(t.body);
    if (name == "F9") return gen_qbf(parse_qbf(kQbf3Text)).game;
    if (name == "F10") {
        const QbfInstance phi = parse_qbf(kSatUnsatPhiText);
        const QbfInstance psi = shift_variables(parse_qbf(kSatUnsatPsiText), max_variable(phi));
        return gen_satunsat(phi, psi).game;
    }
    throw GameError(ErrorKind::UnknownState, "no fixture named '" + std::string(name) + "'");
}

}  // namespace cgame
