#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgame/game.hpp"
#include "cgame/qbf.hpp"

namespace cgame {

/// Small reference games F1..F10 used across the test suites and by
/// `crosscheck --suite fixtures`. F9 and F10 are gadget outputs.
Game fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// The formulas behind F9 (QBF) and F10 (phi, psi), as QDIMACS text.
extern const char* const kQbf3Text;
extern const char* const kSatUnsatPhiText;
extern const char* const kSatUnsatPsiText;

}  // namespace cgame
