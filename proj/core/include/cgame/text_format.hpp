#pragma once

#include <string>
#include <string_view>

#include "cgame/game.hpp"

namespace cgame {

/// Line-oriented game format:
///
///     dimension 2
///     state s box
///     state q diamond
///     edge s q -1,w
///
/// `w` is a reload, `#` starts a comment. Errors carry line and column.
Game parse_game(std::string_view text);
RawGame parse_raw_game(std::string_view text);

/// Canonical text: states in declaration order, edges in canonical order.
std::string serialize_game(const Game& g);

}  // namespace cgame
