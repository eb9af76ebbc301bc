#pragma once

#include <iosfwd>
#include <string_view>

#include "twystoff/position.hpp"
#include "twystoff/solver.hpp"

namespace twystoff {

/// From an N position, the move to the lexicographically smallest P option;
/// from a P position, the move to the smallest option. Throws NoMoves on the
/// empty position.
Move engine_move(const Solver& solver, const Position& pos, RuleSet rules = RuleSet::Standard);

/// "L k", "R k" or "P i k" with a 0-based pair index. Throws ParseError.
Move parse_move(std::string_view text);

/// Terminal game: the human moves first, the engine answers. Illegal or
/// unreadable input re-prompts. Returns when the game ends or input runs out.
void play(const Solver& solver, Position start, RuleSet rules, std::istream& in, std::ostream& out);

}  // namespace twystoff
