#include "twystoff/engine.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "twystoff/errors.hpp"

namespace twystoff {

Move engine_move(const Solver& solver, const Position& pos, RuleSet rules) {
  const auto moves = legal_moves(pos, rules);
  if (moves.empty()) throw NoMoves("no moves from " + pos.to_string());
  std::optional<std::pair<Position, Move>> best_p;
  std::optional<std::pair<Position, Move>> best_any;
  for (const Move& m : moves) {
    Position next = apply(pos, m, rules);
    if (!best_any || next < best_any->first) best_any.emplace(next, m);
    if (solver.outcome(next, rules) == Outcome::P && (!best_p || next < best_p->first)) best_p.emplace(next, m);
  }
  return best_p ? best_p->second : best_any->second;
}

Move parse_move(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string kind;
  is >> kind;
  auto number = [&](const char* what) {
    std::string token;
    if (!(is >> token)) throw ParseError(std::string("missing ") + what);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) throw ParseError("bad number '" + token + "'");
    return v;
  };
  Move m;
  if (kind == "L" || kind == "l") {
    m = Move::left(number("count"));
  } else if (kind == "R" || kind == "r") {
    m = Move::right(number("count"));
  } else if (kind == "P" || kind == "p") {
    const auto index = number("pair index");
    m = Move::pair(index, number("count"));
  } else {
    throw ParseError("expected 'L k', 'R k' or 'P i k'");
  }
  std::string extra;
  if (is >> extra) throw ParseError("unexpected '" + extra + "'");
  return m;
}

void play(const Solver& solver, Position start, RuleSet rules, std::istream& in, std::ostream& out) {
  Position pos = normalize(start, rules);
  out << "position: " << pos.to_string() << '\n';
  while (true) {
    if (pos.empty()) {
      out << "no moves left: you lose\n";
      return;
    }
    out << "your move> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\nbye\n";
      return;
    }
    if (line == "q" || line == "quit") return;
    try {
      pos = apply(pos, parse_move(line), rules);
    } catch (const Error& e) {
      out << "illegal: " << e.what() << '\n';
      continue;
    }
    out << "position: " << pos.to_string() << '\n';
    if (pos.empty()) {
      out << "no moves left: you win\n";
      return;
    }
    const Move reply = engine_move(solver, pos, rules);
    pos = apply(pos, reply, rules);
    out << "engine: " << reply.to_string() << '\n' << "position: " << pos.to_string() << '\n';
  }
}

}  // namespace twystoff
