#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twystoff {

using Stack = std::uint64_t;

enum class RuleSet : std::uint8_t { Standard, Frozen, HeavyHanded };

std::string_view to_string(RuleSet rules);
/// Accepts "standard", "frozen" and "heavy" (or "heavy-handed").
std::optional<RuleSet> parse_ruleset(std::string_view text);

/// An ordered sequence of stack sizes. The type itself does not enforce
/// canonical form; use normalize() to obtain one.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Stack> stacks) : stacks_(stacks) {}
  explicit Position(std::vector<Stack> stacks) : stacks_(std::move(stacks)) {}

  std::span<const Stack> stacks() const { return stacks_; }
  const std::vector<Stack>& vector() const { return stacks_; }
  std::size_t size() const { return stacks_.size(); }
  bool empty() const { return stacks_.empty(); }
  Stack operator[](std::size_t i) const { return stacks_[i]; }
  Stack front() const { return stacks_.front(); }
  Stack back() const { return stacks_.back(); }

  /// Sum of all stacks. Throws std::overflow_error if it does not fit.
  Stack total() const;
  Position reversed() const;

  /// "4,2,2"; the empty position renders as "()".
  std::string to_string() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Stack> stacks_;
};

struct Move {
  enum class Kind : std::uint8_t { LeftEnd, RightEnd, Pair };

  Kind kind = Kind::LeftEnd;
  std::size_t index = 0;  // first stack of the pair; Pair only
  Stack count = 0;

  static Move left(Stack count) { return {Kind::LeftEnd, 0, count}; }
  static Move right(Stack count) { return {Kind::RightEnd, 0, count}; }
  static Move pair(std::size_t index, Stack count) { return {Kind::Pair, index, count}; }

  /// "L 3", "R 1", "P 0 2" (the play-mode syntax).
  std::string to_string() const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Standard: an odd run of interior zeros merges its neighbours, an even run
/// just disappears, end zeros are dropped. Frozen: only end zeros are dropped.
/// HeavyHanded contracts like Standard.
Position normalize(std::span<const Stack> raw, RuleSet rules);
inline Position normalize(const Position& raw, RuleSet rules) { return normalize(raw.stacks(), rules); }

bool is_canonical(const Position& pos, RuleSet rules);

std::vector<Move> legal_moves(const Position& pos, RuleSet rules);
bool is_legal(const Position& pos, const Move& m, RuleSet rules);

/// Throws IllegalMove unless m is in legal_moves(pos, rules).
Position apply(const Position& pos, const Move& m, RuleSet rules);

/// Calls visit(option) once per legal move (options may repeat). The span is
/// only valid during the call. This is the allocation-light path the solver
/// uses; options() is the deduplicated public view.
void for_each_option(const Position& pos, RuleSet rules,
                     const std::function<void(std::span<const Stack>)>& visit);

/// Deduplicated and sorted.
std::vector<Position> options(const Position& pos, RuleSet rules);

/// The lexicographically smaller of pos and its reversal.
Position canonical_key(const Position& pos);

/// Comma- and/or whitespace-separated nonnegative integers, optionally wrapped
/// in parentheses. The result is raw (not normalized). Throws ParseError.
Position parse_position(std::string_view text);

}  // namespace twystoff
