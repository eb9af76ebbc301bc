#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "twystoff/memo.hpp"
#include "twystoff/position.hpp"

namespace twystoff {

using GrundyValue = std::uint64_t;

/// Memoized exact solver for finite positions.
///
/// Results are cached in a shared MemoTable under (canonical_key, rules), so a
/// Solver is cheap to copy and several threads may query the same instance.
/// The search runs on an explicit work stack; position depth is bounded only
/// by memory.
class Solver {
 public:
  Solver() : memo_(std::make_shared<MemoTable>()) {}
  explicit Solver(std::shared_ptr<MemoTable> memo) : memo_(std::move(memo)) {}

  /// pos must be canonical for rules (std::invalid_argument otherwise).
  Outcome outcome(const Position& pos, RuleSet rules = RuleSet::Standard) const;
  GrundyValue grundy(const Position& pos, RuleSet rules = RuleSet::Standard) const;

  /// The unique c with (a, b, c) a P position, by ascending search.
  ///
  /// Requires b > 0. Throws BoundViolation if no c exists up to
  /// a + b + min(a, b) + 1 (2b + 1 when a = 0), or if a > 0 and the found c
  /// breaks c < a + b.
  Stack unique_c(Stack a, Stack b, RuleSet rules = RuleSet::Standard) const;

  /// The unique last stack x >= 0 with grundy(prefix ++ (x)) == g.
  ///
  /// The cap starts at sum(prefix) + min(prefix) + g + 2 and doubles up to
  /// 2^20; past that, SearchCapExceeded.
  Stack unique_last_for_grundy(std::span<const Stack> prefix, GrundyValue g,
                               RuleSet rules = RuleSet::Standard) const;

  MemoTable& memo() const { return *memo_; }
  const std::shared_ptr<MemoTable>& memo_ptr() const { return memo_; }

  static constexpr Stack kGrundySearchLimit = Stack{1} << 20;

 private:
  std::shared_ptr<MemoTable> memo_;
};

/// Position built from three stack sizes and normalized under rules.
Position triple(Stack a, Stack b, Stack c, RuleSet rules = RuleSet::Standard);

}  // namespace twystoff
