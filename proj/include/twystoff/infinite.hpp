#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twystoff/analysis.hpp"
#include "twystoff/position.hpp"
#include "twystoff/solver.hpp"

namespace twystoff {

/// A stack size or the first infinite ordinal. Finite sizes order below
/// infinity.
class ExtStack {
 public:
  constexpr ExtStack() = default;
  constexpr ExtStack(Stack v) : value_(v) {}  // NOLINT: finite sizes convert implicitly

  static constexpr ExtStack infinity() {
    ExtStack s;
    s.infinite_ = true;
    return s;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Finite value; 0 for infinity.
  constexpr Stack value() const { return value_; }

  friend ExtStack operator+(ExtStack x, ExtStack y);
  friend constexpr auto operator<=>(const ExtStack&, const ExtStack&) = default;
  friend constexpr bool operator==(const ExtStack&, const ExtStack&) = default;

  std::string to_string() const;

 private:
  bool infinite_ = false;
  Stack value_ = 0;
};

inline constexpr ExtStack kInf = ExtStack::infinity();

class ExtPosition {
 public:
  ExtPosition() = default;
  ExtPosition(std::initializer_list<ExtStack> stacks) : stacks_(stacks) {}
  explicit ExtPosition(std::vector<ExtStack> stacks) : stacks_(std::move(stacks)) {}
  explicit ExtPosition(const Position& finite);

  std::span<const ExtStack> stacks() const { return stacks_; }
  std::size_t size() const { return stacks_.size(); }
  bool empty() const { return stacks_.empty(); }
  const ExtStack& operator[](std::size_t i) const { return stacks_[i]; }

  std::size_t infinity_count() const;
  bool all_finite() const { return infinity_count() == 0; }
  /// Requires all_finite().
  Position to_finite() const;
  ExtPosition reversed() const;
  /// Finite stacks in [first, last).
  Position finite_slice(std::size_t first, std::size_t last) const;

  /// "3,2,inf,1"; the empty position renders as "()".
  std::string to_string() const;

  friend auto operator<=>(const ExtPosition&, const ExtPosition&) = default;
  friend bool operator==(const ExtPosition&, const ExtPosition&) = default;

 private:
  std::vector<ExtStack> stacks_;
};

/// Contraction with infinity-absorbing addition; end zeros dropped.
ExtPosition ext_normalize(std::span<const ExtStack> raw);
inline ExtPosition ext_normalize(const ExtPosition& raw) { return ext_normalize(raw.stacks()); }

/// Like parse_position, also accepting `inf` and `∞`. Result is raw.
ExtPosition parse_ext_position(std::string_view text);

enum class PatternKind : std::uint8_t {
  AllFinite,
  EndInfinity,             // one infinity at an end, finite rest nonempty
  SingleInteriorInfinity,  // (alpha, inf, beta)
  DoubleEndInfinity,       // (inf, alpha, inf)
  AllInfinity,             // inf^k
  Other
};

struct PatternClass {
  PatternKind kind = PatternKind::Other;
  std::size_t infinities = 0;

  friend bool operator==(const PatternClass&, const PatternClass&) = default;
};

std::string_view to_string(PatternKind kind);
PatternClass classify_pattern(const ExtPosition& pos);

struct ExtOptions {
  std::vector<ExtPosition> positions;  // sorted, deduplicated
  /// True when some infinite stack can be reduced, so `positions` samples an
  /// infinite option set (reductions to values <= the given limit only).
  bool unbounded = false;
};

/// Options of pos. Infinite stacks are reduced only to values in
/// [0, reduction_limit]; with no limit, only moves that leave every infinite
/// stack infinite are listed.
ExtOptions ext_options(const ExtPosition& pos, std::optional<Stack> reduction_limit = std::nullopt);

struct DecisionResult {
  enum class Kind : std::uint8_t { P, N, Undecided };

  Kind kind = Kind::Undecided;
  std::optional<ExtPosition> certificate;  // N only: a P option
  std::string reason;

  static DecisionResult p(std::string reason) { return {Kind::P, std::nullopt, std::move(reason)}; }
  static DecisionResult n(ExtPosition cert, std::string reason) { return {Kind::N, std::move(cert), std::move(reason)}; }
  static DecisionResult undecided(std::string reason) { return {Kind::Undecided, std::nullopt, std::move(reason)}; }

  /// `P`, `N move-to: <cert>` or `UNDECIDED <reason>`.
  std::string to_string() const;
};

/// Decision procedures for positions containing infinite stacks.
///
/// Component games are solved by memoized search; the memo is shared between
/// copies and is safe for concurrent use.
class InfiniteSolver {
 public:
  InfiniteSolver();
  explicit InfiniteSolver(Solver finite);

  const Solver& finite() const { return finite_; }

  DecisionResult decide(const ExtPosition& pos) const;

  /// Outcome of (alpha, inf, beta); alpha, beta nonempty, finite, canonical.
  /// Emptying either side is a losing move.
  Outcome diminished_sum_outcome(const Position& alpha, const Position& beta) const;

  /// Outcome of (inf, alpha, inf); emptying alpha is a losing move.
  Outcome modified_misere_outcome(const Position& alpha) const;

  /// Least b >= 1 with (alpha, inf, b) P. The cap starts at 3 total(alpha) + 4
  /// and doubles kForeclosedDoublings times before CapExceeded.
  Stack foreclosed_value(const Position& alpha) const;

  /// Checks that (a, inf, 1, 1, inf, a) is P by walking every option to a P
  /// certificate. Returns P or throws ClaimFailed.
  Outcome claim_check(Stack a) const;

  /// Non-emptying options of alpha played with infinity on its right.
  std::vector<Position> left_component_options(const Position& alpha) const;
  /// Non-emptying options of alpha inside (inf, alpha, inf).
  std::vector<Position> inner_options(const Position& alpha) const;

  static constexpr unsigned kForeclosedDoublings = 4;

 private:
  struct Memo;

  bool sum_is_p(const Position& left, const Position& right_reversed) const;
  bool inner_is_p(const Position& alpha) const;
  std::optional<DecisionResult> decide_registered(const ExtPosition& pos) const;

  Solver finite_;
  std::shared_ptr<Memo> memo_;
};

namespace infinite_suites {

VerificationReport outer_infinities(const InfiniteSolver& solver, Stack bound);
VerificationReport outer_corollary(const InfiniteSolver& solver, Stack bound);
VerificationReport six_infinities(const InfiniteSolver& solver, Stack bound);
VerificationReport triple_infinity(const InfiniteSolver& solver, Stack bound);
VerificationReport foreclosed_iff(const InfiniteSolver& solver, Stack bound);

}  // namespace infinite_suites

std::span<const std::string_view> infinite_suite_names();
std::optional<VerificationReport> verify_infinite(std::string_view suite, Stack bound, const InfiniteSolver& solver);

/// All compositions (sequences of positive integers) with total in [1, max_total].
std::vector<Position> compositions_up_to(Stack max_total);

struct SevenReport {
  Stack budget = 0;
  std::size_t node_limit = 0;
  std::size_t positions_explored = 0;
  bool node_limit_hit = false;
  /// Options of inf^7 proven P: each one is an N certificate for inf^7.
  std::vector<ExtPosition> candidates;
  /// Every N decision reached during the search with its P certificate.
  std::vector<std::pair<ExtPosition, ExtPosition>> n_certificates;
  std::size_t options_examined = 0;
  std::size_t options_decided = 0;
  DecisionResult verdict;

  std::string to_string() const;
};

/// Bounded search for a P option of inf^7, reducing infinite stacks to values
/// <= budget. Proves N only through certificates; proves P only where the
/// option set is finite. Anything else stays undecided.
SevenReport explore_seven(const InfiniteSolver& solver, Stack budget, std::size_t node_limit = 200000);

/// The bounded prover behind explore_seven, exposed for consistency checks.
/// Returns P, N (with certificate) or Undecided.
DecisionResult bounded_prove(const InfiniteSolver& solver, const ExtPosition& pos, Stack budget,
                             std::size_t node_limit = 200000);

}  // namespace twystoff
