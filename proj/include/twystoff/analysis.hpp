#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twystoff/position.hpp"
#include "twystoff/solver.hpp"

namespace twystoff {

enum class CellClass : std::uint8_t { PalindromeP, NonPalindrome, WythoffPair, SumPair };

std::string_view to_string(CellClass cls);
std::optional<CellClass> parse_cell_class(std::string_view text);

/// Priority: WythoffPair, then SumPair (b >= a and (a, b - a) Wythoff P), then
/// PalindromeP (c == a), else NonPalindrome.
CellClass classify_cell(Stack a, Stack b, Stack c);

struct FCell {
  Stack c = 0;
  CellClass cls = CellClass::NonPalindrome;

  friend bool operator==(const FCell&, const FCell&) = default;
};

/// f(a, b) for 0 <= a <= a_max, 1 <= b <= b_max.
class FTable {
 public:
  FTable() = default;
  FTable(Stack a_max, Stack b_max, RuleSet rules);

  Stack a_max() const { return a_max_; }
  Stack b_max() const { return b_max_; }
  RuleSet rules() const { return rules_; }

  const FCell& at(Stack a, Stack b) const { return cells_[index(a, b)]; }
  FCell& at(Stack a, Stack b) { return cells_[index(a, b)]; }

  friend bool operator==(const FTable&, const FTable&) = default;

 private:
  std::size_t index(Stack a, Stack b) const;

  Stack a_max_ = 0;
  Stack b_max_ = 0;
  RuleSet rules_ = RuleSet::Standard;
  std::vector<FCell> cells_;
};

/// Rows are sharded across `threads` workers sharing the solver's memo.
FTable build_f_table(const Solver& solver, Stack a_max, Stack b_max, RuleSet rules = RuleSet::Standard,
                     unsigned threads = 1);

struct SvgPalette {
  std::string palindrome = "#FFFFFF";
  std::string non_palindrome = "#BBBBBB";
  std::string wythoff_pair = "#4CAF50";
  std::string sum_pair = "#FF9800";
};

/// Header `a,b,c,class`, one row per cell in (b, a) order.
std::string to_csv(const FTable& table);
/// Inverse of to_csv. Throws ParseError.
FTable parse_csv(std::string_view text, RuleSet rules = RuleSet::Standard);
std::string to_svg(const FTable& table, const SvgPalette& palette = {});
/// Plain grid: one line per b, columns a.
std::string to_text(const FTable& table);

/// Entries in {1, 2} and every maximal run of 1's not touching an end has
/// even length. The empty position belongs to S.
bool is_in_s(const Position& pos);
Stack s_sum(const Position& pos);

struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string suite_name, std::string params)
      : suite(std::move(suite_name)), parameters(std::move(params)) {}

  std::string suite;
  std::string parameters;
  bool conjecture = false;  // counterexamples are findings, not failures
  std::uint64_t checked = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
  std::string to_string(std::size_t max_listed = 20) const;
};

namespace suites {

VerificationReport equal_triples(const Solver& solver, Stack bound);
VerificationReport near_palindromes(const Solver& solver, Stack bound);
VerificationReport unique_c_bounds(const Solver& solver, Stack bound);
VerificationReport nonpalindrome_order(const Solver& solver, Stack bound);
VerificationReport wythoff_triples_n(const Solver& solver, Stack bound);

struct PalindromeBands {
  Stack band_a_max = 25;     // a range for both palindrome bands
  Stack sample_width = 25;   // b sampled in (ceil(phi^2 a), ceil(phi^2 a) + width]
  Stack nonpal_a_max = 40;   // a range for the non-palindrome band check
};
VerificationReport palindrome_bands(const Solver& solver, const PalindromeBands& params);

VerificationReport frozen_equivalence(const Solver& solver, Stack bound);
VerificationReport frozen_inequality(const Solver& solver, Stack bound);
VerificationReport heavy_handed_conjecture(const Solver& solver, Stack bound);
VerificationReport four_stack_symmetric(const Solver& solver, Stack bound);
VerificationReport four_stack_1ab1(const Solver& solver, Stack bound);
VerificationReport s_mod3(const Solver& solver, std::size_t max_length);
VerificationReport row_involution(const Solver& solver, Stack bound);
VerificationReport column_cofinite(const Solver& solver, Stack bound);
VerificationReport a002251_column(const Solver& solver, Stack bound);

}  // namespace suites

std::span<const std::string_view> analysis_suite_names();

/// Runs a named suite with a single bound; nullopt for an unknown name.
std::optional<VerificationReport> verify(std::string_view suite, Stack bound, const Solver& solver);

/// All S positions of length 1..max_length, plus the empty position.
std::vector<Position> enumerate_s(std::size_t max_length);

struct Conjecture2Report {
  Stack a = 0;
  Stack b_max = 0;
  Stack c_max = 0;
  bool window_too_small = false;
  std::optional<std::pair<Stack, Stack>> candidate;  // (b0, c0)
  std::vector<std::string> rows;                     // per b: the P set of c > b

  std::string to_string() const;
};

/// Looks for b0 in (a, b_max] whose P completions (a, b0, c, a), b0 < c <= c_max,
/// are exactly the ray c0 <= c <= c_max. A candidate is evidence within the
/// window, nothing more.
Conjecture2Report explore_conjecture2(const Solver& solver, Stack a, Stack b_max, Stack c_max);

}  // namespace twystoff
