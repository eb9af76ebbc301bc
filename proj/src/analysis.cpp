#include "twystoff/analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twystoff/beatty.hpp"
#include "twystoff/errors.hpp"

namespace twystoff {

using beatty::ceil_over_phi;
using beatty::ceil_phi;
using beatty::ceil_phi2;
using beatty::floor_over_phi;
using beatty::is_wythoff_p;

namespace {

std::string tuple_string(std::initializer_list<Stack> xs) {
  std::string s = "(";
  bool first = true;
  for (Stack x : xs) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::string bound_param(Stack bound) { return "bound=" + std::to_string(bound); }

bool is_p(const Solver& solver, std::initializer_list<Stack> raw, RuleSet rules = RuleSet::Standard) {
  std::vector<Stack> v(raw);
  return solver.outcome(normalize(v, rules), rules) == Outcome::P;
}

// Every c in [0, limit] with (a, b, c) P, where limit is the pigeonhole bound
// a + b + min(a, b) + 1, or the Wythoff bound 2b + 1 when a = 0.
std::vector<Stack> p_completions(const Solver& solver, Stack a, Stack b, RuleSet rules) {
  std::vector<Stack> found;
  const Stack limit = a > 0 ? a + b + std::min(a, b) + 1 : 2 * b + 1;
  for (Stack c = 0; c <= limit; ++c)
    if (solver.outcome(triple(a, b, c, rules), rules) == Outcome::P) found.push_back(c);
  return found;
}

}  // namespace

std::string_view to_string(CellClass cls) {
  switch (cls) {
    case CellClass::PalindromeP:
      return "palindrome";
    case CellClass::NonPalindrome:
      return "non_palindrome";
    case CellClass::WythoffPair:
      return "wythoff_pair";
    case CellClass::SumPair:
      return "sum_pair";
  }
  return "?";
}

std::optional<CellClass> parse_cell_class(std::string_view text) {
  for (CellClass c : {CellClass::PalindromeP, CellClass::NonPalindrome, CellClass::WythoffPair, CellClass::SumPair})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

CellClass classify_cell(Stack a, Stack b, Stack c) {
  if (is_wythoff_p(a, b)) return CellClass::WythoffPair;
  if (b >= a && is_wythoff_p(a, b - a)) return CellClass::SumPair;
  if (c == a) return CellClass::PalindromeP;
  return CellClass::NonPalindrome;
}

FTable::FTable(Stack a_max, Stack b_max, RuleSet rules)
    : a_max_(a_max), b_max_(b_max), rules_(rules), cells_((a_max + 1) * b_max) {
  if (b_max == 0) throw std::invalid_argument("f-table needs b_max >= 1");
}

std::size_t FTable::index(Stack a, Stack b) const {
  if (a > a_max_ || b == 0 || b > b_max_)
    throw std::out_of_range("f-table cell (" + std::to_string(a) + "," + std::to_string(b) + ") outside grid");
  return static_cast<std::size_t>((b - 1) * (a_max_ + 1) + a);
}

FTable build_f_table(const Solver& solver, Stack a_max, Stack b_max, RuleSet rules, unsigned threads) {
  FTable table(a_max, b_max, rules);
  auto fill_row = [&](Stack b) {
    for (Stack a = 0; a <= a_max; ++a) {
      const Stack c = solver.unique_c(a, b, rules);
      table.at(a, b) = {c, classify_cell(a, b, c)};
    }
  };
  if (threads <= 1) {
    for (Stack b = 1; b <= b_max; ++b) fill_row(b);
    return table;
  }
  std::atomic<Stack> next_row{1};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (Stack b = next_row++; b <= b_max; b = next_row++) {
        try {
          fill_row(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
  return table;
}

bool is_in_s(const Position& pos) {
  const std::size_t n = pos.size();
  std::size_t i = 0;
  while (i < n) {
    if (pos[i] != 1 && pos[i] != 2) return false;
    if (pos[i] == 2) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && pos[j] == 1) ++j;
    const bool interior = i > 0 && j < n;
    if (interior && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

Stack s_sum(const Position& pos) { return pos.total(); }

std::vector<Position> enumerate_s(std::size_t max_length) {
  std::vector<Position> out{Position{}};
  std::vector<Stack> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) {
      Position p(cur);
      if (is_in_s(p)) out.push_back(std::move(p));
    }
    if (cur.size() == max_length) return;
    for (Stack v : {Stack{1}, Stack{2}}) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::string VerificationReport::to_string(std::size_t max_listed) const {
  std::ostringstream os;
  os << "suite " << suite << " [" << parameters << "]: ";
  if (passed())
    os << "PASS";
  else
    os << (conjecture ? "FINDINGS" : "FAIL");
  os << " (" << checked << " checks";
  if (!counterexamples.empty()) os << ", " << counterexamples.size() << " counterexamples";
  os << ")\n";
  for (std::size_t i = 0; i < counterexamples.size() && i < max_listed; ++i)
    os << "  counterexample: " << counterexamples[i] << '\n';
  if (counterexamples.size() > max_listed)
    os << "  ... " << counterexamples.size() - max_listed << " more\n";
  for (const std::string& note : notes) os << "  note: " << note << '\n';
  return os.str();
}

namespace suites {

VerificationReport equal_triples(const Solver& solver, Stack bound) {
  VerificationReport r{"equal_triples", bound_param(bound)};
  for (Stack a = 0; a <= bound; ++a, ++r.checked)
    if (!is_p(solver, {a, a, a})) r.counterexamples.push_back(tuple_string({a, a, a}) + " is N");
  return r;
}

VerificationReport near_palindromes(const Solver& solver, Stack bound) {
  VerificationReport r{"near_palindromes", bound_param(bound)};
  for (Stack a = 3; a <= bound; ++a, ++r.checked)
    if (!is_p(solver, {a, a + 1, a})) r.counterexamples.push_back(tuple_string({a, a + 1, a}) + " is N");
  for (Stack a : {Stack{0}, Stack{1}, Stack{2}}) {
    ++r.checked;
    if (is_p(solver, {a, a + 1, a})) r.counterexamples.push_back(tuple_string({a, a + 1, a}) + " is P");
  }
  return r;
}

VerificationReport unique_c_bounds(const Solver& solver, Stack bound) {
  VerificationReport r{"unique_c_bounds", bound_param(bound)};
  std::size_t above_pigeonhole = 0;
  for (Stack a = 0; a <= bound; ++a) {
    for (Stack b = 1; b <= bound; ++b, ++r.checked) {
      const auto cs = p_completions(solver, a, b, RuleSet::Standard);
      if (cs.size() != 1) {
        r.counterexamples.push_back(tuple_string({a, b}) + " has " + std::to_string(cs.size()) +
                                    " P completions within the search bound");
        continue;
      }
      if (cs.front() > a + b + std::min(a, b) + 1) {
        ++above_pigeonhole;
        r.counterexamples.push_back(tuple_string({a, b, cs.front()}) + " is P with c > a + b + min(a, b) + 1");
      }
      if (a > 0 && cs.front() >= a + b)
        r.counterexamples.push_back(tuple_string({a, b, cs.front()}) + " is P with c >= a + b");
    }
  }
  if (above_pigeonhole > 0)
    r.notes.push_back(std::to_string(above_pigeonhole) +
                      " completions exceed a + b + min(a, b) + 1; the bound is proven for a > 0 only, and at a = 0"
                      " the completion is the Wythoff partner of b");
  return r;
}

VerificationReport nonpalindrome_order(const Solver& solver, Stack bound) {
  VerificationReport r{"nonpalindrome_order", bound_param(bound)};
  for (Stack a = 0; a <= bound; ++a) {
    for (Stack b = 1; b <= bound; ++b, ++r.checked) {
      const Stack c = solver.unique_c(a, b);
      if (c != a && a < c && !(a < b)) r.counterexamples.push_back(tuple_string({a, b, c}) + " has a < c but b <= a");
    }
  }
  return r;
}

VerificationReport wythoff_triples_n(const Solver& solver, Stack bound) {
  VerificationReport r{"wythoff_triples_N", bound_param(bound)};
  for (Stack a = 1; a <= bound; ++a) {
    const Stack b1 = ceil_phi(a);
    ++r.checked;
    if (is_p(solver, {a, b1, a})) r.counterexamples.push_back(tuple_string({a, b1, a}) + " is P");
    if (beatty::is_lower_wythoff(a)) {
      const Stack b2 = ceil_phi2(a);
      ++r.checked;
      if (is_p(solver, {a, b2, a})) r.counterexamples.push_back(tuple_string({a, b2, a}) + " is P (a lower)");
    } else {
      const Stack b3 = floor_over_phi(a);
      ++r.checked;
      if (is_p(solver, {a, b3, a})) r.counterexamples.push_back(tuple_string({a, b3, a}) + " is P (a upper)");
    }
  }
  return r;
}

VerificationReport palindrome_bands(const Solver& solver, const PalindromeBands& params) {
  VerificationReport r{"palindrome_bands", "band_a_max=" + std::to_string(params.band_a_max) +
                                               " sample_width=" + std::to_string(params.sample_width) +
                                               " nonpal_a_max=" + std::to_string(params.nonpal_a_max)};
  std::size_t wythoff_cell_exceptions = 0;
  auto note_wythoff = [&](Stack a, Stack b) {
    if (is_wythoff_p(a, b)) ++wythoff_cell_exceptions;
  };

  for (Stack a = 1; a <= params.band_a_max; ++a) {
    const Stack hi = ceil_phi2(a);
    for (Stack b = hi + 1; b <= hi + params.sample_width; ++b, ++r.checked)
      if (!is_p(solver, {a, b, a})) r.counterexamples.push_back(tuple_string({a, b, a}) + " is N above ceil(phi^2 a)");
    const Stack lo = ceil_over_phi(a);
    for (Stack b = 1; b < lo; ++b, ++r.checked) {
      if (!is_p(solver, {a, b, a})) {
        r.counterexamples.push_back(tuple_string({a, b, a}) + " is N below ceil(a/phi)");
        note_wythoff(a, b);
      }
    }
  }

  for (Stack a = 1; a <= params.nonpal_a_max; ++a) {
    const Stack lo = ceil_over_phi(a);
    const Stack hi = ceil_phi2(a);
    for (Stack b = 1; b <= hi + params.sample_width; ++b, ++r.checked) {
      const Stack c = solver.unique_c(a, b);
      if (c != a && (b < lo || b > hi)) {
        r.counterexamples.push_back(tuple_string({a, b, c}) + " is a non-palindrome P outside [" + std::to_string(lo) +
                                    "," + std::to_string(hi) + "]");
        note_wythoff(a, b);
      }
    }
  }

  // Sharpness: the N palindromes built from Wythoff pairs, located against the
  // two boundaries.
  std::size_t lower_witnesses = 0;
  for (Stack a = 1; a <= params.band_a_max; ++a) {
    ++r.checked;
    if (beatty::is_lower_wythoff(a)) {
      const Stack b = ceil_phi2(a);
      if (is_p(solver, {a, b, a})) r.counterexamples.push_back(tuple_string({a, b, a}) + " on the upper boundary is P");
    } else {
      const Stack b = floor_over_phi(a);
      if (is_p(solver, {a, b, a})) r.counterexamples.push_back(tuple_string({a, b, a}) + " is P (a upper)");
      ++lower_witnesses;
    }
  }
  if (lower_witnesses > 0)
    r.notes.push_back(std::to_string(lower_witnesses) +
                      " upper-Wythoff witnesses (a, floor(a/phi), a) are N; floor(a/phi) = ceil(a/phi) - 1 lies inside "
                      "the lower band, one below its boundary");

  if (!r.counterexamples.empty())
    r.notes.push_back(std::to_string(wythoff_cell_exceptions) + " of " + std::to_string(r.counterexamples.size()) +
                      " counterexamples are Wythoff-pair cells (a, floor(a/phi)) with a an upper Wythoff number");
  return r;
}

VerificationReport frozen_equivalence(const Solver& solver, Stack bound) {
  VerificationReport r{"frozen_equivalence", bound_param(bound)};
  for (Stack a = 0; a <= bound; ++a)
    for (Stack b = 0; b <= bound; ++b)
      for (Stack c = 0; c <= bound; ++c, ++r.checked) {
        const bool standard_p = is_p(solver, {a, b, c}, RuleSet::Standard);
        const bool frozen_p = is_p(solver, {a, b, c}, RuleSet::Frozen);
        const bool exceptional = b == 0 && a == c && a > 0;
        if (exceptional) {
          if (standard_p || !frozen_p)
            r.counterexamples.push_back(tuple_string({a, b, c}) + " is not (N standard, P frozen)");
        } else if (standard_p != frozen_p) {
          r.counterexamples.push_back(tuple_string({a, b, c}) + (standard_p ? " is P standard, N frozen" : " is N standard, P frozen"));
        }
      }
  return r;
}

VerificationReport frozen_inequality(const Solver& solver, Stack bound) {
  VerificationReport r{"frozen_inequality", bound_param(bound)};
  r.notes.push_back("three-stack triples with a > 0 and b > 0; a = 0 collapses to a two-stack position");
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b, ++r.checked) {
      const auto cs = p_completions(solver, a, b, RuleSet::Frozen);
      if (cs.size() != 1)
        r.counterexamples.push_back(tuple_string({a, b}) + " has " + std::to_string(cs.size()) + " frozen P completions");
      for (Stack c : cs)
        if (c >= a + b) r.counterexamples.push_back(tuple_string({a, b, c}) + " is frozen P with c >= a + b");
    }
  return r;
}

VerificationReport heavy_handed_conjecture(const Solver& solver, Stack bound) {
  VerificationReport r{"heavy_handed_conjecture", bound_param(bound)};
  r.conjecture = true;
  r.notes.push_back("heavy-handed tie s1 == s3 allows both pairs");
  for (Stack a = 0; a <= bound; ++a)
    for (Stack b = 0; b <= bound; ++b)
      for (Stack c = 0; c <= bound; ++c, ++r.checked) {
        const bool standard_p = is_p(solver, {a, b, c}, RuleSet::Standard);
        const bool heavy_p = is_p(solver, {a, b, c}, RuleSet::HeavyHanded);
        if (standard_p != heavy_p)
          r.counterexamples.push_back(tuple_string({a, b, c}) + (standard_p ? " is P standard, N heavy" : " is N standard, P heavy"));
      }
  return r;
}

VerificationReport four_stack_symmetric(const Solver& solver, Stack bound) {
  VerificationReport r{"four_stack_symmetric", bound_param(bound)};
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b, ++r.checked) {
      const bool expected = (a == 1 && b == 2) || (a > 1 && b == 1);
      if (is_p(solver, {a, b, b, a}) != expected)
        r.counterexamples.push_back(tuple_string({a, b, b, a}) + (expected ? " is N" : " is P"));
    }

  // Smallest four-stack P positions, up to reversal.
  const std::set<Position> listed{Position{1, 2, 2, 1}, Position{2, 1, 1, 2}, Position{1, 1, 2, 2},
                                  Position{1, 2, 1, 2}, canonical_key(Position{1, 1, 3, 1})};
  std::set<Position> found;
  for (Stack total = 4; found.empty() && total <= 4 * (bound + 1); ++total)
    for (Stack a = 1; a < total; ++a)
      for (Stack b = 1; a + b < total; ++b)
        for (Stack c = 1; a + b + c < total; ++c) {
          const Stack d = total - a - b - c;
          ++r.checked;
          if (is_p(solver, {a, b, c, d})) found.insert(canonical_key(Position{a, b, c, d}));
        }
  std::set<Position> listed_keys;
  for (const Position& p : listed) listed_keys.insert(canonical_key(p));
  for (const Position& p : found)
    if (!listed_keys.contains(p)) r.counterexamples.push_back("(" + p.to_string() + ") is a smallest P but not listed");
  for (const Position& p : listed_keys)
    if (!found.contains(p)) r.counterexamples.push_back("(" + p.to_string() + ") is listed but not a smallest P");
  return r;
}

VerificationReport four_stack_1ab1(const Solver& solver, Stack bound) {
  VerificationReport r{"four_stack_1ab1", bound_param(bound)};
  std::vector<std::string> observed;
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b, ++r.checked) {
      const bool expected = (a == 2 && b == 2) || (a == 3 && b > 5);
      const bool actual = is_p(solver, {1, a, b, 1});
      if (actual) observed.push_back(tuple_string({1, a, b, 1}));
      if (actual != expected)
        r.counterexamples.push_back(tuple_string({1, a, b, 1}) + (expected ? " is N" : " is P"));
    }
  if (!r.counterexamples.empty()) {
    std::string all = "observed P set:";
    for (const auto& s : observed) all += " " + s;
    r.notes.push_back(all);
  }
  return r;
}

VerificationReport s_mod3(const Solver& solver, std::size_t max_length) {
  VerificationReport r{"s_mod3", "max_length=" + std::to_string(max_length)};
  for (const Position& p : enumerate_s(max_length)) {
    ++r.checked;
    const bool expected = s_sum(p) % 3 == 0;
    if ((solver.outcome(p) == Outcome::P) != expected)
      r.counterexamples.push_back("(" + p.to_string() + ") sum " + std::to_string(s_sum(p)) + (expected ? " is N" : " is P"));
    for (const Position& q : options(p, RuleSet::Standard)) {
      ++r.checked;
      if (!is_in_s(q)) r.counterexamples.push_back("option (" + q.to_string() + ") of (" + p.to_string() + ") leaves S");
    }
  }
  return r;
}

VerificationReport row_involution(const Solver& solver, Stack bound) {
  VerificationReport r{"row_involution", bound_param(bound)};
  for (Stack b = 1; b <= bound; ++b)
    for (Stack a = 0; a <= bound; ++a, ++r.checked) {
      const Stack c = solver.unique_c(a, b);
      const Stack back = solver.unique_c(c, b);
      if (back != a)
        r.counterexamples.push_back("row " + std::to_string(b) + ": f(" + std::to_string(a) + ")=" + std::to_string(c) +
                                    " but f(" + std::to_string(c) + ")=" + std::to_string(back));
    }
  return r;
}

VerificationReport column_cofinite(const Solver& solver, Stack bound) {
  VerificationReport r{"column_cofinite", bound_param(bound)};
  for (Stack a = 1; a <= bound; ++a) {
    const Stack start = ceil_phi2(a) + 1;
    for (Stack b = start; b < start + bound; ++b, ++r.checked) {
      const Stack c = solver.unique_c(a, b);
      if (c != a) r.counterexamples.push_back("f(" + std::to_string(a) + "," + std::to_string(b) + ")=" + std::to_string(c));
    }
  }
  return r;
}

VerificationReport a002251_column(const Solver& solver, Stack bound) {
  VerificationReport r{"a002251_column", bound_param(bound)};
  for (Stack b = 1; b <= bound; ++b, ++r.checked) {
    const Stack c = solver.unique_c(0, b);
    if (c != beatty::wythoff_involution(b))
      r.counterexamples.push_back("f(0," + std::to_string(b) + ")=" + std::to_string(c) + " but A002251 gives " +
                                  std::to_string(beatty::wythoff_involution(b)));
  }
  return r;
}

}  // namespace suites

std::span<const std::string_view> analysis_suite_names() {
  static constexpr std::array<std::string_view, 15> names{
      "equal_triples",       "near_palindromes", "unique_c_bounds",         "nonpalindrome_order",
      "wythoff_triples_N",   "palindrome_bands", "frozen_equivalence",      "frozen_inequality",
      "heavy_handed_conjecture", "four_stack_symmetric", "four_stack_1ab1", "s_mod3",
      "row_involution",      "column_cofinite",  "a002251_column"};
  return names;
}

std::optional<VerificationReport> verify(std::string_view suite, Stack bound, const Solver& solver) {
  using namespace suites;
  if (suite == "equal_triples") return equal_triples(solver, bound);
  if (suite == "near_palindromes") return near_palindromes(solver, bound);
  if (suite == "unique_c_bounds") return unique_c_bounds(solver, bound);
  if (suite == "nonpalindrome_order") return nonpalindrome_order(solver, bound);
  if (suite == "wythoff_triples_N") return wythoff_triples_n(solver, bound);
  if (suite == "palindrome_bands") return palindrome_bands(solver, {bound, bound, bound});
  if (suite == "frozen_equivalence") return frozen_equivalence(solver, bound);
  if (suite == "frozen_inequality") return frozen_inequality(solver, bound);
  if (suite == "heavy_handed_conjecture") return heavy_handed_conjecture(solver, bound);
  if (suite == "four_stack_symmetric") return four_stack_symmetric(solver, bound);
  if (suite == "four_stack_1ab1") return four_stack_1ab1(solver, bound);
  if (suite == "s_mod3") return s_mod3(solver, static_cast<std::size_t>(bound));
  if (suite == "row_involution") return row_involution(solver, bound);
  if (suite == "column_cofinite") return column_cofinite(solver, bound);
  if (suite == "a002251_column") return a002251_column(solver, bound);
  return std::nullopt;
}

std::string Conjecture2Report::to_string() const {
  std::ostringstream os;
  os << "conjecture2 a=" << a << " b_max=" << b_max << " c_max=" << c_max << ": ";
  if (window_too_small) {
    os << "window too small\n";
    return os.str();
  }
  if (candidate)
    os << "candidate b0=" << candidate->first << " c0=" << candidate->second << " (within window, not a proof)\n";
  else
    os << "no candidate in window\n";
  for (const auto& row : rows) os << "  " << row << '\n';
  return os.str();
}

Conjecture2Report explore_conjecture2(const Solver& solver, Stack a, Stack b_max, Stack c_max) {
  if (a == 0) throw std::invalid_argument("conjecture 2 needs a >= 1");
  Conjecture2Report report;
  report.a = a;
  report.b_max = b_max;
  report.c_max = c_max;
  if (b_max <= a + 1 || c_max <= a + 2) {
    report.window_too_small = true;
    return report;
  }
  for (Stack b = a + 1; b <= b_max; ++b) {
    std::vector<Stack> ps;
    for (Stack c = b + 1; c <= c_max; ++c)
      if (is_p(solver, {a, b, c, a})) ps.push_back(c);
    std::string row = "b=" + std::to_string(b) + " P at c in {";
    for (std::size_t i = 0; i < ps.size(); ++i) row += (i ? "," : "") + std::to_string(ps[i]);
    row += "}";
    report.rows.push_back(std::move(row));
    if (report.candidate || ps.empty()) continue;
    const Stack c0 = ps.front();
    const bool is_ray = ps.back() == c_max && ps.size() == c_max - c0 + 1;
    if (is_ray && c0 < c_max) report.candidate = {b, c0};
  }
  return report;
}

}  // namespace twystoff
