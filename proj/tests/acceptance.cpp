// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "twystoff/analysis.hpp"
#include "twystoff/beatty.hpp"
#include "twystoff/infinite.hpp"
#include "twystoff/memo.hpp"
#include "twystoff/solver.hpp"

using namespace twystoff;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

void require(Verdict& v, bool cond, const std::string& what) {
  if (!cond) {
    v.ok = false;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += what;
  }
}

void absorb(Verdict& v, const VerificationReport& r) {
  require(v, r.passed(), r.suite + ": " + std::to_string(r.counterexamples.size()) + " counterexamples" +
                             (r.counterexamples.empty() ? "" : ", first " + r.counterexamples.front()));
  for (const std::string& note : r.notes) v.detail += (v.detail.empty() ? "" : "; ") + r.suite + " note: " + note;
}

std::string parse_tuple(const std::string& text, oracle::Seq& out) {
  // "(a,b,c) ..." -> a,b,c
  out.clear();
  const auto close = text.find(')');
  std::string inner = text.substr(1, close - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoull(tok));
  return text.substr(close + 1);
}

// Confirms each "(..) is P" / "(..) is N" counterexample with the oracle.
std::size_t oracle_confirmed(const VerificationReport& r, const oracle::Table& table) {
  std::size_t confirmed = 0;
  for (const std::string& c : r.counterexamples) {
    oracle::Seq seq;
    const std::string rest = parse_tuple(c, seq);
    const oracle::Seq canon = oracle::contract(seq, oracle::Rules::Standard);
    if (!table.contains(canon)) continue;
    const bool claims_p = rest.rfind(" is P", 0) == 0;
    const bool claims_n = rest.rfind(" is N", 0) == 0;
    const bool nonpal = rest.find("non-palindrome P") != std::string::npos;
    if ((claims_p || nonpal) && table.is_p(canon)) ++confirmed;
    if (claims_n && !table.is_p(canon)) ++confirmed;
  }
  return confirmed;
}

Verdict criterion1() {
  Verdict v;
  const std::vector<Position> expected{{1, 2, 2}, {2, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2},
                                       {4},       {4, 1, 1}, {4, 2}, {4, 2, 1}};
  require(v, options(Position{4, 2, 2}, RuleSet::Standard) == expected, "option set differs");
  v.detail = "9 options";
  return v;
}

Verdict criterion2() {
  Verdict v;
  const oracle::Table table(oracle::Rules::Standard, 4, 14);
  const Solver s;
  std::size_t mismatches = 0;
  for (const auto& [seq, g] : table.values())
    if ((s.outcome(Position(seq)) == Outcome::P) != (g == 0)) ++mismatches;
  require(v, mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(table.values().size()) + " positions compared";
  return v;
}

Verdict criterion3() {
  Verdict v;
  const Solver s;
  absorb(v, suites::equal_triples(s, 25));
  absorb(v, suites::near_palindromes(s, 25));
  return v;
}

Verdict criterion4(const Solver& s) {
  Verdict v;
  absorb(v, suites::unique_c_bounds(s, 40));
  return v;
}

Verdict criterion5() {
  Verdict v;
  const Solver s;
  require(v, s.unique_c(0, 7) == 4, "f(0,7)");
  require(v, s.unique_c(4, 7) == 0, "f(4,7)");
  require(v, s.unique_c(5, 7) == 8, "f(5,7)");
  require(v, s.unique_c(8, 7) == 5, "f(8,7)");
  return v;
}

Verdict criterion6() {
  Verdict v;
  const Solver s;
  absorb(v, suites::a002251_column(s, 60));
  constexpr beatty::u64 kN = 100000;
  std::vector<int> hits(kN + 1, 0);
  for (beatty::u64 n = 1; beatty::floor_phi(n) <= kN; ++n) {
    const auto w = beatty::wythoff_pair(n);
    ++hits[w.lower];
    if (w.upper <= kN) ++hits[w.upper];
  }
  std::size_t bad = 0;
  for (beatty::u64 x = 1; x <= kN; ++x) bad += hits[x] != 1;
  require(v, bad == 0, std::to_string(bad) + " integers not covered exactly once");
  std::size_t bad_inv = 0;
  for (beatty::u64 b = 0; b <= kN; ++b) bad_inv += beatty::wythoff_involution(beatty::wythoff_involution(b)) != b;
  require(v, bad_inv == 0, std::to_string(bad_inv) + " involution failures");
  return v;
}

Verdict criterion7() {
  Verdict v;
  const Solver s;
  const VerificationReport bands = suites::palindrome_bands(s, {25, 25, 40});
  const VerificationReport triples = suites::wythoff_triples_n(s, 25);
  absorb(v, bands);
  absorb(v, triples);
  const oracle::Table table(oracle::Rules::Standard, 3, 90);
  const std::size_t total = bands.counterexamples.size() + triples.counterexamples.size();
  const std::size_t confirmed = oracle_confirmed(bands, table) + oracle_confirmed(triples, table);
  v.detail += "; oracle confirms " + std::to_string(confirmed) + " of " + std::to_string(total) + " counterexamples";
  return v;
}

Verdict criterion8() {
  Verdict v;
  const Solver s;
  absorb(v, suites::frozen_equivalence(s, 30));
  absorb(v, suites::frozen_inequality(s, 30));
  return v;
}

Verdict criterion9() {
  Verdict v;
  const Solver s;
  const VerificationReport r = suites::heavy_handed_conjecture(s, 30);
  v.detail = r.passed() ? "P sets coincide (" + std::to_string(r.checked) + " triples)"
                        : "finding: " + r.counterexamples.front();
  return v;
}

Verdict criterion10() {
  Verdict v;
  const Solver s;
  absorb(v, suites::four_stack_symmetric(s, 15));
  const VerificationReport r = suites::four_stack_1ab1(s, 15);
  absorb(v, r);
  const oracle::Table table(oracle::Rules::Standard, 4, 32);
  v.detail += "; oracle confirms " + std::to_string(oracle_confirmed(r, table)) + " of " +
              std::to_string(r.counterexamples.size()) + " counterexamples";
  return v;
}

Verdict criterion11() {
  Verdict v;
  const Solver s;
  absorb(v, suites::s_mod3(s, 10));
  return v;
}

Verdict criterion12() {
  Verdict v;
  const Solver s;
  std::size_t checked = 0;
  std::vector<std::vector<Stack>> prefixes;
  for (Stack x = 1; x <= 10; ++x) {
    prefixes.push_back({x});
    for (Stack y = 1; y <= 10; ++y) prefixes.push_back({x, y});
  }
  for (const auto& prefix : prefixes) {
    Stack sum = 0;
    for (Stack x : prefix) sum += x;
    const Stack min = *std::min_element(prefix.begin(), prefix.end());
    for (GrundyValue g = 0; g <= 8; ++g, ++checked) {
      const Stack found = s.unique_last_for_grundy(prefix, g);
      std::vector<Stack> raw = prefix;
      raw.push_back(0);
      std::size_t witnesses = 0;
      const Stack sweep = std::max(found, sum + min + g + 2) + 8;
      for (Stack x = 0; x <= sweep; ++x) {
        raw.back() = x;
        witnesses += s.grundy(normalize(raw, RuleSet::Standard)) == g;
      }
      raw.back() = found;
      if (witnesses != 1 || s.grundy(normalize(raw, RuleSet::Standard)) != g) {
        require(v, false, "prefix " + Position(prefix).to_string() + " g=" + std::to_string(g));
      }
    }
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(checked) + " (prefix, g) pairs";
  return v;
}

Verdict criterion13() {
  Verdict v;
  const InfiniteSolver s;
  using namespace infinite_suites;
  absorb(v, outer_infinities(s, 12));
  absorb(v, outer_corollary(s, 12));
  absorb(v, triple_infinity(s, 12));
  absorb(v, six_infinities(s, 10));
  const ExtPosition example{3, 2, kInf, 1};
  std::vector<ExtPosition> p_options;
  for (const ExtPosition& o : ext_options(example).positions)
    if (s.decide(o).kind == DecisionResult::Kind::P) p_options.push_back(o);
  require(v, p_options == std::vector<ExtPosition>{ExtPosition{2, 2, kInf, 1}}, "(3,2,inf,1) P options differ");
  const DecisionResult::Kind expected[] = {DecisionResult::Kind::P, DecisionResult::Kind::N, DecisionResult::Kind::N,
                                           DecisionResult::Kind::N};
  for (std::size_t k = 3; k <= 6; ++k) {
    const DecisionResult d = s.decide(ExtPosition(std::vector<ExtStack>(k, kInf)));
    require(v, d.kind == expected[k - 3], "inf^" + std::to_string(k) + " decided " + d.to_string());
  }
  const DecisionResult six = s.decide(ExtPosition(std::vector<ExtStack>(6, kInf)));
  require(v, six.certificate == ExtPosition{kInf, kInf, 1, 1, kInf, kInf}, "inf^6 certificate");
  return v;
}

Verdict criterion14() {
  Verdict v;
  const InfiniteSolver s;
  std::size_t n = 0;
  for (const Position& g : compositions_up_to(10)) {
    ++n;
    if (s.diminished_sum_outcome(g, g.reversed()) != Outcome::P) require(v, false, g.to_string() + " not P");
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(n) + " compositions";
  return v;
}

Verdict criterion15() {
  using Clock = std::chrono::steady_clock;
  Verdict v;
  const Solver cold;
  const auto t0 = Clock::now();
  criterion4(cold);
  const auto cold_time = Clock::now() - t0;

  std::ostringstream saved;
  cold.memo().save(saved);
  auto loaded = std::make_shared<MemoTable>();
  std::istringstream in(saved.str());
  loaded->load(in);
  std::ostringstream resaved;
  loaded->save(resaved);
  require(v, resaved.str() == saved.str(), "round-trip not bit-exact");

  const auto path = std::filesystem::temp_directory_path() / "twystoff_acceptance_memo.txt";
  save_memo(cold.memo(), path);
  auto from_file = std::make_shared<MemoTable>();
  load_memo(*from_file, path);
  std::ostringstream from_file_text;
  from_file->save(from_file_text);
  require(v, from_file_text.str() == saved.str(), "file round-trip not bit-exact");
  std::filesystem::remove(path);

  const Solver warm(from_file);
  const auto t1 = Clock::now();
  criterion4(warm);
  const auto warm_time = Clock::now() - t1;
  require(v, warm_time < cold_time, "warm run not faster");
  const auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu records, cold %.1f ms, warm %.1f ms", cold.memo().size(), ms(cold_time),
                ms(warm_time));
  v.detail += (v.detail.empty() ? "" : "; ") + std::string(buf);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "option set of (4,2,2)", 1, criterion1},
      {2, "oracle equivalence, length <= 4, total <= 14", 60, criterion2},
      {3, "equal triples and near palindromes", 30, criterion3},
      {4, "unique c with c <= a+b+min(a,b)+1 and c < a+b (a,b <= 40)", 300, [] { return criterion4(Solver{}); }},
      {5, "row 7 values", 10, criterion5},
      {6, "A002251 column, Beatty partition and involution", 60, criterion6},
      {7, "palindrome bands and boundary N triples", 300, criterion7},
      {8, "frozen equivalence and frozen inequality", 120, criterion8},
      {9, "heavy-handed conjecture (findings allowed)", 120, criterion9},
      {10, "four-stack symmetric and (1,a,b,1) characterizations", 120, criterion10},
      {11, "S positions: P iff sum = 0 mod 3, closure", 60, criterion11},
      {12, "Grundy last-stack uniqueness", 60, criterion12},
      {13, "infinite stacks: outer, corollary, triple, six, decide table", 300, criterion13},
      {14, "mirror positions (g, inf, reverse g) are P", 60, criterion14},
      {15, "memo round-trip and warm start", 60, criterion15},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = v.ok && in_time;
    failures += !pass;
    std::printf("[%s] criterion %2d: %s (%.2fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED", v.detail.empty() ? "" : (" -- " + v.detail).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
