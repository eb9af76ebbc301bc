#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "oracle.hpp"
#include "twystoff/errors.hpp"
#include "twystoff/memo.hpp"
#include "twystoff/solver.hpp"

using namespace twystoff;

TEST_CASE("outcomes from the text") {
  const Solver s;
  CHECK(s.outcome(Position{1, 2}) == Outcome::P);
  CHECK(s.outcome(Position{1, 2, 1}) == Outcome::N);
  CHECK(s.outcome(Position{1, 3, 2}) == Outcome::P);
  CHECK(s.outcome(Position{}) == Outcome::P);
  for (Stack a = 0; a <= 25; ++a) CHECK(s.outcome(triple(a, a, a)) == Outcome::P);
  CHECK(s.outcome(Position{3, 0, 3}, RuleSet::Frozen) == Outcome::P);
  CHECK(s.outcome(Position{6}) == Outcome::N);
  CHECK_THROWS_AS(s.outcome(Position{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("grundy values") {
  const Solver s;
  CHECK(s.grundy(Position{}) == 0);
  for (Stack a = 1; a <= 30; ++a) CHECK(s.grundy(Position{a}) == a);
  CHECK(s.grundy(Position{1, 2}) == 0);
  CHECK(s.grundy(Position{2, 2}) != 0);
}

TEST_CASE("oracle equivalence, standard rules, length <= 4, total <= 14") {
  const oracle::Table table(oracle::Rules::Standard, 4, 14);
  const Solver s;
  std::size_t checked = 0;
  for (const auto& [seq, g] : table.values()) {
    const Position p(seq);
    REQUIRE_MESSAGE((s.outcome(p) == Outcome::P) == (g == 0), p.to_string());
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("oracle equivalence of Grundy values, length <= 3, total <= 12") {
  const oracle::Table table(oracle::Rules::Standard, 3, 12);
  const Solver s;
  for (const auto& [seq, g] : table.values()) REQUIRE_MESSAGE(s.grundy(Position(seq)) == g, Position(seq).to_string());
}

TEST_CASE("oracle equivalence, frozen and heavy-handed three-stack positions") {
  const Solver s;
  const oracle::Table frozen(oracle::Rules::Frozen, 3, 12);
  for (const auto& [seq, g] : frozen.values())
    REQUIRE_MESSAGE((s.outcome(Position(seq), RuleSet::Frozen) == Outcome::P) == (g == 0), Position(seq).to_string());
  const oracle::Table heavy(oracle::Rules::Heavy, 3, 14);
  for (const auto& [seq, g] : heavy.values())
    REQUIRE_MESSAGE((s.grundy(Position(seq), RuleSet::HeavyHanded) == g), Position(seq).to_string());
}

TEST_CASE("unique_c") {
  const Solver s;
  CHECK(s.unique_c(0, 7) == 4);
  CHECK(s.unique_c(4, 7) == 0);
  CHECK(s.unique_c(5, 7) == 8);
  CHECK(s.unique_c(8, 7) == 5);
  CHECK(s.unique_c(2, 3) == 1);
  CHECK(s.unique_c(1, 2) == 0);
  for (Stack b = 4; b <= 30; ++b) CHECK(s.unique_c(1, b) == 1);
  CHECK(s.unique_c(0, 3) == 5);
  CHECK_THROWS_AS(s.unique_c(1, 0), std::invalid_argument);
}

TEST_CASE("unique_last_for_grundy") {
  const Solver s;
  const Stack one[] = {1};
  const Stack seven[] = {7};
  CHECK(s.unique_last_for_grundy(one, 0) == 2);
  CHECK(s.unique_last_for_grundy(seven, 0) == 4);
  const oracle::Table table(oracle::Rules::Standard, 2, 21);
  for (std::uint64_t g = 0; g <= 6; ++g) {
    std::vector<Stack> witnesses;
    for (Stack x = 0; x <= 20; ++x) {
      const oracle::Seq seq = x == 0 ? oracle::Seq{1} : oracle::Seq{1, x};
      if (table.grundy(seq) == g) witnesses.push_back(x);
    }
    REQUIRE(witnesses.size() == 1);
    CHECK(s.unique_last_for_grundy(one, g) == witnesses.front());
  }
}

TEST_CASE("property: grundy is zero exactly at P, reversal invariant, options agree") {
  const Solver s;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  std::uniform_int_distribution<Stack> entry(1, 4);
  for (int i = 0; i < 400; ++i) {
    std::vector<Stack> v(len(rng));
    for (auto& x : v) x = entry(rng);
    const Position p(v);
    const auto g = s.grundy(p);
    CHECK((g == 0) == (s.outcome(p) == Outcome::P));
    CHECK(s.grundy(p.reversed()) == g);
    bool has_p_option = false;
    for (const Position& q : options(p, RuleSet::Standard)) has_p_option |= s.outcome(q) == Outcome::P;
    CHECK(has_p_option == (g != 0));
  }
}

TEST_CASE("concurrent solving shares one memo consistently") {
  const Solver shared;
  std::vector<std::jthread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&shared, t] {
      for (Stack a = 0; a <= 12; ++a)
        for (Stack b = 1; b <= 12; ++b) shared.grundy(triple((a + static_cast<Stack>(t)) % 13, b, a));
    });
  workers.clear();
  const Solver fresh;
  for (Stack a = 0; a <= 12; ++a)
    for (Stack b = 1; b <= 12; ++b) CHECK(shared.grundy(triple(a, b, a)) == fresh.grundy(triple(a, b, a)));
}

TEST_CASE("memo persistence") {
  const Solver s;
  s.grundy(Position{1, 2});
  s.outcome(Position{3, 4, 5});
  s.outcome(Position{3, 0, 3}, RuleSet::Frozen);
  std::ostringstream first;
  s.memo().save(first);
  CHECK(first.str().rfind(std::string(MemoTable::kHeader) + "\n", 0) == 0);
  CHECK(first.str().find("standard;1,2;P;0\n") != std::string::npos);

  MemoTable loaded;
  std::istringstream in(first.str());
  loaded.load(in);
  CHECK(loaded.records() == s.memo().records());
  std::ostringstream second;
  loaded.save(second);
  CHECK(second.str() == first.str());

  const auto path = std::filesystem::temp_directory_path() / "twystoff_memo_test.txt";
  save_memo(s.memo(), path);
  MemoTable from_file;
  load_memo(from_file, path);
  CHECK(from_file.records() == s.memo().records());

  const std::string text = first.str();
  for (std::size_t cut : {text.size() - 1, text.size() / 2, text.find('\n') + 1}) {
    MemoTable t;
    std::istringstream truncated(text.substr(0, cut));
    CHECK_THROWS_AS(t.load(truncated), FormatError);
  }
  for (const char* bad : {"TWYSTOFF-MEMO v2\nEND 0\n", "TWYSTOFF-MEMO v1\nstandard;1,2;Q;0\nEND 1\n",
                          "TWYSTOFF-MEMO v1\nstandard;2,1;P;0\nEND 1\n", "TWYSTOFF-MEMO v1\nEND 3\n"}) {
    MemoTable t;
    std::istringstream is(bad);
    CHECK_THROWS_AS(t.load(is), FormatError);
  }
  CHECK_THROWS_AS(load_memo(from_file, "/nonexistent/dir/memo.txt"), IoError);
  std::filesystem::remove(path);
}

TEST_CASE("memo rejects inconsistent entries") {
  MemoTable t;
  const Stack key[] = {1, 2};
  t.insert(key, RuleSet::Standard, {Outcome::P, std::nullopt});
  CHECK(t.insert(key, RuleSet::Standard, {Outcome::P, 0}).grundy == 0);
  CHECK_THROWS_AS(t.insert(key, RuleSet::Standard, {Outcome::N, 1}), std::logic_error);
}
