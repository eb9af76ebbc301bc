#include <doctest.h>

#include <limits>
#include <vector>

#include "oracle.hpp"
#include "twystoff/beatty.hpp"
#include "twystoff/solver.hpp"

using namespace twystoff;
using namespace twystoff::beatty;

TEST_CASE("floor_phi and friends") {
  CHECK(floor_phi(0) == 0);
  CHECK(floor_phi(1) == 1);
  CHECK(floor_phi(10) == 16);
  CHECK(ceil_phi(0) == 0);
  CHECK(floor_over_phi(2) == 1);
  CHECK(ceil_over_phi(0) == 0);
  for (u64 n = 0; n <= 100000; ++n) CHECK_MESSAGE(floor_phi(n) == oracle::float_floor_phi(n), n);
  for (u64 a = 0; a <= 1000000; ++a) REQUIRE(ceil_phi2(a) == ceil_phi(a) + a);
}

TEST_CASE("isqrt is exact at perfect squares and their neighbours") {
  for (u128 r : {u128{0}, u128{1}, u128{12345}, u128{0xFFFFFFFFull}, (u128{1} << 62) + 7}) {
    CHECK(isqrt(r * r) == r);
    if (r > 0) CHECK(isqrt(r * r - 1) == r - 1);
    CHECK(isqrt(r * r + 2 * r) == r);
  }
  CHECK(isqrt(~u128{0}) == (u128{1} << 64) - 1);
}

TEST_CASE("large arguments stay exact or throw") {
  // floor(phi * 10^18) = 1618033988749894848.
  CHECK(floor_phi(1000000000000000000ull) == 1618033988749894848ull);
  CHECK_THROWS_AS(floor_phi(std::numeric_limits<u64>::max()), std::overflow_error);
}

TEST_CASE("Wythoff pairs") {
  CHECK(is_wythoff_p(0, 0));
  CHECK(is_wythoff_p(1, 2));
  CHECK(is_wythoff_p(2, 1));
  for (u64 n = 1; n <= 50; ++n) CHECK_FALSE(is_wythoff_p(n, n));
  CHECK(wythoff_pair(1).lower == 1);
  CHECK(wythoff_pair(1).upper == 2);
  const Solver s;
  for (u64 a = 0; a <= 60; ++a)
    for (u64 b = 0; b <= 60; ++b) {
      const Position p = normalize(Position{a, b}, RuleSet::Standard);
      CHECK((s.outcome(p) == Outcome::P) == is_wythoff_p(a, b));
    }
}

TEST_CASE("involution") {
  CHECK(wythoff_involution(0) == 0);
  CHECK(wythoff_involution(1) == 2);
  CHECK(wythoff_involution(2) == 1);
  CHECK(wythoff_involution(7) == 4);
  for (u64 b = 0; b <= 100000; ++b) REQUIRE(wythoff_involution(wythoff_involution(b)) == b);
}

TEST_CASE("Beatty partition up to 1e5") {
  constexpr u64 kN = 100000;
  std::vector<int> hits(kN + 1, 0);
  for (u64 n = 1;; ++n) {
    const WythoffPair w = wythoff_pair(n);
    if (w.lower > kN) break;
    ++hits[w.lower];
    if (w.upper <= kN) ++hits[w.upper];
    CHECK(w.upper == w.lower + n);
    CHECK(floor_over_phi(w.upper) == w.lower);
  }
  for (u64 x = 1; x <= kN; ++x) {
    REQUIRE(hits[x] == 1);
    REQUIRE(is_lower_wythoff(x) != is_upper_wythoff(x));
  }
  for (u64 n = 0; n < kN; ++n) {
    const u64 d = floor_phi(n + 1) - floor_phi(n);
    REQUIRE((d == 1 || d == 2));
  }
}
