#include "twystoff/beatty.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace twystoff::beatty {

namespace {

unsigned bit_width(u128 x) {
  const auto hi = static_cast<u64>(x >> 64);
  return hi ? 64 + static_cast<unsigned>(std::bit_width(hi)) : static_cast<unsigned>(std::bit_width(static_cast<u64>(x)));
}

u64 add(u64 x, u64 y) {
  u64 r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("golden-ratio value exceeds 64 bits");
  return r;
}

}  // namespace

u128 isqrt(u128 x) {
  if (x < 2) return x;
  // Newton from an overestimate decreases monotonically to the floor root.
  u128 r = u128{1} << ((bit_width(x) + 1) / 2);
  for (;;) {
    const u128 next = (r + x / r) / 2;
    if (next >= r) return r;
    r = next;
  }
}

u64 floor_phi(u64 n) {
  if (n > kMaxPhiArgument) throw std::overflow_error("floor_phi argument too large: " + std::to_string(n));
  const u128 wide = static_cast<u128>(n);
  return static_cast<u64>((wide + isqrt(5 * wide * wide)) / 2);
}

u64 ceil_phi(u64 a) { return a == 0 ? 0 : add(floor_phi(a), 1); }

u64 ceil_phi2(u64 a) { return add(ceil_phi(a), a); }

u64 floor_over_phi(u64 b) { return floor_phi(b) - b; }

u64 ceil_over_phi(u64 b) { return b == 0 ? 0 : floor_over_phi(b) + 1; }

WythoffPair wythoff_pair(u64 n) {
  const u64 lower = floor_phi(n);
  return {n, lower, add(lower, n)};
}

bool is_wythoff_p(u64 a, u64 b) {
  if (a > b) std::swap(a, b);
  const u64 n = b - a;
  return floor_phi(n) == a;
}

bool is_lower_wythoff(u64 x) {
  // floor(n phi) = x forces n = floor(x / phi) + 1.
  return x > 0 && floor_phi(floor_over_phi(x) + 1) == x;
}

bool is_upper_wythoff(u64 x) { return x > 0 && !is_lower_wythoff(x); }

u64 wythoff_involution(u64 b) {
  if (b == 0) return 0;
  const u64 n = floor_over_phi(b) + 1;
  if (floor_phi(n) == b) return add(b, n);
  return floor_over_phi(b);
}

}  // namespace twystoff::beatty
