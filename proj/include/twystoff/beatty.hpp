#pragma once

#include <cstdint>

// Golden-ratio floors and ceilings in exact integer arithmetic. Nothing here
// touches floating point: floor(n*phi) = (n + isqrt(5 n^2)) / 2 with a 128-bit
// radicand. Every function throws std::overflow_error when its result (or the
// radicand) does not fit.

namespace twystoff::beatty {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// floor(sqrt(x)).
u128 isqrt(u128 x);

/// Largest n for which 5 n^2 fits in 128 bits.
inline constexpr u64 kMaxPhiArgument = 8'249'634'742'471'189'717ULL;

u64 floor_phi(u64 n);
/// ceil(a*phi); 0 for a = 0 (a*phi is irrational otherwise).
u64 ceil_phi(u64 a);
/// ceil(a*phi^2) = ceil(a*phi) + a.
u64 ceil_phi2(u64 a);
/// floor(b/phi) = floor(b*phi) - b.
u64 floor_over_phi(u64 b);
/// ceil(b/phi); 0 for b = 0.
u64 ceil_over_phi(u64 b);

struct WythoffPair {
  u64 n = 0;
  u64 lower = 0;  // floor(n*phi)
  u64 upper = 0;  // floor(n*phi^2) = lower + n
};

WythoffPair wythoff_pair(u64 n);

/// True iff the sorted pair is (floor(n phi), floor(n phi^2)) for n = |b - a|.
bool is_wythoff_p(u64 a, u64 b);

bool is_lower_wythoff(u64 x);
bool is_upper_wythoff(u64 x);

/// OEIS A002251: 0 -> 0, each Wythoff number to its partner.
u64 wythoff_involution(u64 b);

}  // namespace twystoff::beatty
