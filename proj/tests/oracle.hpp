#pragma once

// Brute-force reference implementation. Shares no code with the library: its
// own move generator, contraction and a bottom-up P table over all positions
// of bounded length and total.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Seq = std::vector<std::uint64_t>;

enum class Rules { Standard, Frozen, Heavy };

// Positions reached by a move from a canonical position contain interior runs
// of at most two zeros: a single zero glues its neighbours, a double vanishes.
inline Seq contract(Seq s, Rules rules) {
  while (!s.empty() && s.front() == 0) s.erase(s.begin());
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (rules == Rules::Frozen) return s;
  Seq out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != 0) {
      out.push_back(s[i++]);
      continue;
    }
    if (s[i + 1] == 0) {
      i += 2;
    } else {
      out.back() += s[i + 1];
      i += 2;
    }
  }
  return out;
}

inline std::set<Seq> moves(const Seq& s, Rules rules) {
  std::set<Seq> out;
  const std::size_t n = s.size();
  if (n == 0) return out;
  for (std::uint64_t k = 1; k <= s[0]; ++k) {
    Seq t = s;
    t[0] -= k;
    out.insert(contract(t, rules));
  }
  for (std::uint64_t k = 1; k <= s[n - 1]; ++k) {
    Seq t = s;
    t[n - 1] -= k;
    out.insert(contract(t, rules));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rules == Rules::Heavy && n == 3) {
      if (i == 0 && s[0] < s[2]) continue;
      if (i == 1 && s[2] < s[0]) continue;
    }
    for (std::uint64_t k = 1; k <= std::min(s[i], s[i + 1]); ++k) {
      Seq t = s;
      t[i] -= k;
      t[i + 1] -= k;
      out.insert(contract(t, rules));
    }
  }
  return out;
}

// Every sequence of length <= max_len with entries >= min_entry and total
// <= max_total, ordered by total.
inline std::vector<Seq> all_sequences(std::size_t max_len, std::uint64_t max_total, std::uint64_t min_entry) {
  std::vector<Seq> out{{}};
  Seq cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t left) {
    if (cur.size() == max_len) return;
    for (std::uint64_t x = min_entry; x <= left; ++x) {
      cur.push_back(x);
      if (cur.front() != 0 && cur.back() != 0) out.push_back(cur);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(max_total);
  auto total = [](const Seq& s) {
    std::uint64_t t = 0;
    for (auto x : s) t += x;
    return t;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Seq& a, const Seq& b) { return total(a) < total(b); });
  return out;
}

// Grundy values computed bottom-up by total; P iff the value is 0.
class Table {
 public:
  Table(Rules rules, std::size_t max_len, std::uint64_t max_total) : rules_(rules) {
    const std::uint64_t min_entry = rules == Rules::Frozen ? 0 : 1;
    for (const Seq& s : all_sequences(max_len, max_total, min_entry)) {
      std::set<std::uint64_t> seen;
      for (const Seq& m : moves(s, rules)) seen.insert(grundy_.at(m));
      std::uint64_t g = 0;
      while (seen.count(g)) ++g;
      grundy_[s] = g;
    }
  }

  bool contains(const Seq& s) const { return grundy_.count(s) != 0; }
  bool is_p(const Seq& s) const { return grundy_.at(s) == 0; }
  std::uint64_t grundy(const Seq& s) const { return grundy_.at(s); }
  const std::map<Seq, std::uint64_t>& values() const { return grundy_; }

 private:
  Rules rules_;
  std::map<Seq, std::uint64_t> grundy_;
};

// Floating-point golden ratio, trustworthy only for small n.
inline std::uint64_t float_floor_phi(std::uint64_t n) {
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  return static_cast<std::uint64_t>(std::floor(static_cast<long double>(n) * phi));
}

}  // namespace oracle
