#include "twystoff/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "twystoff/errors.hpp"

namespace twystoff {

namespace {

// Reversal-minimal orientation of `stacks`, borrowing `buffer` when a flip is
// needed.
std::span<const Stack> oriented(std::span<const Stack> stacks, std::vector<Stack>& buffer) {
  if (!std::lexicographical_compare(stacks.rbegin(), stacks.rend(), stacks.begin(), stacks.end())) return stacks;
  buffer.assign(stacks.rbegin(), stacks.rend());
  return buffer;
}

class Lookup {
 public:
  Lookup(MemoTable& memo, RuleSet rules) : memo_(memo), rules_(rules) {}

  std::optional<MemoEntry> find(std::span<const Stack> stacks) { return memo_.find(oriented(stacks, buffer_), rules_); }
  void insert(std::span<const Stack> stacks, MemoEntry e) { memo_.insert(oriented(stacks, buffer_), rules_, e); }

 private:
  MemoTable& memo_;
  RuleSet rules_;
  std::vector<Stack> buffer_;
};

struct OutcomeFrame {
  Position pos;
  std::vector<Position> unresolved;  // options whose outcome was unknown at expansion
  std::size_t next = 0;
  bool has_p_option = false;
};

struct GrundyFrame {
  Position pos;
  std::vector<Position> children;
  std::size_t next = 0;
};

void require_canonical(const Position& pos, RuleSet rules) {
  if (!is_canonical(pos, rules))
    throw std::invalid_argument("position " + pos.to_string() + " is not canonical for " +
                                std::string(to_string(rules)) + " rules");
}

}  // namespace

Position triple(Stack a, Stack b, Stack c, RuleSet rules) {
  const Stack raw[3] = {a, b, c};
  return normalize(raw, rules);
}

Outcome Solver::outcome(const Position& pos, RuleSet rules) const {
  require_canonical(pos, rules);
  Lookup memo(*memo_, rules);
  if (auto e = memo.find(pos.stacks())) return e->outcome;

  auto expand = [&](Position p) {
    OutcomeFrame f{std::move(p), {}, 0, false};
    for_each_option(f.pos, rules, [&](std::span<const Stack> opt) {
      if (f.has_p_option) return;
      if (auto e = memo.find(opt)) {
        if (e->outcome == Outcome::P) f.has_p_option = true;
        return;
      }
      f.unresolved.emplace_back(std::vector<Stack>(opt.begin(), opt.end()));
    });
    return f;
  };

  std::vector<OutcomeFrame> stack;
  stack.push_back(expand(pos));
  while (!stack.empty()) {
    OutcomeFrame& f = stack.back();
    std::optional<Position> descend;
    while (!f.has_p_option && f.next < f.unresolved.size()) {
      const Position& child = f.unresolved[f.next];
      auto e = memo.find(child.stacks());
      if (!e) {
        descend = child;
        break;
      }
      if (e->outcome == Outcome::P)
        f.has_p_option = true;
      else
        ++f.next;
    }
    if (descend) {
      stack.push_back(expand(std::move(*descend)));
      continue;
    }
    memo.insert(f.pos.stacks(), MemoEntry{f.has_p_option ? Outcome::N : Outcome::P, std::nullopt});
    stack.pop_back();
  }
  return memo.find(pos.stacks())->outcome;
}

GrundyValue Solver::grundy(const Position& pos, RuleSet rules) const {
  require_canonical(pos, rules);
  Lookup memo(*memo_, rules);
  if (auto e = memo.find(pos.stacks()); e && e->grundy) return *e->grundy;

  auto expand = [&](Position p) {
    GrundyFrame f{std::move(p), {}, 0};
    for_each_option(f.pos, rules, [&](std::span<const Stack> opt) {
      f.children.emplace_back(std::vector<Stack>(opt.begin(), opt.end()));
    });
    std::sort(f.children.begin(), f.children.end());
    f.children.erase(std::unique(f.children.begin(), f.children.end()), f.children.end());
    return f;
  };

  std::vector<GrundyFrame> stack;
  stack.push_back(expand(pos));
  std::vector<char> seen;
  while (!stack.empty()) {
    GrundyFrame& f = stack.back();
    std::optional<Position> descend;
    for (; f.next < f.children.size(); ++f.next) {
      auto e = memo.find(f.children[f.next].stacks());
      if (!e || !e->grundy) {
        descend = f.children[f.next];
        break;
      }
    }
    if (descend) {
      stack.push_back(expand(std::move(*descend)));
      continue;
    }
    // mex over the option values; it never exceeds the number of options.
    seen.assign(f.children.size() + 1, 0);
    for (const Position& child : f.children) {
      const GrundyValue g = *memo.find(child.stacks())->grundy;
      if (g < seen.size()) seen[g] = 1;
    }
    const auto mex = static_cast<GrundyValue>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    memo.insert(f.pos.stacks(), MemoEntry{mex == 0 ? Outcome::P : Outcome::N, mex});
    stack.pop_back();
  }
  return *memo.find(pos.stacks())->grundy;
}

Stack Solver::unique_c(Stack a, Stack b, RuleSet rules) const {
  if (b == 0) throw std::invalid_argument("unique_c requires b > 0");
  // With a = 0 the position is two-stack Wythoff, whose partner of b is <= 2b.
  const Stack bound = a > 0 ? a + b + std::min(a, b) + 1 : 2 * b + 1;
  for (Stack c = 0; c <= bound; ++c) {
    if (outcome(triple(a, b, c, rules), rules) != Outcome::P) continue;
    if (a > 0 && c >= a + b)
      throw BoundViolation("P position (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                           ") breaks c < a + b");
    return c;
  }
  throw BoundViolation("no P completion of (" + std::to_string(a) + "," + std::to_string(b) + ",c) with c <= " +
                       std::to_string(bound));
}

Stack Solver::unique_last_for_grundy(std::span<const Stack> prefix, GrundyValue g, RuleSet rules) const {
  if (prefix.empty()) throw std::invalid_argument("unique_last_for_grundy requires a nonempty prefix");
  if (std::find(prefix.begin(), prefix.end(), Stack{0}) != prefix.end())
    throw std::invalid_argument("unique_last_for_grundy requires positive prefix entries");
  const Stack sum = std::accumulate(prefix.begin(), prefix.end(), Stack{0});
  const Stack min = *std::min_element(prefix.begin(), prefix.end());
  Stack cap = sum + min + g + 2;
  std::vector<Stack> raw(prefix.begin(), prefix.end());
  raw.push_back(0);
  Stack x = 0;
  for (;;) {
    for (; x <= cap; ++x) {
      raw.back() = x;
      if (grundy(normalize(raw, rules), rules) == g) return x;
    }
    if (cap >= kGrundySearchLimit)
      throw SearchCapExceeded("no last stack with Grundy value " + std::to_string(g) + " below " +
                              std::to_string(cap));
    cap = std::min(cap * 2, kGrundySearchLimit);
  }
}

}  // namespace twystoff
