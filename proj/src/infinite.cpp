#include "twystoff/infinite.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "twystoff/beatty.hpp"
#include "twystoff/errors.hpp"

namespace twystoff {

// ---------------------------------------------------------------------------
// ExtStack / ExtPosition

ExtStack operator+(ExtStack x, ExtStack y) {
  if (x.is_infinite() || y.is_infinite()) return kInf;
  Stack sum = 0;
  if (__builtin_add_overflow(x.value(), y.value(), &sum)) throw std::overflow_error("stack size overflows 64 bits");
  return ExtStack(sum);
}

std::string ExtStack::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

ExtPosition::ExtPosition(const Position& finite) {
  stacks_.reserve(finite.size());
  for (Stack s : finite.stacks()) stacks_.emplace_back(s);
}

std::size_t ExtPosition::infinity_count() const {
  return static_cast<std::size_t>(
      std::count_if(stacks_.begin(), stacks_.end(), [](const ExtStack& s) { return s.is_infinite(); }));
}

Position ExtPosition::to_finite() const { return finite_slice(0, stacks_.size()); }

Position ExtPosition::finite_slice(std::size_t first, std::size_t last) const {
  std::vector<Stack> out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    if (stacks_[i].is_infinite()) throw std::logic_error("finite_slice over an infinite stack in " + to_string());
    out.push_back(stacks_[i].value());
  }
  return Position(std::move(out));
}

ExtPosition ExtPosition::reversed() const { return ExtPosition(std::vector<ExtStack>(stacks_.rbegin(), stacks_.rend())); }

std::string ExtPosition::to_string() const {
  if (stacks_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < stacks_.size(); ++i) {
    if (i) out += ',';
    out += stacks_[i].to_string();
  }
  return out;
}

ExtPosition ext_normalize(std::span<const ExtStack> raw) {
  std::vector<ExtStack> out;
  std::size_t zeros = 0;
  for (const ExtStack& s : raw) {
    if (s.is_zero()) {
      ++zeros;
      continue;
    }
    if (!out.empty() && zeros % 2 == 1)
      out.back() = out.back() + s;
    else
      out.push_back(s);
    zeros = 0;
  }
  return ExtPosition(std::move(out));
}

ExtPosition parse_ext_position(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in position '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<ExtStack> stacks;
  std::string_view rest = text;
  bool expect_value = false;
  while (!rest.empty()) {
    if (is_space(rest.front())) {
      rest.remove_prefix(1);
      continue;
    }
    if (rest.front() == ',') {
      if (stacks.empty() || expect_value) throw ParseError("empty entry in position '" + std::string(text) + "'");
      expect_value = true;
      rest.remove_prefix(1);
      continue;
    }
    std::size_t len = 0;
    while (len < rest.size() && rest[len] != ',' && !is_space(rest[len])) ++len;
    const std::string_view token = rest.substr(0, len);
    rest.remove_prefix(len);
    expect_value = false;
    if (token == "inf" || token == "\xE2\x88\x9E") {
      stacks.push_back(kInf);
      continue;
    }
    Stack v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("expected a nonnegative integer or 'inf', got '" + std::string(token) + "'");
    stacks.emplace_back(v);
  }
  if (expect_value) throw ParseError("trailing comma in position '" + std::string(text) + "'");
  return ExtPosition(std::move(stacks));
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::AllFinite:
      return "AllFinite";
    case PatternKind::EndInfinity:
      return "EndInfinity";
    case PatternKind::SingleInteriorInfinity:
      return "SingleInteriorInfinity";
    case PatternKind::DoubleEndInfinity:
      return "DoubleEndInfinity";
    case PatternKind::AllInfinity:
      return "AllInfinity";
    case PatternKind::Other:
      return "Other";
  }
  return "?";
}

PatternClass classify_pattern(const ExtPosition& pos) {
  const std::size_t k = pos.infinity_count();
  const std::size_t n = pos.size();
  if (k == 0) return {PatternKind::AllFinite, 0};
  if (k == n) return {PatternKind::AllInfinity, k};
  if (k == 1) {
    const bool at_end = pos[0].is_infinite() || pos[n - 1].is_infinite();
    return {at_end ? PatternKind::EndInfinity : PatternKind::SingleInteriorInfinity, 1};
  }
  if (k == 2 && pos[0].is_infinite() && pos[n - 1].is_infinite()) return {PatternKind::DoubleEndInfinity, 2};
  return {PatternKind::Other, k};
}

// ---------------------------------------------------------------------------
// Move generation

namespace {

// Calls emit(raw) for every move of s. An infinite end stack flagged as pinned
// behaves as an interior infinity: it is never reduced. Reductions of an
// infinite stack to a finite size are produced for targets <= limit only and
// flag `unbounded`.
void enumerate_moves(const std::vector<ExtStack>& s, bool pin_left, bool pin_right, std::optional<Stack> limit,
                     bool& unbounded, const std::function<void(const std::vector<ExtStack>&)>& emit) {
  const std::size_t n = s.size();
  if (n == 0) return;
  std::vector<ExtStack> raw = s;

  auto end_moves = [&](std::size_t i, bool pinned) {
    if (!s[i].is_infinite()) {
      for (Stack k = 1; k <= s[i].value(); ++k) {
        raw[i] = ExtStack(s[i].value() - k);
        emit(raw);
      }
    } else if (!pinned) {
      unbounded = true;
      if (limit)
        for (Stack t = 0; t <= *limit; ++t) {
          raw[i] = ExtStack(t);
          emit(raw);
        }
    }
    raw[i] = s[i];
  };
  end_moves(0, pin_left);
  if (n > 1) end_moves(n - 1, pin_right);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const ExtStack x = s[i];
    const ExtStack y = s[i + 1];
    if (!x.is_infinite() || !y.is_infinite()) {
      // An infinite partner stays infinite; only the finite side shrinks.
      const Stack limit_k = x.is_infinite() ? y.value() : y.is_infinite() ? x.value() : std::min(x.value(), y.value());
      for (Stack k = 1; k <= limit_k; ++k) {
        if (!x.is_infinite()) raw[i] = ExtStack(x.value() - k);
        if (!y.is_infinite()) raw[i + 1] = ExtStack(y.value() - k);
        emit(raw);
      }
    } else {
      if ((i == 0 && pin_left) || (i + 1 == n - 1 && pin_right)) continue;
      unbounded = true;
      if (limit)
        for (Stack t = 0; t <= *limit; ++t) {
          raw[i] = ExtStack(t);
          raw[i + 1] = ExtStack(t);
          emit(raw);
        }
    }
    raw[i] = x;
    raw[i + 1] = y;
  }
}

std::vector<ExtStack> to_ext(const Position& p) {
  std::vector<ExtStack> out;
  out.reserve(p.size() + 2);
  for (Stack s : p.stacks()) out.emplace_back(s);
  return out;
}

void require_component(const Position& p, const char* what) {
  if (p.empty() || !is_canonical(p, RuleSet::Standard))
    throw std::invalid_argument(std::string(what) + " must be a nonempty canonical finite position, got " + p.to_string());
}

ExtPosition concat(std::initializer_list<ExtPosition> parts) {
  std::vector<ExtStack> out;
  for (const ExtPosition& p : parts) out.insert(out.end(), p.stacks().begin(), p.stacks().end());
  return ExtPosition(std::move(out));
}

const ExtPosition kInfSingle{kInf};

ExtPosition all_infinity(std::size_t k) { return ExtPosition(std::vector<ExtStack>(k, kInf)); }

ExtPosition claim_position(Stack left, Stack right) {
  const ExtStack raw[] = {left, kInf, 1, 1, kInf, right};
  return ext_normalize(raw);
}

}  // namespace

ExtOptions ext_options(const ExtPosition& pos, std::optional<Stack> reduction_limit) {
  ExtOptions result;
  const std::vector<ExtStack> s(pos.stacks().begin(), pos.stacks().end());
  enumerate_moves(s, false, false, reduction_limit, result.unbounded,
                  [&](const std::vector<ExtStack>& raw) { result.positions.push_back(ext_normalize(raw)); });
  std::sort(result.positions.begin(), result.positions.end());
  result.positions.erase(std::unique(result.positions.begin(), result.positions.end()), result.positions.end());
  return result;
}

std::string DecisionResult::to_string() const {
  switch (kind) {
    case Kind::P:
      return "P";
    case Kind::N:
      return "N move-to: " + (certificate ? certificate->to_string() : std::string("?"));
    case Kind::Undecided:
      return "UNDECIDED " + reason;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// InfiniteSolver

struct InfiniteSolver::Memo {
  std::mutex mutex;
  std::map<Position, std::vector<Position>> left_options;
  std::map<Position, std::vector<Position>> inner_options;
  std::map<std::pair<Position, Position>, bool> sums;
  std::map<Position, bool> inner;
  std::map<Position, Stack> foreclosed;
  std::set<Stack> claims;
};

InfiniteSolver::InfiniteSolver() : memo_(std::make_shared<Memo>()) {}

InfiniteSolver::InfiniteSolver(Solver finite) : finite_(std::move(finite)), memo_(std::make_shared<Memo>()) {}

std::vector<Position> InfiniteSolver::left_component_options(const Position& alpha) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->left_options.find(alpha); it != memo_->left_options.end()) return it->second;
  }
  std::vector<ExtStack> s = to_ext(alpha);
  s.push_back(kInf);
  bool unbounded = false;
  std::vector<Position> opts;
  enumerate_moves(s, false, true, std::nullopt, unbounded, [&](const std::vector<ExtStack>& raw) {
    const ExtPosition r = ext_normalize(raw);
    if (r.empty() || !r[r.size() - 1].is_infinite() || r.infinity_count() != 1)
      throw std::logic_error("component move on " + alpha.to_string() + " produced " + r.to_string());
    if (r.size() > 1) opts.push_back(r.finite_slice(0, r.size() - 1));
  });
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  std::lock_guard lock(memo_->mutex);
  return memo_->left_options.try_emplace(alpha, std::move(opts)).first->second;
}

std::vector<Position> InfiniteSolver::inner_options(const Position& alpha) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->inner_options.find(alpha); it != memo_->inner_options.end()) return it->second;
  }
  std::vector<ExtStack> s{kInf};
  for (const ExtStack& x : to_ext(alpha)) s.push_back(x);
  s.push_back(kInf);
  bool unbounded = false;
  std::vector<Position> opts;
  enumerate_moves(s, true, true, std::nullopt, unbounded, [&](const std::vector<ExtStack>& raw) {
    const ExtPosition r = ext_normalize(raw);
    if (r.size() >= 3) {
      if (!r[0].is_infinite() || !r[r.size() - 1].is_infinite() || r.infinity_count() != 2)
        throw std::logic_error("inner move on " + alpha.to_string() + " produced " + r.to_string());
      opts.push_back(r.finite_slice(1, r.size() - 1));
    }
  });
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  std::lock_guard lock(memo_->mutex);
  return memo_->inner_options.try_emplace(alpha, std::move(opts)).first->second;
}

// Both arguments are components with the infinity on their right; the sum is
// symmetric, so the memo key is the ordered pair.
bool InfiniteSolver::sum_is_p(const Position& left, const Position& right_reversed) const {
  auto key = std::minmax(left, right_reversed);
  std::pair<Position, Position> k{key.first, key.second};
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->sums.find(k); it != memo_->sums.end()) return it->second;
  }
  bool p = true;
  for (const Position& x : left_component_options(k.first))
    if (sum_is_p(x, k.second)) {
      p = false;
      break;
    }
  if (p)
    for (const Position& y : left_component_options(k.second))
      if (sum_is_p(k.first, y)) {
        p = false;
        break;
      }
  std::lock_guard lock(memo_->mutex);
  return memo_->sums.try_emplace(std::move(k), p).first->second;
}

bool InfiniteSolver::inner_is_p(const Position& alpha) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->inner.find(alpha); it != memo_->inner.end()) return it->second;
  }
  bool p = true;
  for (const Position& x : inner_options(alpha))
    if (inner_is_p(x)) {
      p = false;
      break;
    }
  std::lock_guard lock(memo_->mutex);
  return memo_->inner.try_emplace(alpha, p).first->second;
}

Outcome InfiniteSolver::diminished_sum_outcome(const Position& alpha, const Position& beta) const {
  require_component(alpha, "alpha");
  require_component(beta, "beta");
  return sum_is_p(alpha, beta.reversed()) ? Outcome::P : Outcome::N;
}

Outcome InfiniteSolver::modified_misere_outcome(const Position& alpha) const {
  require_component(alpha, "alpha");
  return inner_is_p(alpha) ? Outcome::P : Outcome::N;
}

Stack InfiniteSolver::foreclosed_value(const Position& alpha) const {
  require_component(alpha, "alpha");
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->foreclosed.find(alpha); it != memo_->foreclosed.end()) return it->second;
  }
  Stack cap = 3 * alpha.total() + 4;
  Stack b = 1;
  for (unsigned round = 0; round <= kForeclosedDoublings; ++round, cap *= 2) {
    for (; b <= cap; ++b) {
      if (sum_is_p(alpha, Position{b})) {
        std::lock_guard lock(memo_->mutex);
        memo_->foreclosed.try_emplace(alpha, b);
        return b;
      }
    }
  }
  throw CapExceeded("no foreclosed value for " + alpha.to_string() + " below " + std::to_string(cap / 2));
}

Outcome InfiniteSolver::claim_check(Stack a) const {
  auto verified = [&](Stack x) {
    std::lock_guard lock(memo_->mutex);
    return memo_->claims.contains(x);
  };
  auto mark = [&](Stack x) {
    std::lock_guard lock(memo_->mutex);
    memo_->claims.insert(x);
  };
  if (verified(a)) return Outcome::P;

  if (!verified(0)) {
    if (modified_misere_outcome(Position{1, 1}) != Outcome::P) throw ClaimFailed("(inf,1,1,inf) is not P");
    mark(0);
  }
  // Bottom-up, so every certificate needed at level x is already verified.
  for (Stack x = 1; x <= a; ++x) {
    if (verified(x)) continue;
    const ExtPosition pos = claim_position(x, x);
    const ExtOptions opts = ext_options(pos);
    if (opts.unbounded) throw ClaimFailed(pos.to_string() + " has an infinite option family");
    for (const ExtPosition& option : opts.positions) {
      bool refuted = false;
      for (const ExtPosition& oriented : {option, option.reversed()}) {
        // (x', inf, 1, 1, inf, x) with x' < x: answer with the mirror image.
        for (Stack smaller = 0; smaller < x && !refuted; ++smaller) {
          if (oriented != claim_position(smaller, x)) continue;
          const ExtPosition cert = claim_position(smaller, smaller);
          const auto replies = ext_options(oriented).positions;
          if (!std::binary_search(replies.begin(), replies.end(), cert) || !verified(smaller))
            throw ClaimFailed("certificate " + cert.to_string() + " does not refute " + oriented.to_string());
          refuted = true;
        }
        // (x, inf, inf, x): reduce the infinite pair to the symmetric P position.
        const ExtStack collapsed[] = {x, kInf, kInf, x};
        if (!refuted && oriented == ext_normalize(collapsed)) {
          const Stack b = x == 1 ? 2 : 1;
          const Position cert{x, b, b, x};
          const auto replies = ext_options(oriented, b).positions;
          if (!std::binary_search(replies.begin(), replies.end(), ExtPosition(cert)) ||
              finite_.outcome(cert) != Outcome::P)
            throw ClaimFailed("certificate " + cert.to_string() + " does not refute " + oriented.to_string());
          refuted = true;
        }
        if (refuted) break;
      }
      if (!refuted) throw ClaimFailed("option " + option.to_string() + " of " + pos.to_string() + " fits no family");
    }
    mark(x);
  }
  return Outcome::P;
}

std::optional<DecisionResult> InfiniteSolver::decide_registered(const ExtPosition& pos) const {
  const ExtPosition six_p{kInf, kInf, 1, 1, kInf, kInf};
  if (pos == six_p)
    return DecisionResult::p("theorem-backed: every option has a P reply (six_infinities reconstruction)");

  auto match = [&](const ExtPosition& x) -> std::optional<DecisionResult> {
    const std::size_t n = x.size();
    // (a, inf, 1, 1, inf, a), a >= 1
    if (n == 6 && !x[0].is_infinite() && x[0] == x[5] && x[1].is_infinite() && x[4].is_infinite() && x[2] == 1 &&
        x[3] == 1) {
      try {
        claim_check(x[0].value());
        return DecisionResult::p("claim reconstruction for a = " + std::to_string(x[0].value()));
      } catch (const ClaimFailed& e) {
        return DecisionResult::undecided(std::string("claim check failed: ") + e.what());
      }
    }
    // (inf, inf, 1, 1, inf, a) and (inf, inf, 1, 1, inf)
    const bool head = n >= 5 && x[0].is_infinite() && x[1].is_infinite() && x[2] == 1 && x[3] == 1 && x[4].is_infinite();
    if (head && n == 5) return DecisionResult::n(ExtPosition{kInf, 1, 1, kInf}, "reduce the end infinity to 0");
    if (head && n == 6 && !x[5].is_infinite())
      return DecisionResult::n(claim_position(x[5].value(), x[5].value()), "reduce the end infinity to match");
    // (inf, inf, 1, 1, t, t) and (inf, inf, 1, 1)
    const bool pair_head = n >= 4 && x[0].is_infinite() && x[1].is_infinite() && x[2] == 1 && x[3] == 1;
    if (pair_head && n == 4) return DecisionResult::n(ExtPosition{2, 2, 1, 1}, "reduce the infinite pair to (2,2)");
    if (pair_head && n == 6 && !x[4].is_infinite() && x[4] == x[5]) {
      const Stack t = x[4].value();
      if (t == 1) return DecisionResult::n(ExtPosition{1, 1, 1, 1, 1, 1}, "reduce the infinite pair to (1,1)");
      if (t == 2) return DecisionResult::n(ExtPosition{1, 1, 2, 2}, "reduce the infinite pair to (0,0)");
      const Stack b = foreclosed_value(Position{t, t, 1, 1});
      return DecisionResult::n(ExtPosition{b, kInf, 1, 1, t, t}, "reduce the end infinity to the foreclosed value");
    }
    return std::nullopt;
  };

  if (auto r = match(pos)) return r;
  if (auto r = match(pos.reversed())) {
    if (r->certificate) r->certificate = r->certificate->reversed();
    return r;
  }
  return std::nullopt;
}

DecisionResult InfiniteSolver::decide(const ExtPosition& raw) const {
  const ExtPosition pos = ext_normalize(raw);
  const PatternClass pattern = classify_pattern(pos);
  const std::size_t n = pos.size();
  switch (pattern.kind) {
    case PatternKind::AllFinite: {
      const Position finite = pos.to_finite();
      if (finite_.outcome(finite) == Outcome::P) return DecisionResult::p("finite solver");
      for (const Position& option : options(finite, RuleSet::Standard))
        if (finite_.outcome(option) == Outcome::P) return DecisionResult::n(ExtPosition(option), "finite solver");
      throw std::logic_error("N position " + finite.to_string() + " without a P option");
    }
    case PatternKind::EndInfinity: {
      const bool inf_left = pos[0].is_infinite();
      const ExtPosition oriented = inf_left ? pos.reversed() : pos;
      const Position prefix = oriented.finite_slice(0, n - 1);
      const Stack last = finite_.unique_last_for_grundy(prefix.stacks(), 0);
      std::vector<Stack> completed = prefix.vector();
      completed.push_back(last);
      ExtPosition cert(normalize(completed, RuleSet::Standard));
      return DecisionResult::n(inf_left ? cert.reversed() : cert, "reduce the end infinity to the unique P completion");
    }
    case PatternKind::SingleInteriorInfinity: {
      std::size_t split = 0;
      while (!pos[split].is_infinite()) ++split;
      const Position alpha = pos.finite_slice(0, split);
      const Position beta = pos.finite_slice(split + 1, n);
      const Position beta_rev = beta.reversed();
      if (sum_is_p(alpha, beta_rev)) return DecisionResult::p("diminished sum solver");
      std::optional<ExtPosition> best;
      auto consider = [&](ExtPosition c) {
        if (!best || c < *best) best = std::move(c);
      };
      for (const Position& a2 : left_component_options(alpha))
        if (sum_is_p(a2, beta_rev)) consider(concat({ExtPosition(a2), kInfSingle, ExtPosition(beta)}));
      for (const Position& b2 : left_component_options(beta_rev))
        if (sum_is_p(alpha, b2)) consider(concat({ExtPosition(alpha), kInfSingle, ExtPosition(b2.reversed())}));
      if (!best) throw std::logic_error("N diminished sum without a P option: " + pos.to_string());
      return DecisionResult::n(*best, "diminished sum solver");
    }
    case PatternKind::DoubleEndInfinity: {
      const Position alpha = pos.finite_slice(1, n - 1);
      if (inner_is_p(alpha)) return DecisionResult::p("modified misere solver");
      for (const Position& a2 : inner_options(alpha))
        if (inner_is_p(a2)) return DecisionResult::n(concat({kInfSingle, ExtPosition(a2), kInfSingle}), "modified misere solver");
      throw std::logic_error("N modified misere position without a P option: " + pos.to_string());
    }
    case PatternKind::AllInfinity:
      switch (pattern.infinities) {
        case 1:
          return DecisionResult::n(ExtPosition{}, "reduce to 0");
        case 2:
          return DecisionResult::n(ExtPosition{}, "reduce the pair to (0,0)");
        case 3:
          return DecisionResult::p("every option (t,inf,inf) or (t,t,inf) has the P option (t,t,t)");
        case 4:
          return DecisionResult::n(all_infinity(3), "reduce an end to 0");
        case 5:
          return DecisionResult::n(all_infinity(3), "reduce an end pair to (0,0)");
        case 6:
          return DecisionResult::n(ExtPosition{kInf, kInf, 1, 1, kInf, kInf}, "reduce the middle pair to (1,1)");
        default:
          return DecisionResult::undecided("open problem: inf^" + std::to_string(pattern.infinities));
      }
    case PatternKind::Other:
      if (auto r = decide_registered(pos)) return *r;
      return DecisionResult::undecided("no exact solver for this pattern of " + std::to_string(pattern.infinities) +
                                       " infinities");
  }
  return DecisionResult::undecided("unreachable");
}

// ---------------------------------------------------------------------------
// Verification suites

std::vector<Position> compositions_up_to(Stack max_total) {
  std::vector<Position> out;
  std::vector<Stack> cur;
  std::function<void(Stack)> rec = [&](Stack left) {
    if (!cur.empty()) out.emplace_back(cur);
    for (Stack x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(max_total);
  std::sort(out.begin(), out.end());
  return out;
}

namespace infinite_suites {

namespace {

std::string outer(const Position& alpha) { return "(inf," + alpha.to_string() + ",inf)"; }

bool contains(const ExtOptions& opts, const ExtPosition& x) {
  return std::binary_search(opts.positions.begin(), opts.positions.end(), x);
}

}  // namespace

VerificationReport outer_infinities(const InfiniteSolver& solver, Stack bound) {
  VerificationReport r{"outer_infinities", "bound=" + std::to_string(bound)};
  auto check = [&](const Position& alpha, bool expected) {
    ++r.checked;
    const bool actual = solver.modified_misere_outcome(alpha) == Outcome::P;
    if (actual != expected) r.counterexamples.push_back(outer(alpha) + (actual ? " is P" : " is N"));
  };
  for (Stack a = 1; a <= bound; ++a) check(Position{a}, a == 1);
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b) check(Position{a, b}, beatty::is_wythoff_p(a - 1, b - 1));
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b)
      for (Stack c = 1; c <= bound; ++c) check(Position{a, b, c}, a == c && a > 1);
  return r;
}

VerificationReport outer_corollary(const InfiniteSolver& solver, Stack bound) {
  VerificationReport r{"outer_corollary", "bound=" + std::to_string(bound)};
  auto check = [&](const Position& alpha, bool expected) {
    ++r.checked;
    const bool actual = solver.modified_misere_outcome(alpha) == Outcome::P;
    if (actual != expected) r.counterexamples.push_back(outer(alpha) + (actual ? " is P" : " is N"));
  };
  for (Stack a = 1; a <= bound; ++a)
    for (Stack b = 1; b <= bound; ++b) {
      check(Position{1, a, b, 1}, (a == 2 && b > 2) || (b == 2 && a > 2));
      check(Position{a, 1, b, 1}, a == 2 && b >= 2);
      check(Position{a, 1, 1, b}, a == b && a > 1);
    }
  return r;
}

VerificationReport triple_infinity(const InfiniteSolver& solver, Stack bound) {
  VerificationReport r{"triple_infinity", "bound=" + std::to_string(bound)};
  const ExtPosition inf3 = all_infinity(3);
  for (Stack t = 0; t <= bound; ++t) {
    const ExtStack a[] = {t, kInf, kInf};
    const ExtStack b[] = {t, t, kInf};
    const Position target{t, t, t};
    const ExtPosition cert = ext_normalize(ExtPosition(target));
    ++r.checked;
    if (solver.finite().outcome(normalize(target, RuleSet::Standard)) != Outcome::P)
      r.counterexamples.push_back("(" + target.to_string() + ") is N");
    for (const ExtPosition& option : {ext_normalize(a), ext_normalize(b)}) {
      ++r.checked;
      if (!contains(ext_options(option, t), cert))
        r.counterexamples.push_back(option.to_string() + " cannot move to " + cert.to_string());
    }
  }
  // The two families (and mirrors) exhaust the options of inf^3.
  for (const ExtPosition& option : ext_options(inf3, bound).positions) {
    ++r.checked;
    bool known = false;
    for (Stack t = 0; t <= bound && !known; ++t) {
      const ExtStack a[] = {t, kInf, kInf};
      const ExtStack b[] = {t, t, kInf};
      for (const ExtPosition& form : {ext_normalize(a), ext_normalize(b)})
        known = known || option == form || option == form.reversed();
    }
    if (!known) r.counterexamples.push_back("unexpected option " + option.to_string() + " of inf^3");
  }
  ++r.checked;
  if (solver.decide(inf3).kind != DecisionResult::Kind::P) r.counterexamples.push_back("decide(inf^3) is not P");
  return r;
}

VerificationReport six_infinities(const InfiniteSolver& solver, Stack bound) {
  VerificationReport r{"six_infinities", "bound=" + std::to_string(bound)};
  r.notes.push_back("infinite option families checked for reductions <= bound; the tails rest on the inductive claim");
  const ExtPosition inf4 = all_infinity(4);
  const ExtPosition pivot{kInf, kInf, 1, 1, kInf, kInf};

  ++r.checked;
  {
    const DecisionResult d4 = solver.decide(inf4);
    if (d4.kind != DecisionResult::Kind::N || !d4.certificate || solver.decide(*d4.certificate).kind != DecisionResult::Kind::P)
      r.counterexamples.push_back("inf^4 is not refuted by a P option");
  }
  ++r.checked;
  if (!contains(ext_options(all_infinity(6), 1), pivot))
    r.counterexamples.push_back("the pivot is not an option of inf^6");

  for (Stack a = 0; a <= bound; ++a) {
    ++r.checked;
    try {
      solver.claim_check(a);
    } catch (const ClaimFailed& e) {
      r.counterexamples.push_back("claim for a=" + std::to_string(a) + ": " + e.what());
    }
  }

  // Every option of the pivot must have a P reply.
  auto refute = [&](const ExtPosition& option) -> std::optional<std::string> {
    for (const ExtPosition& oriented : {option, option.reversed()}) {
      if (oriented == inf4) return std::nullopt;
      const std::size_t n = oriented.size();
      // (inf, inf, 1, 1, inf, t) and (inf, inf, 1, 1, inf)
      if ((n == 5 || n == 6) && oriented[0].is_infinite() && oriented[1].is_infinite() && oriented[2] == 1 &&
          oriented[3] == 1 && oriented[4].is_infinite() && (n == 5 || !oriented[5].is_infinite())) {
        const Stack t = n == 5 ? 0 : oriented[5].value();
        const ExtPosition cert = claim_position(t, t);
        if (!contains(ext_options(oriented, t), cert)) return "claim certificate is not an option of " + oriented.to_string();
        try {
          solver.claim_check(t);
        } catch (const ClaimFailed& e) {
          return std::string("claim failed: ") + e.what();
        }
        return std::nullopt;
      }
      // (inf, inf, 1, 1, t, t) and (inf, inf, 1, 1)
      if ((n == 4 || n == 6) && oriented[0].is_infinite() && oriented[1].is_infinite() && oriented[2] == 1 &&
          oriented[3] == 1 && (n == 4 || (!oriented[4].is_infinite() && oriented[4] == oriented[5]))) {
        const Stack t = n == 4 ? 0 : oriented[4].value();
        if (t <= 2) {
          const Position finite_cert = t == 0 ? Position{2, 2, 1, 1} : t == 1 ? Position{1, 1, 1, 1, 1, 1} : Position{1, 1, 2, 2};
          if (!contains(ext_options(oriented, 2), ExtPosition(finite_cert)))
            return finite_cert.to_string() + " is not an option of " + oriented.to_string();
          if (solver.finite().outcome(finite_cert) != Outcome::P) return finite_cert.to_string() + " is not P";
          return std::nullopt;
        }
        const Stack b = solver.foreclosed_value(Position{t, t, 1, 1});
        const ExtPosition cert{b, kInf, 1, 1, t, t};
        if (!contains(ext_options(oriented, b), cert)) return cert.to_string() + " is not an option of " + oriented.to_string();
        if (solver.diminished_sum_outcome(Position{b}, Position{1, 1, t, t}) != Outcome::P)
          return cert.to_string() + " is not P";
        return std::nullopt;
      }
    }
    return "option " + option.to_string() + " fits no family";
  };

  const ExtOptions pivot_options = ext_options(pivot, bound);
  for (const ExtPosition& option : pivot_options.positions) {
    ++r.checked;
    if (auto failure = refute(option)) r.counterexamples.push_back(*failure);
  }
  ++r.checked;
  const DecisionResult d6 = solver.decide(all_infinity(6));
  if (d6.kind != DecisionResult::Kind::N || d6.certificate != pivot) r.counterexamples.push_back("decide(inf^6) is not N via the pivot");
  return r;
}

VerificationReport foreclosed_iff(const InfiniteSolver& solver, Stack bound) {
  VerificationReport r{"foreclosed_iff", "bound=" + std::to_string(bound)};
  r.conjecture = true;
  const auto comps = compositions_up_to(bound);
  std::map<Position, std::optional<Stack>> values;
  for (const Position& c : comps) {
    try {
      values[c] = solver.foreclosed_value(c);
    } catch (const CapExceeded& e) {
      values[c] = std::nullopt;
      r.counterexamples.push_back(std::string("no foreclosed value: ") + e.what());
    }
  }
  for (const Position& alpha : comps)
    for (const Position& beta : comps) {
      ++r.checked;
      const auto& va = values[alpha];
      const auto& vb = values[beta.reversed()];
      if (!va || !vb) continue;
      const bool p = solver.diminished_sum_outcome(alpha, beta) == Outcome::P;
      if (p != (*va == *vb))
        r.counterexamples.push_back("(" + alpha.to_string() + ",inf," + beta.to_string() + ") is " + (p ? "P" : "N") +
                                    " with foreclosed values " + std::to_string(*va) + " and " + std::to_string(*vb));
    }
  return r;
}

}  // namespace infinite_suites

std::span<const std::string_view> infinite_suite_names() {
  static constexpr std::array<std::string_view, 5> names{"outer_infinities", "outer_corollary", "six_infinities",
                                                          "triple_infinity", "foreclosed_iff"};
  return names;
}

std::optional<VerificationReport> verify_infinite(std::string_view suite, Stack bound, const InfiniteSolver& solver) {
  using namespace infinite_suites;
  if (suite == "outer_infinities") return outer_infinities(solver, bound);
  if (suite == "outer_corollary") return outer_corollary(solver, bound);
  if (suite == "six_infinities") return six_infinities(solver, bound);
  if (suite == "triple_infinity") return triple_infinity(solver, bound);
  if (suite == "foreclosed_iff") return foreclosed_iff(solver, bound);
  return std::nullopt;
}

}  // namespace twystoff
