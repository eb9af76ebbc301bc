#include "twystoff/position.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "twystoff/errors.hpp"

namespace twystoff {

namespace {

Stack checked_add(Stack x, Stack y) {
  Stack sum = 0;
  if (__builtin_add_overflow(x, y, &sum)) throw std::overflow_error("stack size overflows 64 bits");
  return sum;
}

void normalize_into(std::span<const Stack> raw, RuleSet rules, std::vector<Stack>& out) {
  out.clear();
  if (rules == RuleSet::Frozen) {
    auto first = std::find_if(raw.begin(), raw.end(), [](Stack s) { return s != 0; });
    auto last = std::find_if(raw.rbegin(), raw.rend(), [](Stack s) { return s != 0; }).base();
    if (first < last) out.assign(first, last);
    return;
  }
  std::size_t zeros = 0;
  for (Stack s : raw) {
    if (s == 0) {
      ++zeros;
      continue;
    }
    if (!out.empty() && zeros % 2 == 1)
      out.back() = checked_add(out.back(), s);
    else
      out.push_back(s);
    zeros = 0;
  }
}

void check_heavy(const Position& pos, RuleSet rules) {
  if (rules == RuleSet::HeavyHanded && pos.size() > 3)
    throw HeavyHandedUndefined("heavy-handed rules are defined for at most three stacks, got " +
                               std::to_string(pos.size()));
}

// Which pairs may be reduced; heavy-handed restricts three-stack positions to
// the pair holding the larger outer stack (both on a tie).
bool pair_allowed(const Position& pos, std::size_t i, RuleSet rules) {
  if (rules != RuleSet::HeavyHanded || pos.size() != 3) return true;
  return i == 0 ? pos[0] >= pos[2] : pos[2] >= pos[0];
}

}  // namespace

std::string_view to_string(RuleSet rules) {
  switch (rules) {
    case RuleSet::Standard:
      return "standard";
    case RuleSet::Frozen:
      return "frozen";
    case RuleSet::HeavyHanded:
      return "heavy";
  }
  return "?";
}

std::optional<RuleSet> parse_ruleset(std::string_view text) {
  if (text == "standard") return RuleSet::Standard;
  if (text == "frozen") return RuleSet::Frozen;
  if (text == "heavy" || text == "heavy-handed") return RuleSet::HeavyHanded;
  return std::nullopt;
}

Stack Position::total() const {
  Stack sum = 0;
  for (Stack s : stacks_) sum = checked_add(sum, s);
  return sum;
}

Position Position::reversed() const { return Position(std::vector<Stack>(stacks_.rbegin(), stacks_.rend())); }

std::string Position::to_string() const {
  if (stacks_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < stacks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(stacks_[i]);
  }
  return out;
}

std::string Move::to_string() const {
  switch (kind) {
    case Kind::LeftEnd:
      return "L " + std::to_string(count);
    case Kind::RightEnd:
      return "R " + std::to_string(count);
    case Kind::Pair:
      return "P " + std::to_string(index) + " " + std::to_string(count);
  }
  return "?";
}

Position normalize(std::span<const Stack> raw, RuleSet rules) {
  std::vector<Stack> out;
  normalize_into(raw, rules, out);
  return Position(std::move(out));
}

bool is_canonical(const Position& pos, RuleSet rules) {
  if (pos.empty()) return true;
  if (pos.front() == 0 || pos.back() == 0) return false;
  if (rules == RuleSet::Frozen) return true;
  return std::find(pos.stacks().begin(), pos.stacks().end(), Stack{0}) == pos.stacks().end();
}

std::vector<Move> legal_moves(const Position& pos, RuleSet rules) {
  check_heavy(pos, rules);
  std::vector<Move> moves;
  if (pos.empty()) return moves;
  for (Stack k = 1; k <= pos.front(); ++k) moves.push_back(Move::left(k));
  if (pos.size() > 1)
    for (Stack k = 1; k <= pos.back(); ++k) moves.push_back(Move::right(k));
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    if (!pair_allowed(pos, i, rules)) continue;
    const Stack limit = std::min(pos[i], pos[i + 1]);
    for (Stack k = 1; k <= limit; ++k) moves.push_back(Move::pair(i, k));
  }
  return moves;
}

bool is_legal(const Position& pos, const Move& m, RuleSet rules) {
  check_heavy(pos, rules);
  if (pos.empty() || m.count == 0) return false;
  switch (m.kind) {
    case Move::Kind::LeftEnd:
      return m.count <= pos.front();
    case Move::Kind::RightEnd:
      return pos.size() > 1 && m.count <= pos.back();
    case Move::Kind::Pair:
      return m.index + 1 < pos.size() && pair_allowed(pos, m.index, rules) && m.count <= pos[m.index] &&
             m.count <= pos[m.index + 1];
  }
  return false;
}

Position apply(const Position& pos, const Move& m, RuleSet rules) {
  if (!is_legal(pos, m, rules))
    throw IllegalMove("move '" + m.to_string() + "' is not legal in " + pos.to_string());
  std::vector<Stack> raw = pos.vector();
  switch (m.kind) {
    case Move::Kind::LeftEnd:
      raw.front() -= m.count;
      break;
    case Move::Kind::RightEnd:
      raw.back() -= m.count;
      break;
    case Move::Kind::Pair:
      raw[m.index] -= m.count;
      raw[m.index + 1] -= m.count;
      break;
  }
  return normalize(raw, rules);
}

void for_each_option(const Position& pos, RuleSet rules,
                     const std::function<void(std::span<const Stack>)>& visit) {
  check_heavy(pos, rules);
  if (pos.empty()) return;
  std::vector<Stack> raw = pos.vector();
  std::vector<Stack> out;
  out.reserve(raw.size());
  const std::size_t n = raw.size();

  auto emit = [&] {
    normalize_into(raw, rules, out);
    visit(out);
  };
  for (Stack k = 1; k <= pos.front(); ++k) {
    raw[0] = pos[0] - k;
    emit();
  }
  raw[0] = pos[0];
  if (n > 1) {
    for (Stack k = 1; k <= pos.back(); ++k) {
      raw[n - 1] = pos[n - 1] - k;
      emit();
    }
    raw[n - 1] = pos[n - 1];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!pair_allowed(pos, i, rules)) continue;
    const Stack limit = std::min(pos[i], pos[i + 1]);
    for (Stack k = 1; k <= limit; ++k) {
      raw[i] = pos[i] - k;
      raw[i + 1] = pos[i + 1] - k;
      emit();
    }
    raw[i] = pos[i];
    raw[i + 1] = pos[i + 1];
  }
}

std::vector<Position> options(const Position& pos, RuleSet rules) {
  std::vector<Position> result;
  for_each_option(pos, rules, [&](std::span<const Stack> opt) {
    result.emplace_back(std::vector<Stack>(opt.begin(), opt.end()));
  });
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

Position canonical_key(const Position& pos) {
  const auto s = pos.stacks();
  if (std::lexicographical_compare(s.rbegin(), s.rend(), s.begin(), s.end())) return pos.reversed();
  return pos;
}

Position parse_position(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in position '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Stack> stacks;
  std::size_t i = 0;
  bool expect_value = false;  // a comma was just consumed
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ',') {
      if (stacks.empty() || expect_value) throw ParseError("empty entry in position '" + std::string(text) + "'");
      expect_value = true;
      ++i;
      continue;
    }
    Stack value = 0;
    const char* begin = text.data() + i;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("stack size out of range in '" + std::string(text) + "'");
    if (ec != std::errc() || ptr == begin)
      throw ParseError("expected a nonnegative integer at '" + std::string(text.substr(i)) + "'");
    stacks.push_back(value);
    expect_value = false;
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (expect_value) throw ParseError("trailing comma in position '" + std::string(text) + "'");
  return Position(std::move(stacks));
}

}  // namespace twystoff
