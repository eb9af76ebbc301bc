#include "twystoff/memo.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "twystoff/errors.hpp"

namespace twystoff {

namespace {

// Key layout: one rules byte, then each stack as a LEB128 varint. Short
// positions of small stacks stay inside the std::string small buffer.
void put_varint(std::string& out, Stack v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::vector<Stack> decode_stacks(std::string_view key) {
  std::vector<Stack> stacks;
  Stack v = 0;
  unsigned shift = 0;
  for (std::size_t i = 1; i < key.size(); ++i) {
    const auto byte = static_cast<unsigned char>(key[i]);
    v |= static_cast<Stack>(byte & 0x7f) << shift;
    if (byte & 0x80) {
      shift += 7;
    } else {
      stacks.push_back(v);
      v = 0;
      shift = 0;
    }
  }
  return stacks;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_u64(std::string_view text, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw FormatError("memo line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string MemoTable::encode(std::span<const Stack> stacks, RuleSet rules) {
  std::string key;
  key.reserve(1 + stacks.size());
  key.push_back(static_cast<char>(rules));
  for (Stack s : stacks) put_varint(key, s);
  return key;
}

MemoTable::Shard& MemoTable::shard_for(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<MemoEntry> MemoTable::find(std::span<const Stack> stacks, RuleSet rules) const {
  const std::string key = encode(stacks, rules);
  const Shard& shard = shard_for(key);
  std::shared_lock lock(shard.mutex);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  return it->second;
}

MemoEntry MemoTable::insert(std::span<const Stack> stacks, RuleSet rules, MemoEntry entry) {
  if (entry.grundy && (*entry.grundy == 0) != (entry.outcome == Outcome::P))
    throw std::logic_error("memo entry with inconsistent outcome and Grundy value");
  std::string key = encode(stacks, rules);
  Shard& shard = shard_for(key);
  std::unique_lock lock(shard.mutex);
  auto [it, inserted] = shard.map.try_emplace(std::move(key), entry);
  if (inserted) return it->second;
  MemoEntry& existing = it->second;
  if (existing.outcome != entry.outcome)
    throw std::logic_error("memo re-derivation changed the outcome of " + Position(decode_stacks(it->first)).to_string());
  if (entry.grundy) {
    if (existing.grundy && *existing.grundy != *entry.grundy)
      throw std::logic_error("memo re-derivation changed the Grundy value of " +
                             Position(decode_stacks(it->first)).to_string());
    existing.grundy = entry.grundy;
  }
  return existing;
}

std::size_t MemoTable::size() const {
  std::size_t n = 0;
  for (const Shard& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    n += shard.map.size();
  }
  return n;
}

void MemoTable::clear() {
  for (Shard& shard : shards_) {
    std::unique_lock lock(shard.mutex);
    shard.map.clear();
  }
}

std::vector<MemoRecord> MemoTable::records() const {
  std::vector<MemoRecord> out;
  for (const Shard& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    for (const auto& [key, entry] : shard.map)
      out.push_back({static_cast<RuleSet>(key.front()), Position(decode_stacks(key)), entry});
  }
  std::sort(out.begin(), out.end(), [](const MemoRecord& x, const MemoRecord& y) {
    if (x.rules != y.rules) return x.rules < y.rules;
    return x.key < y.key;
  });
  return out;
}

void MemoTable::save(std::ostream& out) const {
  const auto recs = records();
  out << kHeader << '\n';
  for (const MemoRecord& r : recs) {
    out << to_string(r.rules) << ';';
    for (std::size_t i = 0; i < r.key.size(); ++i) {
      if (i) out << ',';
      out << r.key[i];
    }
    out << ';' << to_char(r.entry.outcome) << ';';
    if (r.entry.grundy)
      out << *r.entry.grundy;
    else
      out << '-';
    out << '\n';
  }
  out << "END " << recs.size() << '\n';
}

void MemoTable::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw FormatError("memo file does not start with '" + std::string(kHeader) + "'");
  std::size_t line_no = 1;
  std::vector<MemoRecord> pending;
  bool ended = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (in.eof()) throw FormatError("memo line " + std::to_string(line_no) + " is not newline-terminated");
    if (ended) throw FormatError("memo data after END trailer");
    if (line.starts_with("END ")) {
      if (parse_u64(std::string_view(line).substr(4), line_no) != pending.size())
        throw FormatError("memo record count does not match END trailer");
      ended = true;
      continue;
    }
    const auto fields = split(line, ';');
    if (fields.size() != 4) throw FormatError("memo line " + std::to_string(line_no) + ": expected 4 fields");
    MemoRecord rec;
    const auto rules = parse_ruleset(fields[0]);
    if (!rules) throw FormatError("memo line " + std::to_string(line_no) + ": unknown rule set");
    rec.rules = *rules;
    std::vector<Stack> stacks;
    if (!fields[1].empty())
      for (auto part : split(fields[1], ',')) stacks.push_back(parse_u64(part, line_no));
    rec.key = Position(std::move(stacks));
    if (fields[2] == "P")
      rec.entry.outcome = Outcome::P;
    else if (fields[2] == "N")
      rec.entry.outcome = Outcome::N;
    else
      throw FormatError("memo line " + std::to_string(line_no) + ": outcome must be P or N");
    if (fields[3] != "-") rec.entry.grundy = parse_u64(fields[3], line_no);
    if (rec.entry.grundy && (*rec.entry.grundy == 0) != (rec.entry.outcome == Outcome::P))
      throw FormatError("memo line " + std::to_string(line_no) + ": Grundy value contradicts outcome");
    if (canonical_key(rec.key) != rec.key || !is_canonical(rec.key, rec.rules))
      throw FormatError("memo line " + std::to_string(line_no) + ": key is not canonical");
    pending.push_back(std::move(rec));
  }
  if (!ended) throw FormatError("memo file is truncated (no END trailer)");
  for (const MemoRecord& r : pending) {
    try {
      insert(r.key.stacks(), r.rules, r.entry);
    } catch (const std::logic_error& e) {
      throw FormatError(std::string("memo file conflicts with table: ") + e.what());
    }
  }
}

void save_memo(const MemoTable& table, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + destination.string() + "' for writing");
  table.save(out);
  out.flush();
  if (!out) throw IoError("write to '" + destination.string() + "' failed");
}

void load_memo(MemoTable& table, const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError("cannot open '" + source.string() + "' for reading");
  table.load(in);
}

}  // namespace twystoff
