#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twystoff/position.hpp"

namespace twystoff {

enum class Outcome : std::uint8_t { P, N };

inline char to_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

struct MemoEntry {
  Outcome outcome = Outcome::P;
  std::optional<std::uint64_t> grundy;

  friend bool operator==(const MemoEntry&, const MemoEntry&) = default;
};

struct MemoRecord {
  RuleSet rules = RuleSet::Standard;
  Position key;  // canonical_key form
  MemoEntry entry;

  friend bool operator==(const MemoRecord&, const MemoRecord&) = default;
};

/// Thread-safe solved-position store keyed on (canonical_key, rules).
///
/// Writes are insert-if-absent. The only mutation an existing entry accepts is
/// filling in a missing Grundy value, and only one consistent with its stored
/// outcome; anything else is a solver bug and throws std::logic_error.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  /// `stacks` must already be in canonical_key orientation.
  std::optional<MemoEntry> find(std::span<const Stack> stacks, RuleSet rules) const;
  MemoEntry insert(std::span<const Stack> stacks, RuleSet rules, MemoEntry entry);

  std::size_t size() const;
  void clear();

  /// All records, sorted by (rules, key).
  std::vector<MemoRecord> records() const;

  void save(std::ostream& out) const;
  /// Adds every record of the stream to this table. Throws FormatError.
  void load(std::istream& in);

  static constexpr std::string_view kHeader = "TWYSTOFF-MEMO v1";

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, MemoEntry> map;
  };

  static std::string encode(std::span<const Stack> stacks, RuleSet rules);
  Shard& shard_for(const std::string& key) const;

  mutable std::array<Shard, kShards> shards_;
};

/// Throws IoError if the destination cannot be written.
void save_memo(const MemoTable& table, const std::filesystem::path& destination);
/// Throws IoError if unreadable, FormatError if corrupt or of another version.
void load_memo(MemoTable& table, const std::filesystem::path& source);

}  // namespace twystoff
