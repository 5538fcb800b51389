#pragma once

// Exhaustive depth-first enumeration of k-abelian power-free words.
//
// The set of power-free words is closed under taking prefixes, so it forms a
// tree rooted at the empty word (or at a fixed prefix). The search walks this
// tree keeping one mutable word and its WindowCountTable, and prunes a child as
// soon as its word ends with a power.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kabelian/repetition.hpp"
#include "kabelian/word.hpp"

namespace kabelian {

inline constexpr std::uint64_t kDefaultCountLimit = std::uint64_t{1} << 40;

struct SearchConfig {
  int alphabet_size = 2;
  PowerSpec spec;
  std::size_t max_length = 1;
  // Fixed prefix every counted word must extend. Symmetry reduction is not
  // applied when a prefix is present.
  std::optional<Word> prefix;
  // Only walk words whose letters first appear in the order 0, 1, 2, ... and
  // weight each by the number of injective relabelings.
  bool symmetry_reduction = true;
  // Abort once this many tree nodes have been visited.
  std::optional<std::uint64_t> count_limit = kDefaultCountLimit;
  std::size_t witness_cap = 1000;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t split_depth = 8;
};

// counts[i] is the number of power-free words of length base_length + i.
struct LevelCounts {
  std::size_t base_length = 0;
  std::vector<std::uint64_t> counts;

  // Zero outside the stored range.
  std::uint64_t at(std::size_t length) const noexcept;
  std::size_t end_length() const noexcept { return base_length + counts.size(); }

  LevelCounts& operator+=(const LevelCounts& other);
  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

enum class SearchStatus { complete, limit_exceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::complete;
  LevelCounts levels;
  std::size_t longest_length = 0;
  // Words of length longest_length, lexicographically smallest first, at most
  // witness_cap of them.
  std::vector<Word> witnesses;
  std::uint64_t nodes = 0;
};

SearchOutcome enumerate(const SearchConfig& config);

struct LongestResult {
  SearchStatus status = SearchStatus::complete;
  std::size_t length = 0;
  // True when words of length max_length exist, so length is only a lower
  // bound on the maximum.
  bool ceiling_reached = false;
  std::uint64_t witness_count = 0;
  std::vector<Word> witnesses;
};

LongestResult longest(const SearchConfig& config);

enum class LetterOrder {
  ascending,
  // Ascending, except the letter whose extension was most recently pruned is
  // tried last.
  recent_failure_last,
};

enum class GrowStatus { reached, exhausted, limit_exceeded };

struct GrowResult {
  GrowStatus status = GrowStatus::reached;
  // The target-length word when reached; otherwise the first longest word met.
  Word word;
  std::size_t longest_seen = 0;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxGrowTarget = 1'000'000;

// Depth-first backtracking towards one power-free word of length target.
// Single-threaded; config.max_length is ignored.
GrowResult build_long_word(const SearchConfig& config, std::size_t target,
                           LetterOrder order = LetterOrder::ascending);

// Counts of power-free extensions of prefix by 0..delta letters. Throws
// ErrorCode::limit_exceeded if the node budget runs out.
LevelCounts count_extensions(const Word& prefix, SearchConfig config,
                             std::size_t delta);

}  // namespace kabelian
