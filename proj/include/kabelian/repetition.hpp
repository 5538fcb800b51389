#pragma once

#include <cstddef>
#include <optional>

#include "kabelian/word.hpp"

namespace kabelian {

// A k-abelian p-power is a word made of p consecutive blocks of equal length
// that are pairwise k-abelian equivalent. p = 2 gives squares, p = 3 cubes.
struct PowerSpec {
  int k = 2;
  int p = 2;

  // Throws a domain error unless k >= 1 and p >= 2.
  void validate() const;

  friend bool operator==(const PowerSpec&, const PowerSpec&) = default;
};

struct Occurrence {
  std::size_t start = 0;
  std::size_t total_length = 0;

  std::size_t end() const noexcept { return start + total_length; }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

bool is_power(const Word& w, PowerSpec spec);

// Earliest occurrence: smallest end position, then smallest length.
std::optional<Occurrence> find_power(const Word& w, PowerSpec spec);

// Block length of the shortest p-power that is a suffix of the table's word,
// if any. This is the pruning test of the search: a word is power-free iff
// none of its prefixes ends with a power.
std::optional<std::size_t> shortest_suffix_power(const WindowCountTable& table,
                                                 PowerSpec spec);

inline bool suffix_power_end(const WindowCountTable& table, PowerSpec spec) {
  return shortest_suffix_power(table, spec).has_value();
}

bool is_power_free(const Word& w, PowerSpec spec);

}  // namespace kabelian
