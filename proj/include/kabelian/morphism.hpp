#pragma once

// Letter-to-word substitutions, their fixed points, and the other infinite
// words used as repetition-scan sources.

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "kabelian/repetition.hpp"
#include "kabelian/word.hpp"

namespace kabelian {

class Morphism {
 public:
  // images[c] is the image of letter c; every image must be non-empty and
  // lie over the target alphabet.
  Morphism(std::vector<Word> images, Alphabet target);

  Alphabet source() const { return Alphabet(static_cast<int>(images_.size())); }
  Alphabet target() const noexcept { return target_; }
  const Word& image(Letter c) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  // Image of c starts with c and is longer than one letter.
  bool prolongable(Letter c) const;

 private:
  std::vector<Word> images_;
  Alphabet target_;
};

// Parses "0:01,1:10" (digit or letter presentation on both sides). Letters
// must be listed as 0, 1, 2, ... in order.
Morphism parse_morphism(std::string_view text);

Morphism thue_morse_morphism();         // 0->01, 1->10
Morphism cube_free_binary_morphism();   // 0->001, 1->011
Morphism ternary_to_binary_morphism();  // 0->001011, 1->001101, 2->011001

// Throws a domain error for unknown names.
Morphism morphism_preset(std::string_view name);

Word apply(const Morphism& m, const Word& w);

bool images_pairwise_equivalent(const Morphism& m, int k);

struct FixedPoint {
  Morphism morphism;
  Letter seed = 0;
};

// c_i = number of zeros in the binary expansion of i, mod 2; c_0 = 0.
struct ZerosMod2 {};

struct ExplicitWord {
  Word word;
};

using Sequence = std::variant<FixedPoint, ZerosMod2, ExplicitWord>;

// First n letters of the sequence (fewer for a short explicit word).
Word prefix(const Sequence& seq, std::size_t n);

inline constexpr std::size_t kMaxScanLimit = 10'000'000;

std::optional<Occurrence> scan_earliest_power(const Sequence& seq,
                                              PowerSpec spec,
                                              std::size_t limit);

}  // namespace kabelian
