#include "kabelian/morphism.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kabelian/error.hpp"
#include "kabelian/text.hpp"

namespace kabelian {

Morphism::Morphism(std::vector<Word> images, Alphabet target)
    : images_(std::move(images)), target_(target) {
  if (images_.empty() ||
      images_.size() > static_cast<std::size_t>(kMaxAlphabetSize)) {
    fail(ErrorCode::domain, "morphism needs 1.." +
                                std::to_string(kMaxAlphabetSize) + " images");
  }
  for (const Word& img : images_) {
    if (img.empty()) fail(ErrorCode::domain, "morphism images must be non-empty");
    require_letters_in(img, target_);
  }
}

const Word& Morphism::image(Letter c) const {
  if (c >= images_.size()) {
    fail(ErrorCode::domain, "letter " + std::to_string(int{c}) +
                                " outside the morphism's source alphabet");
  }
  return images_[c];
}

bool Morphism::prolongable(Letter c) const {
  if (c >= images_.size() || c >= target_.size()) return false;
  const Word& img = images_[c];
  return img.size() >= 2 && img[0] == c;
}

Morphism parse_morphism(std::string_view text) {
  std::vector<Word> images;
  Letter top = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view rule = text.substr(pos, comma - pos);
    const std::size_t colon = rule.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorCode::domain, "morphism rule '" + std::string(rule) +
                                  "' is not of the form letter:image");
    }
    const Word lhs = parse_word(rule.substr(0, colon));
    if (lhs.size() != 1 || lhs[0] != images.size()) {
      fail(ErrorCode::domain,
           "morphism rules must list letters 0, 1, 2, ... in order");
    }
    Word rhs = parse_word(rule.substr(colon + 1));
    for (Letter c : rhs) top = std::max(top, c);
    images.push_back(std::move(rhs));
    pos = comma + 1;
  }
  const int target = std::max(int{top} + 1, static_cast<int>(images.size()));
  return Morphism(std::move(images), Alphabet(target));
}

Morphism thue_morse_morphism() {
  return Morphism({Word{0, 1}, Word{1, 0}}, Alphabet(2));
}

Morphism cube_free_binary_morphism() {
  return Morphism({Word{0, 0, 1}, Word{0, 1, 1}}, Alphabet(2));
}

Morphism ternary_to_binary_morphism() {
  return Morphism({Word{0, 0, 1, 0, 1, 1}, Word{0, 0, 1, 1, 0, 1},
                   Word{0, 1, 1, 0, 0, 1}},
                  Alphabet(2));
}

Morphism morphism_preset(std::string_view name) {
  if (name == "thue_morse") return thue_morse_morphism();
  if (name == "cube_free_binary") return cube_free_binary_morphism();
  if (name == "ternary_to_binary") return ternary_to_binary_morphism();
  fail(ErrorCode::domain, "unknown morphism preset '" + std::string(name) + "'");
}

Word apply(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (Letter c : w) total += m.image(c).size();
  Word out;
  out.reserve(total);
  for (Letter c : w) out.append(m.image(c));
  return out;
}

bool images_pairwise_equivalent(const Morphism& m, int k) {
  const auto& images = m.images();
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (!equivalent(images[0], images[i], k)) return false;
  }
  return true;
}

namespace {

Word fixed_point_prefix(const FixedPoint& fp, std::size_t n) {
  const Morphism& m = fp.morphism;
  if (m.source() != m.target()) {
    fail(ErrorCode::domain, "fixed points need a morphism from an alphabet to itself");
  }
  if (!m.prolongable(fp.seed)) {
    fail(ErrorCode::domain, "morphism is not prolongable at letter " +
                                std::to_string(int{fp.seed}));
  }
  Word w{fp.seed};
  while (w.size() < n) {
    w = apply(m, w);
    w.truncate(n);
  }
  w.truncate(n);
  return w;
}

Word zeros_mod2_prefix(std::size_t n) {
  std::vector<Letter> letters(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto zeros = std::bit_width(i) - static_cast<std::size_t>(std::popcount(i));
    letters[i] = static_cast<Letter>(zeros & 1U);
  }
  return Word(std::move(letters));
}

}  // namespace

Word prefix(const Sequence& seq, std::size_t n) {
  if (n == 0) {
    // Still reject malformed fixed points.
    if (const auto* fp = std::get_if<FixedPoint>(&seq)) fixed_point_prefix(*fp, 1);
    return Word{};
  }
  return std::visit(
      [n](const auto& s) -> Word {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FixedPoint>) {
          return fixed_point_prefix(s, n);
        } else if constexpr (std::is_same_v<T, ZerosMod2>) {
          return zeros_mod2_prefix(n);
        } else {
          return s.word.factor(0, std::min(n, s.word.size()));
        }
      },
      seq);
}

std::optional<Occurrence> scan_earliest_power(const Sequence& seq,
                                              PowerSpec spec,
                                              std::size_t limit) {
  if (limit > kMaxScanLimit) {
    fail(ErrorCode::out_of_range,
         "scan limit above " + std::to_string(kMaxScanLimit));
  }
  return find_power(prefix(seq, limit), spec);
}

}  // namespace kabelian
