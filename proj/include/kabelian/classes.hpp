#pragma once

// Parametrized representatives of binary 2- and 3-abelian classes, and
// counting of k-abelian classes of words of a fixed length.
//
// Binary words use letters 0 (a) and 1 (b).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "kabelian/word.hpp"

namespace kabelian {

// x x^k y^l (xy)^m x^n with {x, y} = {a, b}, n in {0, 1}.
struct NormalForm2 {
  Letter leading = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  std::uint8_t n = 0;

  std::size_t length() const noexcept { return 1 + k + l + 2 * m + n; }
  Word realize() const;

  friend bool operator==(const NormalForm2&, const NormalForm2&) = default;
};

// Head shapes: aa a^k b^l, bb b^k a^l, ab b^k a^l, ba a^k b^l.
enum class Head3 { aa, bb, ab, ba };
// Tail shapes: (aab)^g or (abb)^g, followed by (ab)^h b^i a^j.
enum class Tail3 { aab, abb };

// head (aabb)^m tail, with i in {0, 1} and j in {0, .., 2 - i}.
struct NormalForm3 {
  Head3 head = Head3::aa;
  Tail3 tail = Tail3::aab;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  std::uint32_t g = 0;
  std::uint32_t h = 0;
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  std::size_t length() const noexcept {
    return 2 + k + l + 4 * m + 3 * g + 2 * h + i + j;
  }
  Word realize() const;

  friend bool operator==(const NormalForm3&, const NormalForm3&) = default;
};

std::string_view to_string(Head3 head);
std::string_view to_string(Tail3 tail);

// Calls f for every parameter tuple realizing a word of the given length.
void for_each_normal_form2(std::size_t length,
                           const std::function<void(const NormalForm2&)>& f);
void for_each_normal_form3(std::size_t length,
                           const std::function<void(const NormalForm3&)>& f);

inline constexpr std::size_t kMaxNormalForm2Length = 512;
inline constexpr std::size_t kMaxNormalForm3Length = 96;

// Tuple whose realization is the lexicographically least 2-abelian equivalent
// of w among all realizations; ties between tuples realizing the same word go
// to the smaller m, then the smaller n.
NormalForm2 normal_form_2ab(const Word& w);

// Words shorter than 3 are singleton classes and come back without a form.
struct Representative3 {
  std::optional<NormalForm3> form;
  Word realization;
};

// Same canonical choice as normal_form_2ab; ties go to the aab tail shape,
// then to the smaller (m, g, h, i, j). Throws ErrorCode::not_representable
// when no tuple of the eight families realizes a word 3-abelian equivalent
// to w.
Representative3 normal_form_3ab(const Word& w);

enum class CountMode { automatic, brute_force, representative };

// Brute force is available while alphabet_size^n <= 2^22.
inline constexpr std::uint64_t kMaxBruteForceWords = std::uint64_t{1} << 22;

// Number of k-abelian classes of words of length n. Representative mode
// counts the distinct classes realized by the binary normal-form families
// (alphabet 2, k in {2, 3}). Infeasible requests throw
// ErrorCode::unavailable.
std::uint64_t count_classes(std::size_t n, int alphabet_size, int k,
                            CountMode mode = CountMode::automatic);

}  // namespace kabelian
