#pragma once

// Words over small integer alphabets and k-abelian equivalence.
//
// Two words u, v are k-abelian equivalent when they share the prefix and the
// suffix of length k-1 and every word of length k occurs equally often in
// both. Words no longer than k-1 are their own prefix and suffix, so for them
// the relation degenerates to equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kabelian {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabetSize = 12;
// Largest number of distinct k-grams a dense count vector may hold.
inline constexpr std::size_t kMaxKGramSpace = std::size_t{1} << 20;

class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool contains(Letter letter) const noexcept { return letter < size_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter* data() const noexcept { return letters_.data(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter letter) { letters_.push_back(letter); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.begin(), other.end());
  }
  void truncate(std::size_t n) {
    if (n < letters_.size()) letters_.resize(n);
  }

  // Factor [begin, end); throws on an invalid range.
  Word factor(std::size_t begin, std::size_t end) const;

  // Smallest alphabet containing every letter (at least 1).
  Alphabet min_alphabet() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Throws a domain error if some letter of w lies outside the alphabet.
void require_letters_in(const Word& w, Alphabet alphabet);

// Number of distinct k-grams, alphabet.size()^k. Throws when it would exceed
// kMaxKGramSpace or when k < 1.
std::size_t kgram_space(Alphabet alphabet, int k);

// Base-|alphabet| value of a k-gram, most significant letter first.
std::uint32_t encode_kgram(std::span<const Letter> gram, Alphabet alphabet);
Word decode_kgram(std::uint32_t code, int k, Alphabet alphabet);

// Complete descriptor of a k-abelian class.
struct Signature {
  int alphabet_size = 0;
  int k = 0;
  std::size_t length = 0;
  Word prefix;
  Word suffix;
  std::vector<std::uint32_t> counts;  // indexed by k-gram code

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Word& w, int k, Alphabet alphabet);
// Uses the smallest alphabet containing w.
Signature signature(const Word& w, int k);

bool equivalent(const Word& u, const Word& v, int k);

// Cumulative k-gram counts over one word. Row i holds, for every k-gram code,
// the number of occurrences starting before position i, so the counts of a
// factor are one row difference. The table grows and shrinks at the end.
class WindowCountTable {
 public:
  WindowCountTable(Alphabet alphabet, int k);
  WindowCountTable(const Word& w, int k, Alphabet alphabet);

  void push_back(Letter letter);
  void pop_back();
  void reserve(std::size_t length);

  std::size_t length() const noexcept { return word_.size(); }
  int k() const noexcept { return k_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t code_space() const noexcept { return space_; }
  const Word& word() const noexcept { return word_; }

  // Row i of the cumulative table, 0 <= i <= number of k-grams.
  const std::uint32_t* row(std::size_t i) const noexcept {
    return cumulative_.data() + i * space_;
  }

  std::uint32_t occurrences(std::size_t begin, std::size_t end,
                            std::uint32_t code) const;
  std::vector<std::uint32_t> counts(std::size_t begin, std::size_t end) const;

 private:
  Alphabet alphabet_;
  int k_;
  std::size_t space_;
  Word word_;
  std::vector<std::uint32_t> cumulative_;
};

// Equivalence of the factors [a1, b1) and [a2, b2) of the table's word,
// in time independent of the factor lengths.
bool window_equivalent(const WindowCountTable& table, std::size_t a1,
                       std::size_t b1, std::size_t a2, std::size_t b2);

}  // namespace kabelian
