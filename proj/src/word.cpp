#include "kabelian/word.hpp"

#include <algorithm>
#include <string>

#include "kabelian/error.hpp"

namespace kabelian {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxAlphabetSize) {
    fail(ErrorCode::domain, "alphabet size must be in 1.." +
                                std::to_string(kMaxAlphabetSize) + ", got " +
                                std::to_string(size));
  }
}

Word Word::factor(std::size_t begin, std::size_t end) const {
  if (begin > end || end > letters_.size()) {
    fail(ErrorCode::out_of_range, "factor [" + std::to_string(begin) + ", " +
                                      std::to_string(end) +
                                      ") outside word of length " +
                                      std::to_string(letters_.size()));
  }
  return Word(std::vector<Letter>(letters_.begin() + begin,
                                  letters_.begin() + end));
}

Alphabet Word::min_alphabet() const {
  Letter top = 0;
  for (Letter c : letters_) top = std::max(top, c);
  return Alphabet(int{top} + 1);
}

void require_letters_in(const Word& w, Alphabet alphabet) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!alphabet.contains(w[i])) {
      fail(ErrorCode::domain, "letter " + std::to_string(int{w[i]}) +
                                  " at position " + std::to_string(i) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet.size()));
    }
  }
}

std::size_t kgram_space(Alphabet alphabet, int k) {
  if (k < 1) fail(ErrorCode::domain, "k must be at least 1");
  std::size_t space = 1;
  for (int i = 0; i < k; ++i) {
    space *= static_cast<std::size_t>(alphabet.size());
    if (space > kMaxKGramSpace) {
      fail(ErrorCode::out_of_range,
           "alphabet size " + std::to_string(alphabet.size()) + " with k = " +
               std::to_string(k) + " exceeds the dense k-gram table limit");
    }
  }
  return space;
}

std::uint32_t encode_kgram(std::span<const Letter> gram, Alphabet alphabet) {
  std::uint32_t code = 0;
  for (Letter c : gram) {
    code = code * static_cast<std::uint32_t>(alphabet.size()) + c;
  }
  return code;
}

Word decode_kgram(std::uint32_t code, int k, Alphabet alphabet) {
  std::vector<Letter> letters(static_cast<std::size_t>(k));
  const auto base = static_cast<std::uint32_t>(alphabet.size());
  for (int i = k - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<Letter>(code % base);
    code /= base;
  }
  return Word(std::move(letters));
}

Signature signature(const Word& w, int k, Alphabet alphabet) {
  if (w.empty()) {
    fail(ErrorCode::domain, "signature is defined for non-empty words only");
  }
  require_letters_in(w, alphabet);
  const std::size_t space = kgram_space(alphabet, k);
  const std::size_t edge = std::min(w.size(), static_cast<std::size_t>(k - 1));

  Signature sig;
  sig.alphabet_size = alphabet.size();
  sig.k = k;
  sig.length = w.size();
  sig.prefix = w.factor(0, edge);
  sig.suffix = w.factor(w.size() - edge, w.size());
  sig.counts.assign(space, 0);
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + uk <= w.size(); ++i) {
    ++sig.counts[encode_kgram(w.letters().subspan(i, uk), alphabet)];
  }
  return sig;
}

Signature signature(const Word& w, int k) {
  if (w.empty()) {
    fail(ErrorCode::domain, "signature is defined for non-empty words only");
  }
  return signature(w, k, w.min_alphabet());
}

bool equivalent(const Word& u, const Word& v, int k) {
  if (u.empty() || v.empty()) {
    fail(ErrorCode::domain, "equivalence is defined for non-empty words only");
  }
  if (k < 1) fail(ErrorCode::domain, "k must be at least 1");
  if (u.size() != v.size()) return false;
  const Alphabet alphabet(std::max(u.min_alphabet().size(),
                                   v.min_alphabet().size()));
  return signature(u, k, alphabet) == signature(v, k, alphabet);
}

WindowCountTable::WindowCountTable(Alphabet alphabet, int k)
    : alphabet_(alphabet), k_(k), space_(kgram_space(alphabet, k)) {
  cumulative_.assign(space_, 0);
}

WindowCountTable::WindowCountTable(const Word& w, int k, Alphabet alphabet)
    : WindowCountTable(alphabet, k) {
  require_letters_in(w, alphabet);
  reserve(w.size());
  for (Letter c : w) push_back(c);
}

void WindowCountTable::reserve(std::size_t length) {
  word_.reserve(length);
  cumulative_.reserve((length + 1) * space_);
}

void WindowCountTable::push_back(Letter letter) {
  word_.push_back(letter);
  const auto uk = static_cast<std::size_t>(k_);
  if (word_.size() < uk) return;
  const std::uint32_t code =
      encode_kgram(word_.letters().last(uk), alphabet_);
  const std::size_t last = cumulative_.size() - space_;
  cumulative_.resize(cumulative_.size() + space_);
  std::copy_n(cumulative_.begin() + static_cast<std::ptrdiff_t>(last), space_,
              cumulative_.begin() + static_cast<std::ptrdiff_t>(last + space_));
  ++cumulative_[last + space_ + code];
}

void WindowCountTable::pop_back() {
  if (word_.empty()) return;
  if (word_.size() >= static_cast<std::size_t>(k_)) {
    cumulative_.resize(cumulative_.size() - space_);
  }
  word_.pop_back();
}

std::uint32_t WindowCountTable::occurrences(std::size_t begin, std::size_t end,
                                            std::uint32_t code) const {
  if (begin > end || end > word_.size()) {
    fail(ErrorCode::out_of_range, "window outside table");
  }
  if (code >= space_) fail(ErrorCode::out_of_range, "k-gram code too large");
  const auto uk = static_cast<std::size_t>(k_);
  if (end - begin < uk) return 0;
  return row(end - uk + 1)[code] - row(begin)[code];
}

std::vector<std::uint32_t> WindowCountTable::counts(std::size_t begin,
                                                    std::size_t end) const {
  if (begin > end || end > word_.size()) {
    fail(ErrorCode::out_of_range, "window outside table");
  }
  std::vector<std::uint32_t> out(space_, 0);
  const auto uk = static_cast<std::size_t>(k_);
  if (end - begin < uk) return out;
  const std::uint32_t* hi = row(end - uk + 1);
  const std::uint32_t* lo = row(begin);
  for (std::size_t g = 0; g < space_; ++g) out[g] = hi[g] - lo[g];
  return out;
}

bool window_equivalent(const WindowCountTable& table, std::size_t a1,
                       std::size_t b1, std::size_t a2, std::size_t b2) {
  const std::size_t n = table.length();
  if (a1 >= b1 || b1 > n || a2 >= b2 || b2 > n) {
    fail(ErrorCode::out_of_range, "windows must be non-empty and inside the word");
  }
  const std::size_t len = b1 - a1;
  if (len != b2 - a2) return false;
  const Letter* w = table.word().data();
  const auto edge = static_cast<std::size_t>(table.k() - 1);
  if (len <= edge) return std::equal(w + a1, w + b1, w + a2);
  if (!std::equal(w + a1, w + a1 + edge, w + a2) ||
      !std::equal(w + b1 - edge, w + b1, w + b2 - edge)) {
    return false;
  }
  const std::uint32_t* hi1 = table.row(b1 - edge);
  const std::uint32_t* lo1 = table.row(a1);
  const std::uint32_t* hi2 = table.row(b2 - edge);
  const std::uint32_t* lo2 = table.row(a2);
  for (std::size_t g = 0; g < table.code_space(); ++g) {
    if (hi1[g] - lo1[g] != hi2[g] - lo2[g]) return false;
  }
  return true;
}

}  // namespace kabelian
