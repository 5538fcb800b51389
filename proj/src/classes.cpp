#include "kabelian/classes.hpp"

#include <string>
#include <tuple>
#include <unordered_set>

#include "kabelian/error.hpp"

namespace kabelian {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

void repeat(std::vector<Letter>& out, std::initializer_list<Letter> block,
            std::uint32_t times) {
  for (std::uint32_t r = 0; r < times; ++r) out.insert(out.end(), block);
}

// Dedup key of a k-abelian class: prefix and suffix letters followed by the
// k-gram counts as 16-bit values.
std::string class_key(std::span<const Letter> w, int k, int alphabet_size) {
  const auto uk = static_cast<std::size_t>(k);
  const std::size_t edge = std::min(w.size(), uk - 1);
  std::size_t space = 1;
  for (int i = 0; i < k; ++i) space *= static_cast<std::size_t>(alphabet_size);
  std::vector<std::uint16_t> counts(space, 0);
  for (std::size_t p = 0; p + uk <= w.size(); ++p) {
    std::size_t code = 0;
    for (std::size_t q = 0; q < uk; ++q) {
      code = code * static_cast<std::size_t>(alphabet_size) + w[p + q];
    }
    ++counts[code];
  }
  std::string key;
  key.reserve(2 * edge + 2 * space + 1);
  key.push_back(static_cast<char>(edge));
  for (std::size_t q = 0; q < edge; ++q) key.push_back(static_cast<char>(w[q]));
  for (std::size_t q = w.size() - edge; q < w.size(); ++q) {
    key.push_back(static_cast<char>(w[q]));
  }
  for (std::uint16_t c : counts) {
    key.push_back(static_cast<char>(c & 0xFF));
    key.push_back(static_cast<char>(c >> 8));
  }
  return key;
}

void require_binary(const Word& w, const char* what) {
  if (w.empty()) fail(ErrorCode::domain, std::string(what) + " needs a non-empty word");
  for (Letter c : w) {
    if (c > kB) fail(ErrorCode::domain, std::string(what) + " needs a binary word");
  }
}

}  // namespace

Word NormalForm2::realize() const {
  const Letter x = leading;
  const Letter y = static_cast<Letter>(1 - leading);
  std::vector<Letter> out;
  out.reserve(length());
  repeat(out, {x}, 1 + k);
  repeat(out, {y}, l);
  repeat(out, {x, y}, m);
  repeat(out, {x}, n);
  return Word(std::move(out));
}

Word NormalForm3::realize() const {
  std::vector<Letter> out;
  out.reserve(length());
  switch (head) {
    case Head3::aa:
      repeat(out, {kA, kA}, 1);
      repeat(out, {kA}, k);
      repeat(out, {kB}, l);
      break;
    case Head3::bb:
      repeat(out, {kB, kB}, 1);
      repeat(out, {kB}, k);
      repeat(out, {kA}, l);
      break;
    case Head3::ab:
      repeat(out, {kA, kB}, 1);
      repeat(out, {kB}, k);
      repeat(out, {kA}, l);
      break;
    case Head3::ba:
      repeat(out, {kB, kA}, 1);
      repeat(out, {kA}, k);
      repeat(out, {kB}, l);
      break;
  }
  repeat(out, {kA, kA, kB, kB}, m);
  if (tail == Tail3::aab) {
    repeat(out, {kA, kA, kB}, g);
  } else {
    repeat(out, {kA, kB, kB}, g);
  }
  repeat(out, {kA, kB}, h);
  repeat(out, {kB}, i);
  repeat(out, {kA}, j);
  return Word(std::move(out));
}

std::string_view to_string(Head3 head) {
  switch (head) {
    case Head3::aa: return "aa";
    case Head3::bb: return "bb";
    case Head3::ab: return "ab";
    case Head3::ba: return "ba";
  }
  return "?";
}

std::string_view to_string(Tail3 tail) {
  return tail == Tail3::aab ? "aab" : "abb";
}

void for_each_normal_form2(std::size_t length,
                           const std::function<void(const NormalForm2&)>& f) {
  if (length == 0) return;
  const std::size_t rest = length - 1;  // k + l + 2m + n
  for (Letter leading : {kA, kB}) {
    for (std::uint8_t n = 0; n <= 1 && n <= rest; ++n) {
      for (std::size_t m = 0; 2 * m + n <= rest; ++m) {
        const std::size_t kl = rest - 2 * m - n;
        for (std::size_t k = 0; k <= kl; ++k) {
          f(NormalForm2{leading, static_cast<std::uint32_t>(k),
                        static_cast<std::uint32_t>(kl - k),
                        static_cast<std::uint32_t>(m), n});
        }
      }
    }
  }
}

void for_each_normal_form3(std::size_t length,
                           const std::function<void(const NormalForm3&)>& f) {
  if (length < 2) return;
  const std::size_t rest = length - 2;  // k + l + 4m + 3g + 2h + i + j
  for (Head3 head : {Head3::aa, Head3::bb, Head3::ab, Head3::ba}) {
    for (Tail3 tail : {Tail3::aab, Tail3::abb}) {
      for (std::size_t m = 0; 4 * m <= rest; ++m) {
        for (std::size_t g = 0; 4 * m + 3 * g <= rest; ++g) {
          for (std::size_t h = 0; 4 * m + 3 * g + 2 * h <= rest; ++h) {
            for (std::uint8_t i = 0; i <= 1; ++i) {
              for (std::uint8_t j = 0; j <= 2 - i; ++j) {
                const std::size_t used = 4 * m + 3 * g + 2 * h + i + j;
                if (used > rest) continue;
                const std::size_t kl = rest - used;
                for (std::size_t k = 0; k <= kl; ++k) {
                  f(NormalForm3{head, tail, static_cast<std::uint32_t>(k),
                                static_cast<std::uint32_t>(kl - k),
                                static_cast<std::uint32_t>(m),
                                static_cast<std::uint32_t>(g),
                                static_cast<std::uint32_t>(h), i, j});
                }
              }
            }
          }
        }
      }
    }
  }
}

NormalForm2 normal_form_2ab(const Word& w) {
  require_binary(w, "normal_form_2ab");
  if (w.size() > kMaxNormalForm2Length) {
    fail(ErrorCode::out_of_range, "normal_form_2ab supports words up to length " +
                                      std::to_string(kMaxNormalForm2Length));
  }
  const std::string target = class_key(w.letters(), 2, 2);
  std::optional<NormalForm2> best;
  Word best_word;
  for_each_normal_form2(w.size(), [&](const NormalForm2& nf) {
    if (nf.leading != w[0]) return;
    Word r = nf.realize();
    if (r[r.size() - 1] != w[w.size() - 1]) return;
    if (class_key(r.letters(), 2, 2) != target) return;
    if (!best || r < best_word ||
        (r == best_word && std::tie(nf.m, nf.n) < std::tie(best->m, best->n))) {
      best = nf;
      best_word = std::move(r);
    }
  });
  if (!best) {
    fail(ErrorCode::not_representable,
         "no 2-abelian normal form realizes the class of the given word");
  }
  return *best;
}

Representative3 normal_form_3ab(const Word& w) {
  require_binary(w, "normal_form_3ab");
  if (w.size() < 3) return {std::nullopt, w};
  if (w.size() > kMaxNormalForm3Length) {
    fail(ErrorCode::out_of_range, "normal_form_3ab supports words up to length " +
                                      std::to_string(kMaxNormalForm3Length));
  }
  const std::string target = class_key(w.letters(), 3, 2);
  std::optional<NormalForm3> best;
  Word best_word;
  auto rank = [](const NormalForm3& nf) {
    return std::make_tuple(nf.tail, nf.m, nf.g, nf.h, nf.i, nf.j);
  };
  for_each_normal_form3(w.size(), [&](const NormalForm3& nf) {
    Word r = nf.realize();
    if (r[0] != w[0] || r[1] != w[1]) return;
    if (class_key(r.letters(), 3, 2) != target) return;
    if (!best || r < best_word || (r == best_word && rank(nf) < rank(*best))) {
      best = nf;
      best_word = std::move(r);
    }
  });
  if (!best) {
    fail(ErrorCode::not_representable,
         "no tuple of the eight 3-abelian families realizes the class of the "
         "given word");
  }
  return {best, std::move(best_word)};
}

namespace {

std::uint64_t count_brute_force(std::size_t n, int alphabet_size, int k) {
  std::unordered_set<std::string> classes;
  std::vector<Letter> w(n, 0);
  const auto top = static_cast<Letter>(alphabet_size - 1);
  while (true) {
    classes.insert(class_key(w, k, alphabet_size));
    std::size_t pos = n;
    while (pos > 0 && w[pos - 1] == top) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return classes.size();
}

std::uint64_t count_representative(std::size_t n, int k) {
  std::unordered_set<std::string> classes;
  if (k == 2) {
    for_each_normal_form2(n, [&](const NormalForm2& nf) {
      classes.insert(class_key(nf.realize().letters(), 2, 2));
    });
    return classes.size();
  }
  if (n < 3) return std::uint64_t{1} << n;
  for_each_normal_form3(n, [&](const NormalForm3& nf) {
    classes.insert(class_key(nf.realize().letters(), 3, 2));
  });
  return classes.size();
}

}  // namespace

std::uint64_t count_classes(std::size_t n, int alphabet_size, int k,
                            CountMode mode) {
  if (n == 0) fail(ErrorCode::domain, "class counts need n >= 1");
  const Alphabet alphabet(alphabet_size);
  kgram_space(alphabet, k);
  if (n >= 65536) fail(ErrorCode::unavailable, "class counts need n < 65536");

  std::uint64_t words = 1;
  bool brute_ok = true;
  for (std::size_t i = 0; i < n && brute_ok; ++i) {
    words *= static_cast<std::uint64_t>(alphabet_size);
    brute_ok = words <= kMaxBruteForceWords;
  }
  const bool rep_ok = alphabet_size == 2 && (k == 2 || k == 3) &&
                      n <= (k == 2 ? kMaxNormalForm2Length : kMaxNormalForm3Length);

  if (mode == CountMode::automatic) {
    mode = brute_ok ? CountMode::brute_force : CountMode::representative;
  }
  if (mode == CountMode::brute_force) {
    if (!brute_ok) {
      fail(ErrorCode::unavailable, "brute-force class count needs alphabet_size^n <= 2^22");
    }
    return count_brute_force(n, alphabet_size, k);
  }
  if (!rep_ok) {
    fail(ErrorCode::unavailable,
         "representative class count needs a binary alphabet, k in {2, 3} and "
         "n within the normal-form length limit");
  }
  return count_representative(n, k);
}

}  // namespace kabelian
