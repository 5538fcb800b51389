#include "kabelian/repetition.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "kabelian/error.hpp"

namespace kabelian {

void PowerSpec::validate() const {
  if (k < 1) fail(ErrorCode::domain, "power spec needs k >= 1");
  if (p < 2) fail(ErrorCode::domain, "power spec needs p >= 2");
}

bool is_power(const Word& w, PowerSpec spec) {
  spec.validate();
  if (w.empty()) fail(ErrorCode::domain, "is_power needs a non-empty word");
  const auto p = static_cast<std::size_t>(spec.p);
  if (w.size() % p != 0) return false;
  const std::size_t m = w.size() / p;
  const WindowCountTable table(w, spec.k, w.min_alphabet());
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (!window_equivalent(table, i * m, (i + 1) * m, (i + 1) * m,
                           (i + 2) * m)) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> shortest_suffix_power(const WindowCountTable& table,
                                                 PowerSpec spec) {
  const std::size_t n = table.length();
  const auto p = static_cast<std::size_t>(spec.p);
  if (n < p) return std::nullopt;

  const Letter* w = table.word().data();
  const auto edge = static_cast<std::size_t>(table.k() - 1);
  const std::size_t space = table.code_space();
  const Letter last = w[n - 1];

  for (std::size_t m = 1; m * p <= n; ++m) {
    const std::size_t tail = n - m;  // start of the final block
    const std::size_t first = n - p * m;

    // Cheap filters first: every block ends (and begins) like the final one
    // whenever k >= 2; for m <= k-1 this already decides equality of letters.
    if (edge > 0) {
      bool ok = true;
      for (std::size_t s = first; s < tail; s += m) {
        if (w[s + m - 1] != last || w[s] != w[tail]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }

    bool power = true;
    if (m <= edge) {
      for (std::size_t s = first; s < tail && power; s += m) {
        power = std::memcmp(w + s, w + tail, m) == 0;
      }
    } else {
      for (std::size_t s = first; s < tail && power; s += m) {
        power = std::memcmp(w + s, w + tail, edge) == 0 &&
                std::memcmp(w + s + m - edge, w + n - edge, edge) == 0;
      }
      const std::uint32_t* hi_tail = table.row(n - edge);
      const std::uint32_t* lo_tail = table.row(tail);
      for (std::size_t s = first; s < tail && power; s += m) {
        const std::uint32_t* hi = table.row(s + m - edge);
        const std::uint32_t* lo = table.row(s);
        for (std::size_t g = 0; g < space; ++g) {
          if (hi[g] - lo[g] != hi_tail[g] - lo_tail[g]) {
            power = false;
            break;
          }
        }
      }
    }
    if (power) return m;
  }
  return std::nullopt;
}

std::optional<Occurrence> find_power(const Word& w, PowerSpec spec) {
  spec.validate();
  if (w.empty()) return std::nullopt;
  WindowCountTable table(w.min_alphabet(), spec.k);
  table.reserve(w.size());
  const auto p = static_cast<std::size_t>(spec.p);
  for (Letter c : w) {
    table.push_back(c);
    if (auto m = shortest_suffix_power(table, spec)) {
      return Occurrence{table.length() - p * *m, p * *m};
    }
  }
  return std::nullopt;
}

bool is_power_free(const Word& w, PowerSpec spec) {
  return !find_power(w, spec).has_value();
}

}  // namespace kabelian
