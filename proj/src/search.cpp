#include "kabelian/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "kabelian/error.hpp"

namespace kabelian {

std::uint64_t LevelCounts::at(std::size_t length) const noexcept {
  if (length < base_length || length >= end_length()) return 0;
  return counts[length - base_length];
}

LevelCounts& LevelCounts::operator+=(const LevelCounts& other) {
  if (other.counts.empty()) return *this;
  if (counts.empty()) {
    *this = other;
    return *this;
  }
  const std::size_t lo = std::min(base_length, other.base_length);
  const std::size_t hi = std::max(end_length(), other.end_length());
  std::vector<std::uint64_t> merged(hi - lo, 0);
  for (std::size_t n = lo; n < hi; ++n) merged[n - lo] = at(n) + other.at(n);
  base_length = lo;
  counts = std::move(merged);
  return *this;
}

namespace {

struct Prepared {
  Alphabet alphabet;
  PowerSpec spec;
  Word prefix;
  bool symmetric;
  // multiplicity[j] = size! / (size - j)!, the number of words sharing the
  // canonical form of a word with j distinct letters.
  std::vector<std::uint64_t> multiplicity;
};

Prepared prepare(const SearchConfig& config) {
  if (config.alphabet_size < 2) {
    fail(ErrorCode::domain, "search needs an alphabet of at least 2 letters");
  }
  const Alphabet alphabet(config.alphabet_size);
  config.spec.validate();
  kgram_space(alphabet, config.spec.k);
  Word prefix = config.prefix.value_or(Word{});
  require_letters_in(prefix, alphabet);
  if (!is_power_free(prefix, config.spec)) {
    fail(ErrorCode::domain, "search prefix is not power-free");
  }
  const bool symmetric = config.symmetry_reduction && prefix.empty();
  Prepared prep{alphabet, config.spec, std::move(prefix), symmetric, {}};
  prep.multiplicity.assign(static_cast<std::size_t>(alphabet.size()) + 1, 1);
  for (int j = 1; j <= alphabet.size(); ++j) {
    prep.multiplicity[static_cast<std::size_t>(j)] =
        prep.multiplicity[static_cast<std::size_t>(j - 1)] *
        static_cast<std::uint64_t>(alphabet.size() - j + 1);
  }
  return prep;
}

int distinct_letters(const Word& w) {
  std::array<bool, kMaxAlphabetSize> seen{};
  int n = 0;
  for (Letter c : w) {
    if (!seen[c]) {
      seen[c] = true;
      ++n;
    }
  }
  return n;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::optional<std::uint64_t> limit) : limit_(limit) {}

  // Returns false once the budget is exhausted (by anyone).
  bool charge(std::uint64_t nodes) {
    const std::uint64_t total = used_.fetch_add(nodes) + nodes;
    if (limit_ && total > *limit_) aborted_.store(true);
    return !aborted_.load(std::memory_order_relaxed);
  }
  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::uint64_t> limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> aborted_{false};
};

// First `cap` words met at the greatest depth reached.
struct WitnessSet {
  std::size_t depth = 0;
  std::vector<Word> words;

  void offer(const Word& w, std::size_t cap) {
    if (w.size() > depth) {
      depth = w.size();
      words.clear();
    }
    if (w.size() == depth && words.size() < cap) words.push_back(w);
  }
};

struct Task {
  Word word;
  int used = 0;
};

struct Partial {
  std::vector<std::uint64_t> counts;  // indexed by absolute length
  WitnessSet witnesses;
  std::uint64_t nodes = 0;
};

constexpr std::uint64_t kBudgetStride = 4096;

class Walker {
 public:
  Walker(const Prepared& prep, std::size_t witness_cap, NodeBudget& budget)
      : prep_(prep), cap_(witness_cap), budget_(budget) {}

  // Visits every power-free proper extension of the table's word up to length
  // stop. With a frontier, nodes of length stop are recorded there as tasks.
  void run(WindowCountTable& table, int used, std::size_t stop,
           std::vector<Task>* frontier, Partial& out) const {
    const std::size_t base = table.length();
    if (stop <= base) return;
    const int size = prep_.alphabet.size();
    const bool symmetric = prep_.symmetric;
    std::vector<Letter> next(stop - base + 1, 0);
    std::vector<int> used_at(stop - base + 1, used);
    std::uint64_t pending = 0;
    std::size_t idx = 0;

    while (true) {
      const int bound = symmetric ? std::min(used_at[idx] + 1, size) : size;
      if (next[idx] < bound) {
        const Letter c = next[idx]++;
        table.push_back(c);
        if (suffix_power_end(table, prep_.spec)) {
          table.pop_back();
          continue;
        }
        const int u = used_at[idx] + (symmetric && c == used_at[idx] ? 1 : 0);
        const std::size_t depth = table.length();
        out.counts[depth] +=
            symmetric ? prep_.multiplicity[static_cast<std::size_t>(u)] : 1;
        ++out.nodes;
        if (depth >= out.witnesses.depth) out.witnesses.offer(table.word(), cap_);
        if (++pending == kBudgetStride) {
          pending = 0;
          if (!budget_.charge(kBudgetStride)) break;
        }
        if (depth == stop) {
          if (frontier) frontier->push_back({table.word(), u});
          table.pop_back();
          continue;
        }
        ++idx;
        next[idx] = 0;
        used_at[idx] = u;
      } else {
        if (idx == 0) break;
        table.pop_back();
        --idx;
      }
    }
    while (table.length() > base) table.pop_back();
    budget_.charge(pending);
  }

 private:
  const Prepared& prep_;
  std::size_t cap_;
  NodeBudget& budget_;
};

std::vector<Word> expand_orbits(const std::vector<Word>& canonical,
                                int alphabet_size) {
  std::vector<Letter> perm(static_cast<std::size_t>(alphabet_size));
  std::set<Word> out;
  for (const Word& w : canonical) {
    std::iota(perm.begin(), perm.end(), Letter{0});
    do {
      std::vector<Letter> img(w.size());
      std::transform(w.begin(), w.end(), img.begin(),
                     [&](Letter c) { return perm[c]; });
      out.insert(Word(std::move(img)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace

SearchOutcome enumerate(const SearchConfig& config) {
  const Prepared prep = prepare(config);
  const std::size_t base = prep.prefix.size();
  if (config.max_length < base) {
    fail(ErrorCode::domain, "max_length is shorter than the prefix");
  }
  const std::size_t max_length = config.max_length;
  const unsigned threads =
      config.threads != 0 ? config.threads
                          : std::max(1u, std::thread::hardware_concurrency());

  NodeBudget budget(config.count_limit);
  const Walker walker(prep, config.witness_cap, budget);

  WindowCountTable table(prep.prefix, prep.spec.k, prep.alphabet);
  table.reserve(max_length);
  const int used0 = prep.symmetric ? distinct_letters(prep.prefix) : 0;

  Partial head;
  head.counts.assign(max_length + 1, 0);
  head.counts[base] = 1;
  head.witnesses.offer(prep.prefix, config.witness_cap);

  const std::size_t split = base + std::max<std::size_t>(config.split_depth, 1);
  std::vector<Task> tasks;
  if (split < max_length) {
    walker.run(table, used0, split, &tasks, head);
  } else {
    walker.run(table, used0, max_length, nullptr, head);
  }

  std::vector<Partial> parts(tasks.size());
  if (!tasks.empty()) {
    std::atomic<std::size_t> next_task{0};
    auto work = [&] {
      WindowCountTable local(prep.alphabet, prep.spec.k);
      local.reserve(max_length);
      for (std::size_t i = next_task++; i < tasks.size(); i = next_task++) {
        if (budget.aborted()) break;
        for (Letter c : tasks[i].word) local.push_back(c);
        parts[i].counts.assign(max_length + 1, 0);
        walker.run(local, tasks[i].used, max_length, nullptr, parts[i]);
        while (local.length() > 0) local.pop_back();
      }
    };
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    if (n_workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(n_workers);
      for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(work);
    }
  }

  SearchOutcome outcome;
  outcome.status = budget.aborted() ? SearchStatus::limit_exceeded
                                    : SearchStatus::complete;
  std::vector<std::uint64_t> counts = std::move(head.counts);
  outcome.nodes = head.nodes;
  std::size_t best = head.witnesses.depth;
  for (const Partial& part : parts) {
    if (part.counts.empty()) continue;
    for (std::size_t n = 0; n <= max_length; ++n) counts[n] += part.counts[n];
    outcome.nodes += part.nodes;
    if (!part.witnesses.words.empty()) best = std::max(best, part.witnesses.depth);
  }

  std::vector<Word> canonical;
  auto gather = [&](const WitnessSet& set) {
    if (set.depth != best) return;
    for (const Word& w : set.words) {
      if (canonical.size() == config.witness_cap) return;
      canonical.push_back(w);
    }
  };
  gather(head.witnesses);
  for (const Partial& part : parts) gather(part.witnesses);
  if (prep.symmetric) {
    canonical = expand_orbits(canonical, prep.alphabet.size());
  }
  if (canonical.size() > config.witness_cap) canonical.resize(config.witness_cap);

  outcome.levels.base_length = base;
  outcome.levels.counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(base),
                               counts.end());
  outcome.longest_length = best;
  outcome.witnesses = std::move(canonical);
  return outcome;
}

LongestResult longest(const SearchConfig& config) {
  SearchOutcome outcome = enumerate(config);
  LongestResult result;
  result.status = outcome.status;
  result.length = outcome.longest_length;
  result.ceiling_reached = outcome.longest_length == config.max_length;
  result.witness_count = outcome.levels.at(outcome.longest_length);
  result.witnesses = std::move(outcome.witnesses);
  return result;
}

GrowResult build_long_word(const SearchConfig& config, std::size_t target,
                           LetterOrder order) {
  const Prepared prep = prepare(config);
  if (target > kMaxGrowTarget) {
    fail(ErrorCode::out_of_range, "grow target above " +
                                      std::to_string(kMaxGrowTarget));
  }
  if (target < prep.prefix.size()) {
    fail(ErrorCode::domain, "grow target is shorter than the prefix");
  }

  GrowResult result;
  WindowCountTable table(prep.prefix, prep.spec.k, prep.alphabet);
  table.reserve(target);
  const std::size_t base = table.length();
  result.longest_seen = base;
  result.word = prep.prefix;
  if (base == target) return result;

  const int size = prep.alphabet.size();
  const bool symmetric = prep.symmetric;
  // Per depth: the letter order to try and how far through it we are.
  std::vector<std::array<Letter, kMaxAlphabetSize>> orders(target - base + 1);
  std::vector<std::uint8_t> tried(target - base + 1, 0);
  std::vector<std::uint8_t> width(target - base + 1, 0);
  std::vector<int> used_at(target - base + 1, 0);
  int last_failed = -1;

  auto plan = [&](std::size_t idx, int used) {
    const int bound = symmetric ? std::min(used + 1, size) : size;
    auto& ord = orders[idx];
    int n = 0;
    for (int c = 0; c < bound; ++c) {
      if (order == LetterOrder::recent_failure_last && c == last_failed) continue;
      ord[static_cast<std::size_t>(n++)] = static_cast<Letter>(c);
    }
    if (n < bound) ord[static_cast<std::size_t>(n++)] = static_cast<Letter>(last_failed);
    width[idx] = static_cast<std::uint8_t>(n);
    tried[idx] = 0;
    used_at[idx] = used;
  };

  NodeBudget budget(config.count_limit);
  std::uint64_t pending = 0;
  bool best_unsaved = false;
  std::size_t idx = 0;
  plan(0, symmetric ? distinct_letters(prep.prefix) : 0);

  while (true) {
    if (tried[idx] < width[idx]) {
      const Letter c = orders[idx][tried[idx]++];
      table.push_back(c);
      if (suffix_power_end(table, prep.spec)) {
        table.pop_back();
        last_failed = c;
        continue;
      }
      ++result.nodes;
      if (++pending == kBudgetStride) {
        pending = 0;
        if (!budget.charge(kBudgetStride)) {
          result.status = GrowStatus::limit_exceeded;
          break;
        }
      }
      if (table.length() > result.longest_seen) {
        result.longest_seen = table.length();
        best_unsaved = true;
      }
      if (table.length() == target) {
        result.status = GrowStatus::reached;
        result.word = table.word();
        return result;
      }
      const int u = used_at[idx] + (symmetric && c == used_at[idx] ? 1 : 0);
      ++idx;
      plan(idx, u);
    } else {
      if (idx == 0) {
        result.status = GrowStatus::exhausted;
        break;
      }
      if (best_unsaved && table.length() == result.longest_seen) {
        result.word = table.word();
        best_unsaved = false;
      }
      table.pop_back();
      --idx;
    }
  }
  if (best_unsaved) result.word = table.word().factor(0, result.longest_seen);
  return result;
}

LevelCounts count_extensions(const Word& prefix, SearchConfig config,
                             std::size_t delta) {
  config.prefix = prefix;
  config.max_length = prefix.size() + delta;
  SearchOutcome outcome = enumerate(config);
  if (outcome.status == SearchStatus::limit_exceeded) {
    fail(ErrorCode::limit_exceeded, "extension count exceeded the node budget");
  }
  return std::move(outcome.levels);
}

}  // namespace kabelian
