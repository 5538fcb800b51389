#include "kabelian/kabelian.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kabelian/classes.hpp"
#include "kabelian/error.hpp"
#include "kabelian/morphism.hpp"
#include "kabelian/repetition.hpp"
#include "kabelian/search.hpp"
#include "kabelian/text.hpp"
#include "kabelian/word.hpp"

struct kab_word {
  kabelian::Word word;
};

struct kab_search_result {
  kabelian::SearchOutcome outcome;
  bool ceiling_reached = false;
  std::vector<kab_word> witnesses;
};

struct kab_morphism {
  kabelian::Morphism morphism;
};

struct kab_sequence {
  kabelian::Sequence sequence;
};

namespace {

thread_local std::string last_error;

kab_status to_status(kabelian::ErrorCode code) {
  switch (code) {
    case kabelian::ErrorCode::domain: return KAB_ERR_DOMAIN;
    case kabelian::ErrorCode::out_of_range: return KAB_ERR_OUT_OF_RANGE;
    case kabelian::ErrorCode::limit_exceeded: return KAB_ERR_LIMIT_EXCEEDED;
    case kabelian::ErrorCode::unavailable: return KAB_ERR_UNAVAILABLE;
    case kabelian::ErrorCode::not_representable: return KAB_ERR_NOT_REPRESENTABLE;
  }
  return KAB_ERR_INTERNAL;
}

template <class F>
kab_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return KAB_OK;
  } catch (const kabelian::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KAB_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* ptr, const char* what) {
  if (ptr == nullptr) {
    kabelian::fail(kabelian::ErrorCode::domain, std::string(what) + " is NULL");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kabelian::SearchConfig to_config(const kab_search_params* params) {
  require(params, "params");
  kabelian::SearchConfig config;
  config.alphabet_size = params->alphabet_size;
  config.spec = {params->k, params->p};
  config.max_length = params->max_length;
  config.symmetry_reduction = params->symmetry_reduction != 0;
  if (params->count_limit == 0) {
    config.count_limit.reset();
  } else {
    config.count_limit = params->count_limit;
  }
  config.witness_cap = params->witness_cap;
  config.threads = params->threads;
  config.split_depth = params->split_depth;
  return config;
}

kab_search_result* wrap(kabelian::SearchOutcome outcome, bool ceiling) {
  auto* r = new kab_search_result{std::move(outcome), ceiling, {}};
  r->witnesses.reserve(r->outcome.witnesses.size());
  for (const auto& w : r->outcome.witnesses) r->witnesses.push_back({w});
  return r;
}

}  // namespace

extern "C" {

KAB_API const char* kab_version(void) { return "0.1.0"; }

KAB_API const char* kab_last_error(void) { return last_error.c_str(); }

KAB_API void kab_string_free(char* s) { std::free(s); }

KAB_API kab_status kab_word_parse(const char* text, kab_word** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new kab_word{kabelian::parse_word(text)};
  });
}

KAB_API kab_status kab_word_from_letters(const uint8_t* letters, size_t length,
                                         kab_word** out) {
  return guarded([&] {
    if (length > 0) require(letters, "letters");
    require(out, "out");
    std::vector<kabelian::Letter> v(letters, letters + length);
    kabelian::Word w(std::move(v));
    if (!w.empty()) w.min_alphabet();  // rejects letters >= 12
    *out = new kab_word{std::move(w)};
  });
}

KAB_API void kab_word_free(kab_word* word) { delete word; }

KAB_API size_t kab_word_length(const kab_word* word) {
  return word ? word->word.size() : 0;
}

KAB_API const uint8_t* kab_word_letters(const kab_word* word) {
  return word ? word->word.data() : nullptr;
}

KAB_API int kab_word_alphabet_size(const kab_word* word) {
  if (!word || word->word.empty()) return 1;
  return word->word.min_alphabet().size();
}

KAB_API kab_status kab_word_format(const kab_word* word,
                                   kab_presentation presentation, char** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = copy_string(kabelian::format_word(
        word->word, presentation == KAB_PRESENT_DIGITS
                        ? kabelian::Presentation::digits
                        : kabelian::Presentation::letters));
  });
}

KAB_API kab_status kab_signature_json(const kab_word* word, int k,
                                      int alphabet_size, char** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    const kabelian::Signature sig =
        alphabet_size == 0
            ? kabelian::signature(word->word, k)
            : kabelian::signature(word->word, k, kabelian::Alphabet(alphabet_size));
    *out = copy_string(kabelian::signature_json(sig));
  });
}

KAB_API kab_status kab_equivalent(const kab_word* u, const kab_word* v, int k,
                                  int* out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = kabelian::equivalent(u->word, v->word, k) ? 1 : 0;
  });
}

KAB_API kab_status kab_window_equivalent(const kab_word* word, int k,
                                         size_t a1, size_t b1, size_t a2,
                                         size_t b2, int* out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    if (word->word.empty()) {
      kabelian::fail(kabelian::ErrorCode::out_of_range, "empty word has no windows");
    }
    const kabelian::WindowCountTable table(word->word, k,
                                           word->word.min_alphabet());
    *out = kabelian::window_equivalent(table, a1, b1, a2, b2) ? 1 : 0;
  });
}

KAB_API kab_status kab_is_power(const kab_word* word, int k, int p, int* out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = kabelian::is_power(word->word, {k, p}) ? 1 : 0;
  });
}

KAB_API kab_status kab_find_power(const kab_word* word, int k, int p,
                                  int* found, kab_occurrence* out) {
  return guarded([&] {
    require(word, "word");
    require(found, "found");
    require(out, "out");
    const auto occ = kabelian::find_power(word->word, {k, p});
    *found = occ ? 1 : 0;
    *out = occ ? kab_occurrence{occ->start, occ->total_length}
               : kab_occurrence{0, 0};
  });
}

KAB_API kab_status kab_is_power_free(const kab_word* word, int k, int p,
                                     int* out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = kabelian::is_power_free(word->word, {k, p}) ? 1 : 0;
  });
}

KAB_API void kab_search_params_init(kab_search_params* params) {
  if (!params) return;
  const kabelian::SearchConfig defaults;
  params->alphabet_size = defaults.alphabet_size;
  params->k = defaults.spec.k;
  params->p = defaults.spec.p;
  params->max_length = defaults.max_length;
  params->symmetry_reduction = defaults.symmetry_reduction ? 1 : 0;
  params->count_limit = defaults.count_limit.value_or(0);
  params->witness_cap = defaults.witness_cap;
  params->threads = defaults.threads;
  params->split_depth = defaults.split_depth;
}

KAB_API kab_status kab_enumerate(const kab_search_params* params,
                                 const kab_word* prefix,
                                 kab_search_result** out) {
  return guarded([&] {
    require(out, "out");
    kabelian::SearchConfig config = to_config(params);
    if (prefix) config.prefix = prefix->word;
    auto outcome = kabelian::enumerate(config);
    const bool ceiling = outcome.longest_length == config.max_length;
    *out = wrap(std::move(outcome), ceiling);
  });
}

KAB_API kab_status kab_longest(const kab_search_params* params,
                               kab_search_result** out) {
  return guarded([&] {
    require(out, "out");
    const kabelian::SearchConfig config = to_config(params);
    auto outcome = kabelian::enumerate(config);
    const bool ceiling = outcome.longest_length == config.max_length;
    *out = wrap(std::move(outcome), ceiling);
  });
}

KAB_API kab_status kab_count_extensions(const kab_search_params* params,
                                        const kab_word* prefix, size_t delta,
                                        kab_search_result** out) {
  return guarded([&] {
    require(prefix, "prefix");
    require(out, "out");
    kabelian::SearchOutcome outcome;
    outcome.levels =
        kabelian::count_extensions(prefix->word, to_config(params), delta);
    const auto& counts = outcome.levels.counts;
    std::size_t last = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] != 0) last = i;
    }
    outcome.longest_length = outcome.levels.base_length + last;
    *out = wrap(std::move(outcome), last + 1 == counts.size());
  });
}

KAB_API void kab_result_free(kab_search_result* result) { delete result; }

KAB_API int kab_result_limit_exceeded(const kab_search_result* result) {
  return result && result->outcome.status ==
                       kabelian::SearchStatus::limit_exceeded;
}

KAB_API size_t kab_result_base_length(const kab_search_result* result) {
  return result ? result->outcome.levels.base_length : 0;
}

KAB_API size_t kab_result_end_length(const kab_search_result* result) {
  return result ? result->outcome.levels.end_length() : 0;
}

KAB_API uint64_t kab_result_count(const kab_search_result* result,
                                  size_t length) {
  return result ? result->outcome.levels.at(length) : 0;
}

KAB_API size_t kab_result_longest(const kab_search_result* result) {
  return result ? result->outcome.longest_length : 0;
}

KAB_API int kab_result_ceiling_reached(const kab_search_result* result) {
  return result && result->ceiling_reached;
}

KAB_API uint64_t kab_result_witness_count(const kab_search_result* result) {
  return result ? result->outcome.levels.at(result->outcome.longest_length) : 0;
}

KAB_API size_t kab_result_num_witnesses(const kab_search_result* result) {
  return result ? result->witnesses.size() : 0;
}

KAB_API const kab_word* kab_result_witness(const kab_search_result* result,
                                           size_t index) {
  if (!result || index >= result->witnesses.size()) return nullptr;
  return &result->witnesses[index];
}

KAB_API uint64_t kab_result_nodes(const kab_search_result* result) {
  return result ? result->outcome.nodes : 0;
}

KAB_API kab_status kab_grow(const kab_search_params* params,
                            const kab_word* prefix, size_t target,
                            kab_letter_order order, kab_grow_status* status,
                            kab_word** out_word) {
  return guarded([&] {
    require(status, "status");
    require(out_word, "out_word");
    kabelian::SearchConfig config = to_config(params);
    if (prefix) config.prefix = prefix->word;
    auto result = kabelian::build_long_word(
        config, target,
        order == KAB_ORDER_RECENT_FAILURE_LAST
            ? kabelian::LetterOrder::recent_failure_last
            : kabelian::LetterOrder::ascending);
    switch (result.status) {
      case kabelian::GrowStatus::reached: *status = KAB_GROW_REACHED; break;
      case kabelian::GrowStatus::exhausted: *status = KAB_GROW_EXHAUSTED; break;
      case kabelian::GrowStatus::limit_exceeded:
        *status = KAB_GROW_LIMIT_EXCEEDED;
        break;
    }
    *out_word = new kab_word{std::move(result.word)};
  });
}

KAB_API kab_status kab_morphism_parse(const char* text, kab_morphism** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new kab_morphism{kabelian::parse_morphism(text)};
  });
}

KAB_API kab_status kab_morphism_preset(const char* name, kab_morphism** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new kab_morphism{kabelian::morphism_preset(name)};
  });
}

KAB_API void kab_morphism_free(kab_morphism* morphism) { delete morphism; }

KAB_API kab_status kab_morphism_apply(const kab_morphism* morphism,
                                      const kab_word* word, kab_word** out) {
  return guarded([&] {
    require(morphism, "morphism");
    require(word, "word");
    require(out, "out");
    *out = new kab_word{kabelian::apply(morphism->morphism, word->word)};
  });
}

KAB_API kab_status kab_morphism_images_equivalent(const kab_morphism* morphism,
                                                  int k, int* out) {
  return guarded([&] {
    require(morphism, "morphism");
    require(out, "out");
    *out = kabelian::images_pairwise_equivalent(morphism->morphism, k) ? 1 : 0;
  });
}

KAB_API kab_status kab_sequence_fixed_point(const kab_morphism* morphism,
                                            uint8_t seed, kab_sequence** out) {
  return guarded([&] {
    require(morphism, "morphism");
    require(out, "out");
    kabelian::FixedPoint fp{morphism->morphism, seed};
    kabelian::prefix(fp, 1);  // rejects non-prolongable seeds up front
    *out = new kab_sequence{std::move(fp)};
  });
}

KAB_API kab_status kab_sequence_zeros_mod2(kab_sequence** out) {
  return guarded([&] {
    require(out, "out");
    *out = new kab_sequence{kabelian::ZerosMod2{}};
  });
}

KAB_API kab_status kab_sequence_explicit(const kab_word* word,
                                         kab_sequence** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = new kab_sequence{kabelian::ExplicitWord{word->word}};
  });
}

KAB_API kab_status kab_sequence_preset(const char* name, kab_sequence** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    if (std::strcmp(name, "zeros_mod2") == 0) {
      *out = new kab_sequence{kabelian::ZerosMod2{}};
      return;
    }
    kabelian::FixedPoint fp{kabelian::morphism_preset(name), 0};
    kabelian::prefix(fp, 1);
    *out = new kab_sequence{std::move(fp)};
  });
}

KAB_API void kab_sequence_free(kab_sequence* sequence) { delete sequence; }

KAB_API kab_status kab_sequence_prefix(const kab_sequence* sequence, size_t n,
                                       kab_word** out) {
  return guarded([&] {
    require(sequence, "sequence");
    require(out, "out");
    *out = new kab_word{kabelian::prefix(sequence->sequence, n)};
  });
}

KAB_API kab_status kab_scan_earliest_power(const kab_sequence* sequence, int k,
                                           int p, size_t limit, int* found,
                                           kab_occurrence* out) {
  return guarded([&] {
    require(sequence, "sequence");
    require(found, "found");
    require(out, "out");
    const auto occ =
        kabelian::scan_earliest_power(sequence->sequence, {k, p}, limit);
    *found = occ ? 1 : 0;
    *out = occ ? kab_occurrence{occ->start, occ->total_length}
               : kab_occurrence{0, 0};
  });
}

KAB_API kab_status kab_count_classes(size_t n, int alphabet_size, int k,
                                     kab_count_mode mode, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    kabelian::CountMode m = kabelian::CountMode::automatic;
    if (mode == KAB_COUNT_BRUTE_FORCE) m = kabelian::CountMode::brute_force;
    if (mode == KAB_COUNT_REPRESENTATIVE) m = kabelian::CountMode::representative;
    *out = kabelian::count_classes(n, alphabet_size, k, m);
  });
}

KAB_API kab_status kab_normal_form2_of(const kab_word* word,
                                       kab_normal_form2* out,
                                       kab_word** realization) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    const kabelian::NormalForm2 nf = kabelian::normal_form_2ab(word->word);
    *out = kab_normal_form2{nf.leading, nf.k, nf.l, nf.m, nf.n};
    if (realization) *realization = new kab_word{nf.realize()};
  });
}

KAB_API kab_status kab_normal_form3_of(const kab_word* word,
                                       kab_normal_form3* out,
                                       kab_word** realization) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    const kabelian::Representative3 rep = kabelian::normal_form_3ab(word->word);
    *out = kab_normal_form3{};
    if (rep.form) {
      const auto& f = *rep.form;
      out->has_form = 1;
      out->head = static_cast<kab_head3>(f.head);
      out->tail = static_cast<kab_tail3>(f.tail);
      out->k = f.k;
      out->l = f.l;
      out->m = f.m;
      out->g = f.g;
      out->h = f.h;
      out->i = f.i;
      out->j = f.j;
    }
    if (realization) *realization = new kab_word{rep.realization};
  });
}

}  // extern "C"
