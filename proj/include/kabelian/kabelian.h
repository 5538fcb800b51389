/*
 * kabelian: k-abelian equivalence of words and exhaustive avoidability
 * search for k-abelian powers.
 *
 * C interface. Every object is an opaque handle owned by the caller and
 * released with the matching *_free function. Functions report failures
 * through kab_status; kab_last_error() then describes the most recent failure
 * on the calling thread. Strings returned through char** are released with
 * kab_string_free.
 *
 * Letters are small integers 0..11. Text words use either the letter
 * presentation "abc..." or the digit presentation "012...".
 */
#ifndef KABELIAN_H
#define KABELIAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(KAB_BUILDING_LIBRARY)
#define KAB_API __attribute__((visibility("default")))
#else
#define KAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kab_status {
  KAB_OK = 0,
  KAB_ERR_DOMAIN = 1,
  KAB_ERR_OUT_OF_RANGE = 2,
  KAB_ERR_LIMIT_EXCEEDED = 3,
  KAB_ERR_UNAVAILABLE = 4,
  KAB_ERR_NOT_REPRESENTABLE = 5,
  KAB_ERR_INTERNAL = 6
} kab_status;

typedef enum kab_presentation {
  KAB_PRESENT_LETTERS = 0,
  KAB_PRESENT_DIGITS = 1
} kab_presentation;

typedef struct kab_word kab_word;
typedef struct kab_search_result kab_search_result;
typedef struct kab_morphism kab_morphism;
typedef struct kab_sequence kab_sequence;

KAB_API const char* kab_version(void);
KAB_API const char* kab_last_error(void);
KAB_API void kab_string_free(char* s);

/* ---- words and equivalence ---------------------------------------------- */

KAB_API kab_status kab_word_parse(const char* text, kab_word** out);
KAB_API kab_status kab_word_from_letters(const uint8_t* letters, size_t length,
                                         kab_word** out);
KAB_API void kab_word_free(kab_word* word);
KAB_API size_t kab_word_length(const kab_word* word);
/* Borrowed pointer to the letters; valid while the word lives. */
KAB_API const uint8_t* kab_word_letters(const kab_word* word);
/* Smallest alphabet containing every letter (1 for the empty word). */
KAB_API int kab_word_alphabet_size(const kab_word* word);
KAB_API kab_status kab_word_format(const kab_word* word,
                                   kab_presentation presentation, char** out);

/* Canonical JSON: {"k","length","prefix","suffix","counts"}. alphabet_size 0
 * means the smallest alphabet containing the word. */
KAB_API kab_status kab_signature_json(const kab_word* word, int k,
                                      int alphabet_size, char** out);
KAB_API kab_status kab_equivalent(const kab_word* u, const kab_word* v, int k,
                                  int* out);
/* Equivalence of the factors [a1, b1) and [a2, b2) of one word. */
KAB_API kab_status kab_window_equivalent(const kab_word* word, int k,
                                         size_t a1, size_t b1, size_t a2,
                                         size_t b2, int* out);

/* ---- repetitions -------------------------------------------------------- */

typedef struct kab_occurrence {
  size_t start;        /* 0-based */
  size_t total_length; /* p times the block length */
} kab_occurrence;

KAB_API kab_status kab_is_power(const kab_word* word, int k, int p, int* out);
/* Earliest occurrence by end position, then length. *found is 0 when the
 * word is power-free. */
KAB_API kab_status kab_find_power(const kab_word* word, int k, int p,
                                  int* found, kab_occurrence* out);
KAB_API kab_status kab_is_power_free(const kab_word* word, int k, int p,
                                     int* out);

/* ---- search ------------------------------------------------------------- */

typedef struct kab_search_params {
  int alphabet_size;
  int k;
  int p;
  size_t max_length;
  int symmetry_reduction; /* nonzero: walk canonical words only */
  uint64_t count_limit;   /* node budget; 0 = unlimited */
  size_t witness_cap;
  unsigned threads;       /* 0 = hardware concurrency */
  size_t split_depth;
} kab_search_params;

/* Fills defaults: binary squares with k = 2, max_length 1, symmetry on,
 * count_limit 2^40, witness_cap 1000, threads 0, split_depth 8. */
KAB_API void kab_search_params_init(kab_search_params* params);

/* prefix may be NULL. */
KAB_API kab_status kab_enumerate(const kab_search_params* params,
                                 const kab_word* prefix,
                                 kab_search_result** out);
/* Same walk; max_length acts as a ceiling. */
KAB_API kab_status kab_longest(const kab_search_params* params,
                               kab_search_result** out);
/* Fails with KAB_ERR_LIMIT_EXCEEDED when the node budget runs out. */
KAB_API kab_status kab_count_extensions(const kab_search_params* params,
                                        const kab_word* prefix, size_t delta,
                                        kab_search_result** out);

KAB_API void kab_result_free(kab_search_result* result);
KAB_API int kab_result_limit_exceeded(const kab_search_result* result);
/* Counts cover lengths base_length .. end_length - 1. */
KAB_API size_t kab_result_base_length(const kab_search_result* result);
KAB_API size_t kab_result_end_length(const kab_search_result* result);
/* Number of power-free words of the given length (0 outside the range). */
KAB_API uint64_t kab_result_count(const kab_search_result* result,
                                  size_t length);
KAB_API size_t kab_result_longest(const kab_search_result* result);
KAB_API int kab_result_ceiling_reached(const kab_search_result* result);
KAB_API uint64_t kab_result_witness_count(const kab_search_result* result);
KAB_API size_t kab_result_num_witnesses(const kab_search_result* result);
/* Borrowed; valid while the result lives. NULL when out of range. */
KAB_API const kab_word* kab_result_witness(const kab_search_result* result,
                                           size_t index);
KAB_API uint64_t kab_result_nodes(const kab_search_result* result);

typedef enum kab_letter_order {
  KAB_ORDER_ASCENDING = 0,
  KAB_ORDER_RECENT_FAILURE_LAST = 1
} kab_letter_order;

typedef enum kab_grow_status {
  KAB_GROW_REACHED = 0,
  KAB_GROW_EXHAUSTED = 1, /* the tree ends below the target */
  KAB_GROW_LIMIT_EXCEEDED = 2
} kab_grow_status;

/* On success *out_word is the target-length word, or the longest word met
 * when the target was not reached. prefix may be NULL. */
KAB_API kab_status kab_grow(const kab_search_params* params,
                            const kab_word* prefix, size_t target,
                            kab_letter_order order, kab_grow_status* status,
                            kab_word** out_word);

/* ---- morphisms and sequences -------------------------------------------- */

/* "0:01,1:10" style rules. */
KAB_API kab_status kab_morphism_parse(const char* text, kab_morphism** out);
/* thue_morse, cube_free_binary, ternary_to_binary */
KAB_API kab_status kab_morphism_preset(const char* name, kab_morphism** out);
KAB_API void kab_morphism_free(kab_morphism* morphism);
KAB_API kab_status kab_morphism_apply(const kab_morphism* morphism,
                                      const kab_word* word, kab_word** out);
KAB_API kab_status kab_morphism_images_equivalent(const kab_morphism* morphism,
                                                  int k, int* out);

KAB_API kab_status kab_sequence_fixed_point(const kab_morphism* morphism,
                                            uint8_t seed, kab_sequence** out);
KAB_API kab_status kab_sequence_zeros_mod2(kab_sequence** out);
KAB_API kab_status kab_sequence_explicit(const kab_word* word,
                                         kab_sequence** out);
/* thue_morse and cube_free_binary (fixed points seeded at 0), zeros_mod2 */
KAB_API kab_status kab_sequence_preset(const char* name, kab_sequence** out);
KAB_API void kab_sequence_free(kab_sequence* sequence);
KAB_API kab_status kab_sequence_prefix(const kab_sequence* sequence, size_t n,
                                       kab_word** out);
KAB_API kab_status kab_scan_earliest_power(const kab_sequence* sequence, int k,
                                           int p, size_t limit, int* found,
                                           kab_occurrence* out);

/* ---- equivalence classes ------------------------------------------------ */

typedef enum kab_count_mode {
  KAB_COUNT_AUTO = 0,
  KAB_COUNT_BRUTE_FORCE = 1,
  KAB_COUNT_REPRESENTATIVE = 2
} kab_count_mode;

KAB_API kab_status kab_count_classes(size_t n, int alphabet_size, int k,
                                     kab_count_mode mode, uint64_t* out);

typedef struct kab_normal_form2 {
  uint8_t leading; /* 0 = a-form, 1 = b-form */
  uint32_t k, l, m;
  uint8_t n;
} kab_normal_form2;

typedef enum kab_head3 { KAB_HEAD_AA, KAB_HEAD_BB, KAB_HEAD_AB, KAB_HEAD_BA } kab_head3;
typedef enum kab_tail3 { KAB_TAIL_AAB, KAB_TAIL_ABB } kab_tail3;

typedef struct kab_normal_form3 {
  int has_form; /* 0 for words shorter than 3 (singleton classes) */
  kab_head3 head;
  kab_tail3 tail;
  uint32_t k, l, m, g, h;
  uint8_t i, j;
} kab_normal_form3;

KAB_API kab_status kab_normal_form2_of(const kab_word* word,
                                       kab_normal_form2* out,
                                       kab_word** realization);
KAB_API kab_status kab_normal_form3_of(const kab_word* word,
                                       kab_normal_form3* out,
                                       kab_word** realization);

#ifdef __cplusplus
}
#endif

#endif /* KABELIAN_H */
