/* Copyright 2026 The adtlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to adtlab.
 *
 * Every object is an opaque handle released with its *_free function
 * (all accept NULL). Objects built from text keep a copy of the
 * proposition set they were parsed against; operations combining two
 * objects fail with ADTLAB_E_ALPHABET when those sets differ.
 *
 * Functions return a status code. On failure the out parameters are left
 * untouched and adtlab_last_error() describes the problem; the message is
 * thread-local and valid until the next failing call on the same thread.
 * Strings returned through char** are released with adtlab_string_free.
 */

#ifndef ADTLAB_ADTLAB_H_
#define ADTLAB_ADTLAB_H_

#include <stddef.h>

#if defined(_WIN32)
#define ADTLAB_API __declspec(dllexport)
#else
#define ADTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adtlab_status {
  ADTLAB_OK = 0,
  ADTLAB_E_INVALID = 1,
  ADTLAB_E_PARSE = 2,
  ADTLAB_E_ALPHABET = 3,
  ADTLAB_E_DEPTH = 4,
  ADTLAB_E_BUDGET = 5,
  ADTLAB_E_INTERNAL = 6
} adtlab_status;

typedef enum adtlab_dialect {
  ADTLAB_DIALECT_ADT = 0,
  ADTLAB_DIALECT_FO = 1,
  ADTLAB_DIALECT_SERE = 2
} adtlab_dialect;

typedef enum adtlab_answer {
  ADTLAB_YES = 0,
  ADTLAB_NO = 1,
  ADTLAB_NO_UP_TO_BOUND = 2
} adtlab_answer;

typedef enum adtlab_method {
  ADTLAB_METHOD_GEN_SMP = 0,
  ADTLAB_METHOD_GEN0_EXACT = 1,
  ADTLAB_METHOD_BOUNDED = 2,
  ADTLAB_METHOD_REDUCTION = 3
} adtlab_method;

typedef enum adtlab_nonempty_method {
  ADTLAB_NONEMPTY_AUTO = 0,
  ADTLAB_NONEMPTY_GEN = 1,
  ADTLAB_NONEMPTY_BOUNDED = 2
} adtlab_nonempty_method;

typedef enum adtlab_equiv_method {
  ADTLAB_EQUIV_AUTO = 0,
  ADTLAB_EQUIV_GEN0 = 1,
  ADTLAB_EQUIV_REDUCTION = 2,
  ADTLAB_EQUIV_BOUNDED = 3
} adtlab_equiv_method;

typedef enum adtlab_witness_kind {
  ADTLAB_WITNESS_W = 0,
  ADTLAB_WITNESS_PLUS = 1,
  ADTLAB_WITNESS_MINUS = 2
} adtlab_witness_kind;

typedef enum adtlab_alt_kind {
  ADTLAB_ALT_SIGMA = 0,
  ADTLAB_ALT_PI = 1,
  ADTLAB_ALT_BOTH_BELOW = 2
} adtlab_alt_kind;

typedef struct adtlab_props adtlab_props;
typedef struct adtlab_adt adtlab_adt;
typedef struct adtlab_fo adtlab_fo;
typedef struct adtlab_sere adtlab_sere;
/* An ordered list of traces over one proposition set. */
typedef struct adtlab_traces adtlab_traces;

typedef struct adtlab_verdict {
  adtlab_answer answer;
  adtlab_method method;
  int has_bound;
  size_t bound;
  size_t depth;
} adtlab_verdict;

ADTLAB_API const char* adtlab_last_error(void);
ADTLAB_API const char* adtlab_version(void);
ADTLAB_API void adtlab_string_free(char* s);
ADTLAB_API const char* adtlab_answer_name(adtlab_answer a);
ADTLAB_API const char* adtlab_method_name(adtlab_method m);

/* --- Propositions ------------------------------------------------------- */

ADTLAB_API adtlab_status adtlab_props_new(const char* const* names, size_t count,
                                          adtlab_props** out);
/* Comma-separated list such as "p,q"; "" is the empty set. */
ADTLAB_API adtlab_status adtlab_props_parse(const char* list, adtlab_props** out);
/* Names a text mentions, in order of first appearance. */
ADTLAB_API adtlab_status adtlab_props_collect(const char* text, adtlab_dialect dialect,
                                              adtlab_props** out);
ADTLAB_API void adtlab_props_free(adtlab_props* p);
ADTLAB_API size_t adtlab_props_size(const adtlab_props* p);
/* Borrowed; lives as long as the set. */
ADTLAB_API const char* adtlab_props_name(const adtlab_props* p, size_t i);

/* --- Traces ------------------------------------------------------------- */

ADTLAB_API adtlab_status adtlab_traces_parse_file(const char* text,
                                                  adtlab_traces** out);
ADTLAB_API void adtlab_traces_free(adtlab_traces* t);
ADTLAB_API size_t adtlab_traces_count(const adtlab_traces* t);
ADTLAB_API size_t adtlab_traces_length(const adtlab_traces* t, size_t i);
/* Proposition set of the list; borrowed. */
ADTLAB_API const adtlab_props* adtlab_traces_props(const adtlab_traces* t);
/* One valuation per line, "" for the empty trace. */
ADTLAB_API adtlab_status adtlab_traces_render(const adtlab_traces* t, size_t i,
                                              char** out);
/* Single-line form "{p} {}" with "eps" for the empty trace. */
ADTLAB_API adtlab_status adtlab_traces_render_inline(const adtlab_traces* t, size_t i,
                                                     char** out);
/* Letters over the single proposition p as a/b. */
ADTLAB_API adtlab_status adtlab_traces_ab_string(const adtlab_traces* t, size_t i,
                                                 char** out);
ADTLAB_API adtlab_status adtlab_traces_render_file(const adtlab_traces* t, char** out);

/* --- Trees -------------------------------------------------------------- */

ADTLAB_API adtlab_status adtlab_adt_parse(const char* text, const adtlab_props* props,
                                          adtlab_adt** out);
ADTLAB_API void adtlab_adt_free(adtlab_adt* t);
ADTLAB_API adtlab_status adtlab_adt_render(const adtlab_adt* t, char** out);
ADTLAB_API const adtlab_props* adtlab_adt_props(const adtlab_adt* t);
ADTLAB_API size_t adtlab_adt_size(const adtlab_adt* t);
ADTLAB_API size_t adtlab_adt_depth(const adtlab_adt* t);
ADTLAB_API size_t adtlab_adt_leaves(const adtlab_adt* t);
/* Structural equality; 0 when the proposition sets differ. */
ADTLAB_API int adtlab_adt_equal(const adtlab_adt* a, const adtlab_adt* b);

ADTLAB_API adtlab_status adtlab_member(const adtlab_adt* t, const adtlab_traces* traces,
                                       size_t i, int* out);
/* Accepted traces of length <= maxlen in length-lex order. */
ADTLAB_API adtlab_status adtlab_enumerate(const adtlab_adt* t, size_t maxlen,
                                          size_t budget, adtlab_traces** out);
/* Generators capped at `cap` (0 for the default); `sound` is set to 1 when
 * the tree has countermeasure-depth <= 1. */
ADTLAB_API adtlab_status adtlab_gen(const adtlab_adt* t, size_t cap,
                                    adtlab_traces** out, int* sound);

/* `witness` may be NULL. Otherwise it receives a list holding the witness
 * or counterexample, empty when the verdict has none. */
ADTLAB_API adtlab_status adtlab_nonempty(const adtlab_adt* t,
                                         adtlab_nonempty_method method, int has_maxlen,
                                         size_t maxlen, size_t budget,
                                         adtlab_verdict* out, adtlab_traces** witness);
ADTLAB_API adtlab_status adtlab_equiv(const adtlab_adt* a, const adtlab_adt* b,
                                      adtlab_equiv_method method, int has_maxlen,
                                      size_t maxlen, size_t budget, adtlab_verdict* out,
                                      adtlab_traces** witness);

/* --- First-order formulas ----------------------------------------------- */

ADTLAB_API adtlab_status adtlab_fo_parse(const char* text, const adtlab_props* props,
                                         adtlab_fo** out);
ADTLAB_API void adtlab_fo_free(adtlab_fo* f);
ADTLAB_API adtlab_status adtlab_fo_render(const adtlab_fo* f, char** out);
ADTLAB_API size_t adtlab_fo_size(const adtlab_fo* f);
ADTLAB_API void adtlab_fo_alternation(const adtlab_fo* f, size_t* level,
                                      adtlab_alt_kind* kind);
ADTLAB_API adtlab_status adtlab_fo_eval(const adtlab_fo* f, const adtlab_traces* traces,
                                        size_t i, int* out);
/* A model of length <= maxlen, or an empty list when there is none. */
ADTLAB_API adtlab_status adtlab_fo_sat(const adtlab_fo* f, size_t maxlen, size_t budget,
                                       adtlab_traces** out);
ADTLAB_API adtlab_status adtlab_adt_to_fo(const adtlab_adt* t, adtlab_fo** out);
/* Requires countermeasure-depth 0. */
ADTLAB_API adtlab_status adtlab_adt0_to_pi2(const adtlab_adt* t, adtlab_fo** out);
/* Requires an existential sentence. */
ADTLAB_API adtlab_status adtlab_sigma1_to_adt(const adtlab_fo* f, adtlab_adt** out);

/* --- Expressions -------------------------------------------------------- */

ADTLAB_API adtlab_status adtlab_sere_parse(const char* text, const adtlab_props* props,
                                           adtlab_sere** out);
ADTLAB_API void adtlab_sere_free(adtlab_sere* e);
ADTLAB_API adtlab_status adtlab_sere_render(const adtlab_sere* e, char** out);
ADTLAB_API size_t adtlab_sere_size(const adtlab_sere* e);
ADTLAB_API adtlab_status adtlab_sere_member(const adtlab_sere* e,
                                            const adtlab_traces* traces, size_t i,
                                            int* out);
ADTLAB_API adtlab_status adtlab_adt_to_sere(const adtlab_adt* t, adtlab_sere** out);
ADTLAB_API adtlab_status adtlab_sere_to_adt(const adtlab_sere* e, adtlab_adt** out);

/* --- Witness languages over {a, b} -------------------------------------- */

/* The tree for level k >= 1 of the chosen kind, over the set {p}. */
ADTLAB_API adtlab_status adtlab_witness_tree(size_t k, adtlab_witness_kind kind,
                                             adtlab_adt** out);
/* Words of the language of length <= maxlen, by the defining predicate
 * (recursive = 0) or by the recursive construction (recursive = 1). */
ADTLAB_API adtlab_status adtlab_witness_words(size_t k, adtlab_witness_kind kind,
                                              size_t maxlen, int recursive,
                                              adtlab_traces** out);

#ifdef __cplusplus
}
#endif

#endif /* ADTLAB_ADTLAB_H_ */
