/*
 * Copyright 2026 The snat Authors
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

/*
 * C interface to the snat library.
 *
 * Values live behind opaque handles that the caller releases with the
 * matching *_free function. Integers cross the boundary as decimal strings,
 * since they are arbitrary precision. Every function returns an snat_status;
 * on failure, snat_last_error() describes the problem for the calling thread
 * and output parameters are left untouched. Strings returned through char**
 * are owned by the caller and released with snat_string_free.
 *
 * Literal grammars are described in docs/grammar.md.
 */
#ifndef SNAT_H
#define SNAT_H

#include <stddef.h>

#if defined(_WIN32)
#define SNAT_API __declspec(dllexport)
#else
#define SNAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum snat_status {
  SNAT_OK = 0,
  SNAT_ERR_PARSE = 1,
  SNAT_ERR_INVALID = 2,
  SNAT_ERR_UNSUPPORTED_PRODUCT = 3,
  SNAT_ERR_NON_COPRIME = 4,
  SNAT_ERR_SEARCH_BUDGET = 5,
  SNAT_ERR_NOT_SEPARABLE = 6,
  SNAT_ERR_NOT_INCOMPARABLE = 7,
  SNAT_ERR_CONSTRUCTION_STUCK = 8,
  SNAT_ERR_INTERNAL = 9
} snat_status;

/* A supernatural number, or a fractional one if parsed as such. */
typedef struct snat_supernat snat_supernat;
typedef struct snat_primeset snat_primeset;
typedef struct snat_sieve snat_sieve;
/* A bounded window onto a rational cone or chain point. */
typedef struct snat_window snat_window;

SNAT_API const char* snat_status_name(snat_status status);
/* Message of the last failure on this thread; "" if none. */
SNAT_API const char* snat_last_error(void);
/* Byte offset of the last parse failure on this thread. */
SNAT_API size_t snat_last_error_position(void);
SNAT_API void snat_string_free(char* text);

/* ---- supernatural numbers ---- */

SNAT_API snat_status snat_supernat_parse(const char* text, snat_supernat** out);
/* Accepts negative exponents. */
SNAT_API snat_status snat_fractional_parse(const char* text, snat_supernat** out);
SNAT_API void snat_supernat_free(snat_supernat* s);
SNAT_API snat_status snat_supernat_print(const snat_supernat* s, char** out);
/* Exponent at a prime: a decimal integer or "inf". */
SNAT_API snat_status snat_supernat_exponent(const snat_supernat* s, const char* prime, char** out);
SNAT_API snat_status snat_supernat_mul(const snat_supernat* s, const snat_supernat* t, snat_supernat** out);
SNAT_API snat_status snat_supernat_lcm(const snat_supernat* s, const snat_supernat* t, snat_supernat** out);
SNAT_API snat_status snat_supernat_divides(const snat_supernat* s, const snat_supernat* t, int* out);
SNAT_API snat_status snat_supernat_equivalent(const snat_supernat* s, const snat_supernat* t, int* out);
SNAT_API snat_status snat_supernat_weakly_divides(const snat_supernat* s, const snat_supernat* t, int* out);
SNAT_API snat_status snat_supernat_infinite_support(const snat_supernat* s, snat_primeset** out);

/* ---- prime sets ---- */

SNAT_API snat_status snat_primeset_parse(const char* text, snat_primeset** out);
SNAT_API void snat_primeset_free(snat_primeset* set);
SNAT_API snat_status snat_primeset_print(const snat_primeset* set, char** out);
/* Members up to bound, comma separated, ascending. */
SNAT_API snat_status snat_primeset_members(const snat_primeset* set, const char* bound, char** out);
SNAT_API snat_status snat_primeset_is_infinite(const snat_primeset* set, int* out);

/* ---- sieves ---- */

SNAT_API snat_status snat_sieve_parse(const char* text, snat_sieve** out);
SNAT_API void snat_sieve_free(snat_sieve* s);
SNAT_API snat_status snat_sieve_print(const snat_sieve* s, char** out);
SNAT_API snat_status snat_sieve_contains(const snat_sieve* s, const char* n, int* out);
SNAT_API snat_status snat_sieve_union(const snat_sieve* s, const snat_sieve* t, snat_sieve** out);
SNAT_API snat_status snat_sieve_product(const snat_sieve* s, const snat_sieve* t, snat_sieve** out);
SNAT_API snat_status snat_sieve_transport(const snat_sieve* s, const char* c, snat_sieve** out);

/* Additively generated monoid, generators as "3,5". */
SNAT_API snat_status snat_smonoid_contains(const char* generators, const char* n, int* out);
/* *exact is 0 when the minimal-element search stopped at the bound. */
SNAT_API snat_status snat_smonoid_to_sieve(const char* generators, const char* bound, snat_sieve** out,
                                           int* exact);

/* ---- topology ---- */

/* Membership of the point [s] in the intersection of the basic opens. */
SNAT_API snat_status snat_member(const snat_supernat* s, const snat_sieve* const* sieves, size_t count,
                                 int* out);
SNAT_API snat_status snat_incomparable(const snat_supernat* x, const snat_supernat* y, int* out);
/* memberships: x in left, y in left, x in right, y in right. */
SNAT_API snat_status snat_separate(const snat_supernat* x, const snat_supernat* y, snat_sieve** left,
                                   snat_sieve** right, int memberships[4]);

/* ---- rational cones ---- */

/* Splits a fractional supernatural into (a, s). */
SNAT_API snat_status snat_bz_to_pair(const snat_supernat* f, char** a, snat_supernat** s);
SNAT_API snat_status snat_bz_to_frac(const char* a, const snat_supernat* s, snat_supernat** out);
/* q as "u/v" or "u". */
SNAT_API snat_status snat_cone_contains(const char* a, const snat_supernat* s, const char* q, int* out);
/* Comma separated, ascending. */
SNAT_API snat_status snat_cone_list(const char* a, const snat_supernat* s, const char* num_bound,
                                    const char* den_bound, char** out);
SNAT_API snat_status snat_cone_isomorphic(const char* a, const snat_supernat* s, const char* a2,
                                          const snat_supernat* s2, int* out);

/* ---- oracles ---- */

SNAT_API snat_status snat_window_cone(const char* a, const snat_supernat* s, const snat_sieve* monoid,
                                      const char* num_bound, const char* den_bound, snat_window** out);
/* chain as "c1,c2,..." (may be empty). */
SNAT_API snat_status snat_window_chain(const char* chain, const snat_sieve* monoid, const char* num_bound,
                                       const char* den_bound, snat_window** out);
SNAT_API void snat_window_free(snat_window* w);
/* Window elements, comma separated, ascending. */
SNAT_API snat_status snat_window_elements(const snat_window* w, char** out);

/*
 * Rank-one check. *verified is 1 or 0. The report has one line per pair:
 *   "w <a> <a2> <b> <c> <c2>"  (a = c b, a2 = c2 b) when verified,
 *   "u <a> <a2>"               for each unresolved pair otherwise.
 */
SNAT_API snat_status snat_oracle_rank_one(const snat_window* w, const char* search_bound, int* verified,
                                          char** report);
SNAT_API snat_status snat_oracle_additively_closed(const snat_window* w, int* out);
/* Seeds as "1,1/2,1/6"; the chain comes back comma separated. */
SNAT_API snat_status snat_oracle_chain(const snat_sieve* monoid, const char* seeds, const char* search_bound,
                                       char** chain);
/* *witness is NULL when consistent. */
SNAT_API snat_status snat_oracle_verify_member(const snat_supernat* s, const snat_sieve* sieve,
                                               const char* div_bound, const char* factor_bound,
                                               int* consistent, char** witness);

#ifdef __cplusplus
}
#endif

#endif /* SNAT_H */
