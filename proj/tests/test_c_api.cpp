// Copyright 2026 The snat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snat.h"

#include <gtest/gtest.h>

#include <string>

namespace {

std::string take(char* text) {
  std::string out = text ? text : "";
  snat_string_free(text);
  return out;
}

snat_supernat* sup(const char* text) {
  snat_supernat* out = nullptr;
  EXPECT_EQ(snat_supernat_parse(text, &out), SNAT_OK) << snat_last_error();
  return out;
}

snat_sieve* sv(const char* text) {
  snat_sieve* out = nullptr;
  EXPECT_EQ(snat_sieve_parse(text, &out), SNAT_OK) << snat_last_error();
  return out;
}

TEST(CApi, ParseAndPrint) {
  snat_supernat* s = sup("3^4 * 2^inf");
  char* text = nullptr;
  ASSERT_EQ(snat_supernat_print(s, &text), SNAT_OK);
  EXPECT_EQ(take(text), "2^inf * 3^4");
  ASSERT_EQ(snat_supernat_exponent(s, "3", &text), SNAT_OK);
  EXPECT_EQ(take(text), "4");
  ASSERT_EQ(snat_supernat_exponent(s, "2", &text), SNAT_OK);
  EXPECT_EQ(take(text), "inf");
  EXPECT_EQ(snat_supernat_exponent(s, "4", &text), SNAT_ERR_INVALID);
  snat_supernat_free(s);
}

TEST(CApi, ParseErrorsCarryPositions) {
  snat_supernat* s = nullptr;
  EXPECT_EQ(snat_supernat_parse("2^3 * 4^2", &s), SNAT_ERR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(snat_last_error_position(), 6u);
  EXPECT_NE(std::string(snat_last_error()).find("not prime"), std::string::npos);
  EXPECT_EQ(snat_supernat_parse("2^-1", &s), SNAT_ERR_PARSE);
  EXPECT_EQ(snat_fractional_parse("2^-1", &s), SNAT_OK);
  EXPECT_STREQ(snat_last_error(), "");
  // Negative exponents are rejected by operations on supernatural numbers.
  snat_supernat* one = sup("one");
  int out = 0;
  EXPECT_EQ(snat_supernat_divides(s, one, &out), SNAT_ERR_INVALID);
  snat_supernat_free(one);
  snat_supernat_free(s);
}

TEST(CApi, NullArguments) {
  int out = 0;
  EXPECT_EQ(snat_supernat_divides(nullptr, nullptr, &out), SNAT_ERR_INVALID);
  EXPECT_EQ(snat_sieve_parse(nullptr, nullptr), SNAT_ERR_INVALID);
  snat_supernat_free(nullptr);
  snat_sieve_free(nullptr);
  snat_string_free(nullptr);
}

TEST(CApi, Arithmetic) {
  snat_supernat* a = sup("4");
  snat_supernat* b = sup("6");
  snat_supernat* m = nullptr;
  ASSERT_EQ(snat_supernat_mul(a, b, &m), SNAT_OK);
  char* text = nullptr;
  snat_supernat_print(m, &text);
  EXPECT_EQ(take(text), "2^3 * 3");
  snat_supernat* l = nullptr;
  ASSERT_EQ(snat_supernat_lcm(a, b, &l), SNAT_OK);
  snat_supernat_print(l, &text);
  EXPECT_EQ(take(text), "2^2 * 3");
  int out = -1;
  EXPECT_EQ(snat_supernat_divides(a, l, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(snat_supernat_equivalent(a, b, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(snat_supernat_weakly_divides(m, a, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  snat_primeset* inf = nullptr;
  ASSERT_EQ(snat_supernat_infinite_support(m, &inf), SNAT_OK);
  int infinite = -1;
  snat_primeset_is_infinite(inf, &infinite);
  EXPECT_EQ(infinite, 0);
  snat_primeset_free(inf);
  for (auto* p : {a, b, m, l}) snat_supernat_free(p);
}

TEST(CApi, PrimeSets) {
  snat_primeset* p = nullptr;
  ASSERT_EQ(snat_primeset_parse("classes(1 mod 4)", &p), SNAT_OK);
  char* text = nullptr;
  ASSERT_EQ(snat_primeset_members(p, "30", &text), SNAT_OK);
  EXPECT_EQ(take(text), "5,13,17,29");
  int infinite = 0;
  snat_primeset_is_infinite(p, &infinite);
  EXPECT_EQ(infinite, 1);
  snat_primeset_free(p);
}

TEST(CApi, Sieves) {
  snat_sieve* a = sv("sieve(4)");
  snat_sieve* f = sv("family(cofactor=1; primes=all-{2}; exp=1)");
  snat_sieve* p = nullptr;
  ASSERT_EQ(snat_sieve_product(a, f, &p), SNAT_OK);
  char* text = nullptr;
  snat_sieve_print(p, &text);
  EXPECT_EQ(take(text), "family(cofactor=4; primes=all - {2}; exp=1)");
  snat_sieve* q = nullptr;
  EXPECT_EQ(snat_sieve_product(f, f, &q), SNAT_ERR_UNSUPPORTED_PRODUCT);
  EXPECT_EQ(q, nullptr);
  snat_sieve* u = nullptr;
  ASSERT_EQ(snat_sieve_union(a, f, &u), SNAT_OK);
  int out = 0;
  snat_sieve_contains(u, "4", &out);
  EXPECT_EQ(out, 1);
  snat_sieve* t = nullptr;
  ASSERT_EQ(snat_sieve_transport(a, "2", &t), SNAT_OK);
  snat_sieve_print(t, &text);
  EXPECT_EQ(take(text), "sieve(2)");
  EXPECT_EQ(snat_sieve_transport(a, "-2", &t), SNAT_ERR_PARSE);
  for (auto* s : {a, f, p, u, t}) snat_sieve_free(s);
}

TEST(CApi, Monoids) {
  int out = -1;
  EXPECT_EQ(snat_smonoid_contains("3,5", "7", &out), SNAT_OK);
  EXPECT_EQ(out, 0);
  snat_sieve* s = nullptr;
  int exact = 0;
  ASSERT_EQ(snat_smonoid_to_sieve("3,5", "10000", &s, &exact), SNAT_OK);
  EXPECT_EQ(exact, 1);
  char* text = nullptr;
  snat_sieve_print(s, &text);
  EXPECT_EQ(take(text), "sieve(3,5,8,14,49) + family(cofactor=1; primes=all - {2,3,5,7}; exp=1)");
  snat_sieve_free(s);
  EXPECT_EQ(snat_smonoid_to_sieve("4,6", "100", &s, &exact), SNAT_ERR_NON_COPRIME);
}

TEST(CApi, Topology) {
  snat_supernat* x = sup("2^inf");
  snat_supernat* y = sup("3^inf");
  snat_sieve* two = sv("sieve(2)");
  snat_sieve* three = sv("sieve(3)");
  const snat_sieve* both[] = {two, three};
  int out = -1;
  EXPECT_EQ(snat_member(x, both, 1, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(snat_member(x, both, 2, &out), SNAT_OK);
  EXPECT_EQ(out, 0);
  EXPECT_EQ(snat_member(x, nullptr, 0, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(snat_incomparable(x, y, &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  snat_sieve* left = nullptr;
  snat_sieve* right = nullptr;
  int m[4] = {-1, -1, -1, -1};
  ASSERT_EQ(snat_separate(x, y, &left, &right, m), SNAT_OK);
  EXPECT_EQ(m[0], 1);
  EXPECT_EQ(m[1], 0);
  EXPECT_EQ(m[2], 0);
  EXPECT_EQ(m[3], 1);
  snat_sieve_free(left);
  snat_sieve_free(right);
  EXPECT_EQ(snat_separate(x, x, &left, &right, m), SNAT_ERR_NOT_INCOMPARABLE);
  for (auto* s : {two, three}) snat_sieve_free(s);
  for (auto* s : {x, y}) snat_supernat_free(s);
}

TEST(CApi, Cones) {
  snat_supernat* f = nullptr;
  ASSERT_EQ(snat_fractional_parse("2^-3 * 5^inf * 7^2", &f), SNAT_OK);
  char* a = nullptr;
  snat_supernat* s = nullptr;
  ASSERT_EQ(snat_bz_to_pair(f, &a, &s), SNAT_OK);
  std::string a_text = take(a);
  EXPECT_EQ(a_text, "8");
  snat_supernat* back = nullptr;
  ASSERT_EQ(snat_bz_to_frac(a_text.c_str(), s, &back), SNAT_OK);
  char* text = nullptr;
  snat_supernat_print(back, &text);
  EXPECT_EQ(take(text), "2^-3 * 5^inf * 7^2");
  int out = -1;
  EXPECT_EQ(snat_cone_contains("8", s, "8/5", &out), SNAT_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(snat_cone_contains("8", s, "2/5", &out), SNAT_OK);
  EXPECT_EQ(out, 0);
  EXPECT_EQ(snat_cone_contains("2", f, "2/5", &out), SNAT_ERR_INVALID);
  ASSERT_EQ(snat_cone_list("8", s, "16", "5", &text), SNAT_OK);
  EXPECT_EQ(take(text), "8/5,16/5,8,16");
  snat_supernat* one = sup("one");
  EXPECT_EQ(snat_cone_isomorphic("8", s, "1", one, &out), SNAT_OK);
  EXPECT_EQ(out, 0);
  for (auto* p : {f, s, back, one}) snat_supernat_free(p);
}

TEST(CApi, Oracles) {
  snat_supernat* s = sup("2^inf");
  snat_sieve* c = sv("sieve(2)");
  snat_window* w = nullptr;
  ASSERT_EQ(snat_window_cone("1", s, c, "2", "2", &w), SNAT_OK);
  char* text = nullptr;
  snat_window_elements(w, &text);
  EXPECT_EQ(take(text), "1/2,1,2");
  int verified = -1;
  ASSERT_EQ(snat_oracle_rank_one(w, "64", &verified, &text), SNAT_OK);
  EXPECT_EQ(verified, 1);
  EXPECT_EQ(take(text), "w 1/2 1/2 1/4 2 2\nw 1/2 1 1/4 2 4\nw 1/2 2 1/4 2 8\nw 1 1 1/2 2 2\nw 1 2 1/2 2 4\nw 2 2 1 2 2\n");
  int closed = -1;
  EXPECT_EQ(snat_oracle_additively_closed(w, &closed), SNAT_OK);
  EXPECT_EQ(closed, 1);
  snat_window_free(w);

  snat_window* chain = nullptr;
  ASSERT_EQ(snat_window_chain("2,6", c, "3", "6", &chain), SNAT_OK);
  snat_window_elements(chain, &text);
  EXPECT_EQ(take(text), "1/3,2/3,1,2,3");
  snat_window_free(chain);
  EXPECT_EQ(snat_window_chain("3", c, "3", "6", &chain), SNAT_ERR_INVALID);

  snat_sieve* full = sv("sieve(1)");
  ASSERT_EQ(snat_oracle_chain(full, "1,1/2,1/6", "100", &text), SNAT_OK);
  EXPECT_EQ(take(text), "2,6");
  EXPECT_EQ(snat_oracle_chain(c, "1,1/3", "3", &text), SNAT_ERR_CONSTRUCTION_STUCK);

  snat_supernat* t = sup("2^inf * 3^inf * 5^2");
  snat_sieve* ten = sv("sieve(10)");
  int consistent = -1;
  char* witness = nullptr;
  ASSERT_EQ(snat_oracle_verify_member(t, ten, "1000", "1000", &consistent, &witness), SNAT_OK);
  EXPECT_EQ(consistent, 0);
  EXPECT_EQ(take(witness), "25");
  ASSERT_EQ(snat_oracle_verify_member(s, c, "1000", "1000", &consistent, &witness), SNAT_OK);
  EXPECT_EQ(consistent, 1);
  EXPECT_EQ(witness, nullptr);
  for (auto* p : {c, full, ten}) snat_sieve_free(p);
  for (auto* p : {s, t}) snat_supernat_free(p);
}

}  // namespace
