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

#include "snat/topology.hpp"

#include <algorithm>

namespace snat {

namespace {

bool support_within(const Int& n, const PrimeSet& set) {
  auto primes = prime_divisors(n);
  return std::all_of(primes.begin(), primes.end(), [&](const Int& p) { return set.contains(p); });
}

bool family_member(const Family& f, const Supernatural& s, const PrimeSet& inf) {
  if (!support_within(f.cofactor, inf)) return false;
  // (b) one instance with all of its support infinite in s.
  if (!(f.primes & inf).is_empty()) return true;
  // (c) infinitely many instances m p^e_p with e_p <= s_p.
  PrimeSet fits(zip(f.exponents, s.exponents(), [](const Exp& e, const Exp& v) { return e <= v; }));
  return (f.primes & fits).is_infinite();
}

}  // namespace

bool member(const PointClass& x, const Sieve& s) {
  if (s.is_full()) return true;
  if (s.is_empty()) return false;
  PrimeSet inf = infinite_support(x.rep);
  for (const Int& g : s.generators()) {
    if (support_within(g, inf)) return true;
  }
  return std::any_of(s.families().begin(), s.families().end(),
                     [&](const Family& f) { return family_member(f, x.rep, inf); });
}

bool member_intersection(const PointClass& x, const std::vector<Sieve>& sieves) {
  return std::all_of(sieves.begin(), sieves.end(), [&](const Sieve& s) { return member(x, s); });
}

bool incomparable(const PointClass& x, const PointClass& y) {
  return !weakly_divides(x.rep, y.rep) && !weakly_divides(y.rep, x.rep);
}

bool incomparable_by_exceptional_sets(const PointClass& x, const PointClass& y) {
  PrimeSet ix = infinite_support(x.rep);
  PrimeSet iy = infinite_support(y.rep);
  if (!is_subset(ix, iy) && !is_subset(iy, ix)) return true;
  return finite_excess(x.rep, y.rep).is_infinite() && finite_excess(y.rep, x.rep).is_infinite();
}

Sieve separating_side(const PointClass& x, const PointClass& y, std::size_t prime_cap) {
  if (weakly_divides(x.rep, y.rep)) {
    throw Error(ErrorKind::NotSeparable, "the first point weakly divides the second");
  }
  PrimeSet ix = infinite_support(x.rep);
  PrimeSet iy = infinite_support(y.rep);
  PrimeSet only_x = ix - iy;
  if (!only_x.is_empty()) {
    auto p = only_x.smallest(prime_cap);
    return Sieve({*p});
  }
  PrimeSet excess = finite_excess(x.rep, y.rep);
  // Exponents of x on the excess set are finite and >= 1; elsewhere they are
  // irrelevant and replaced by 1 to keep the family well formed.
  ExpMap exps = x.rep.exponents().transform([](const Exp& e) {
    return (e.is_inf() || e < Exp(1)) ? Exp(1) : e;
  });
  return Sieve::family(Family{Int(1), excess, std::move(exps)});
}

SeparationWitness separating_sieves(const PointClass& x, const PointClass& y, std::size_t prime_cap) {
  if (!incomparable(x, y)) throw Error(ErrorKind::NotIncomparable, "points are comparable");
  SeparationWitness w{separating_side(x, y, prime_cap), separating_side(y, x, prime_cap),
                      false, false, false, false};
  w.x_in_left = member(x, w.left);
  w.y_in_left = member(y, w.left);
  w.x_in_right = member(x, w.right);
  w.y_in_right = member(y, w.right);
  if (!w.x_in_left || w.y_in_left || w.x_in_right || !w.y_in_right) {
    throw std::logic_error("separation postcondition failed");
  }
  return w;
}

}  // namespace snat
