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

#ifndef SNAT_TOPOLOGY_HPP
#define SNAT_TOPOLOGY_HPP

#include <vector>

#include "snat/sieve.hpp"

namespace snat {

/// The point [Q+(s)] of the arithmetic site: the ~-class of a supernatural
/// number. Everything below depends only on the class.
struct PointClass {
  Supernatural rep;
};

/// Default number of primes scanned when a separating prime must be picked.
inline constexpr std::size_t kDefaultPrimeCap = 100'000;

/// Membership of the point in the basic open X(S).
///
/// The full sieve contains every point; the empty sieve none. Otherwise an
/// infinite product of sieve elements divides s iff one of:
///  (a) a finite generator g has supp(g) inside inf(s) (g reused forever);
///  (b) a family instance m p^e has supp(m) u {p} inside inf(s);
///  (c) a family has supp(m) inside inf(s) and e_p <= s_p for infinitely
///      many p in its prime set (infinitely many distinct instances).
/// Any infinite product must reuse a generator infinitely often or draw
/// infinitely many instances from one family, which gives the converse.
bool member(const PointClass& x, const Sieve& s);

/// Membership in the intersection of the basic opens; true for no sieves.
bool member_intersection(const PointClass& x, const std::vector<Sieve>& sieves);

/// Neither class weakly divides the other.
bool incomparable(const PointClass& x, const PointClass& y);

/// The exceptional-set description of incomparability: the infinite
/// supports are incomparable under inclusion, or both
/// I = {p : inf > x_p > y_p} and J = {p : inf > y_p > x_p} are infinite.
/// It agrees with `incomparable` except when one infinite support strictly
/// contains the other, where it misses pairs that are incomparable.
bool incomparable_by_exceptional_sets(const PointClass& x, const PointClass& y);

/// A sieve W with x in X(W) and y not in X(W). Requires that x does not
/// weakly divide y (NotSeparable otherwise).
///
/// If inf(x) is not inside inf(y), W = sieve(p) for the smallest p in
/// inf(x) \ inf(y) (SearchBudgetExceeded past `prime_cap` primes). Otherwise
/// I' = {p not in inf(y) : x_p > y_p} is infinite and W is the family
/// { p^x_p : p in I' }.
Sieve separating_side(const PointClass& x, const PointClass& y,
                      std::size_t prime_cap = kDefaultPrimeCap);

struct SeparationWitness {
  Sieve left;   // contains x, not y
  Sieve right;  // contains y, not x
  bool x_in_left, y_in_left, x_in_right, y_in_right;
};

/// Both separating sieves of an incomparable pair, with the four memberships
/// re-checked before returning. Throws NotIncomparable otherwise.
SeparationWitness separating_sieves(const PointClass& x, const PointClass& y,
                                    std::size_t prime_cap = kDefaultPrimeCap);

}  // namespace snat

#endif  // SNAT_TOPOLOGY_HPP
