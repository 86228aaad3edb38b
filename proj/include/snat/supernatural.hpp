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

#ifndef SNAT_SUPERNATURAL_HPP
#define SNAT_SUPERNATURAL_HPP

#include "snat/exp.hpp"
#include "snat/prime_set.hpp"
#include "snat/residue_map.hpp"

namespace snat {

using ExpMap = ResidueMap<Exp>;

/// A supernatural (Steinitz) number: a formal product of p^e over all primes
/// with e in N u {inf}, stored as an ExpMap with no negative values.
class Supernatural {
 public:
  /// The number 1.
  Supernatural() = default;

  /// Throws InvalidArgument if any exponent is negative.
  explicit Supernatural(ExpMap exponents);

  static Supernatural natural(const Int& n);
  /// Every exponent infinite.
  static Supernatural all_infinite();
  static Supernatural prime_power(const Int& p, const Exp& e);
  /// The constant exponent map p -> e.
  static Supernatural constant(const Exp& e);

  /// Exponent at p. Throws InvalidArgument if p is not prime.
  Exp exponent(const Int& p) const;

  const ExpMap& exponents() const noexcept { return map_; }

  /// Finitely many nonzero finite exponents, none infinite.
  bool is_natural() const;

  friend bool operator==(const Supernatural& a, const Supernatural& b) { return a.map_ == b.map_; }

 private:
  ExpMap map_;
};

Supernatural mul(const Supernatural& s, const Supernatural& t);
Supernatural lcm(const Supernatural& s, const Supernatural& t);
bool divides(const Supernatural& s, const Supernatural& t);

/// n^inf: every prime divisor of n gets an infinite exponent.
Supernatural infinite_power(const Int& n);

/// Primes with infinite exponent.
PrimeSet infinite_support(const Supernatural& s);

/// Primes with nonzero exponent.
PrimeSet support(const Supernatural& s);

/// s ~ t: same infinite support, and finite exponents agree at all but
/// finitely many primes.
bool equivalent(const Supernatural& s, const Supernatural& t);

/// s || t: some s' ~ s divides some t' ~ t. Decided through the closed form
/// inf(s) <= inf(t) and {p not in inf(t) : s_p > t_p} finite.
bool weakly_divides(const Supernatural& s, const Supernatural& t);

/// Primes where both exponents are finite and s_p > t_p.
PrimeSet finite_excess(const Supernatural& s, const Supernatural& t);

/// True if the natural number n divides s.
bool divides(const Int& n, const Supernatural& s);

}  // namespace snat

#endif  // SNAT_SUPERNATURAL_HPP
