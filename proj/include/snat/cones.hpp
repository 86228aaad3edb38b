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

#ifndef SNAT_CONES_HPP
#define SNAT_CONES_HPP

#include <vector>

#include "snat/supernatural.hpp"

namespace snat {

/// A positive rational in lowest terms.
class PositiveRational {
 public:
  PositiveRational() = default;
  /// Reduces num/den; both must be positive.
  PositiveRational(Int num, Int den = 1);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  friend bool operator==(const PositiveRational& a, const PositiveRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const PositiveRational& a, const PositiveRational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  friend PositiveRational operator+(const PositiveRational& a, const PositiveRational& b);
  friend PositiveRational operator*(const PositiveRational& a, const PositiveRational& b);
  friend PositiveRational operator/(const PositiveRational& a, const PositiveRational& b);

  bool is_integer() const { return den_ == 1; }

 private:
  Int num_ = 1;
  Int den_ = 1;
};

/// A formal product of prime powers with exponents in Z u {inf}, negative
/// only at finitely many primes (the exceptions of the map). Class values
/// stay >= 0 or inf.
class FractionalSupernatural {
 public:
  FractionalSupernatural() = default;
  explicit FractionalSupernatural(ExpMap exponents);
  FractionalSupernatural(const Supernatural& s)  // NOLINT(google-explicit-constructor)
      : map_(s.exponents()) {}

  const ExpMap& exponents() const noexcept { return map_; }

  friend bool operator==(const FractionalSupernatural& a, const FractionalSupernatural& b) {
    return a.map_ == b.map_;
  }

 private:
  ExpMap map_;
};

/// The datum (a, s) of a rational cone: a is coprime to every prime in the
/// support of s.
struct BZPair {
  BZPair(Int a, Supernatural s);

  Int a;
  Supernatural s;

  friend bool operator==(const BZPair& x, const BZPair& y) { return x.a == y.a && x.s == y.s; }
};

/// a is the product of p^-f_p over the negative exponents; s = a * f.
BZPair frac_to_pair(const FractionalSupernatural& f);
/// f = s / a.
FractionalSupernatural pair_to_frac(const BZPair& p);

/// q in Q+(a, s) = { a n / m : n >= 1, m | s }. For q = u/v in lowest terms
/// this holds iff v | s and a | u (a is coprime to every m dividing s).
bool cone_contains(const BZPair& p, const PositiveRational& q);

/// The reduced members u/v of the cone with u <= num_bound and
/// v <= den_bound, ascending.
std::vector<PositiveRational> cone_enumerate(const BZPair& p, const Int& num_bound, const Int& den_bound);

/// Cones are isomorphic as C-sets iff the supernatural parts are equivalent.
bool cones_isomorphic(const BZPair& p, const BZPair& q);

}  // namespace snat

#endif  // SNAT_CONES_HPP
