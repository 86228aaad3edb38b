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

#ifndef SNAT_SIEVE_HPP
#define SNAT_SIEVE_HPP

#include <vector>

#include "snat/supernatural.hpp"

namespace snat {

/// The generator family { cofactor * p^e(p) : p in primes }. Exponents are
/// finite and >= 1.
struct Family {
  Int cofactor = 1;
  PrimeSet primes;
  ExpMap exponents{Exp(1)};

  /// cofactor * p^e(p); p must be a member of `primes`.
  Int instance(const Int& p) const;

  /// Some instance divides n.
  bool divides_into(const Int& n) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.cofactor == b.cofactor && a.primes == b.primes && a.exponents == b.exponents;
  }
};

/// A sieve on the multiplicative monoid of positive integers, i.e. a set of
/// positive integers closed under taking multiples, presented by finitely
/// many generators and finitely many prime-indexed generator families.
///
/// Values are kept in normal form: finite generators are ascending and
/// divisibility-minimal, none is a multiple of a family instance, families
/// carry no per-prime exponent exceptions (those primes are split off as
/// finite generators), and finite families are expanded. The full sieve is
/// sieve(1); the empty sieve has no generators.
class Sieve {
 public:
  /// The empty sieve.
  Sieve() = default;
  Sieve(std::vector<Int> generators, std::vector<Family> families = {});

  static Sieve full() { return Sieve({Int(1)}); }
  static Sieve family(Family f) { return Sieve({}, {std::move(f)}); }

  const std::vector<Int>& generators() const noexcept { return generators_; }
  const std::vector<Family>& families() const noexcept { return families_; }

  bool contains(const Int& n) const;

  bool is_full() const { return generators_.size() == 1 && generators_[0] == 1; }
  bool is_empty() const { return generators_.empty() && families_.empty(); }
  /// Does not contain 1.
  bool is_proper() const { return !is_full(); }

  friend bool operator==(const Sieve& a, const Sieve& b) = default;

 private:
  std::vector<Int> generators_;
  std::vector<Family> families_;
};

/// Re-normalizes a presentation; sieves are always stored normalized, so this
/// is the identity on values and exists for symmetry with the other forms.
Sieve normalize(const Sieve& s);

Sieve unite(const Sieve& s, const Sieve& t);

/// Intersection, generated by pairwise lcms. Throws UnsupportedProduct when
/// both operands carry families.
Sieve product(const Sieve& s, const Sieve& t);

/// { n : c*n in s }.
Sieve transport(const Sieve& s, const Int& c);

}  // namespace snat

#endif  // SNAT_SIEVE_HPP
