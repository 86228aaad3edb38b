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

#ifndef SNAT_SMONOID_HPP
#define SNAT_SMONOID_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "snat/sieve.hpp"

namespace snat {

/// The additively closed monoid (c1 N + ... + ck N) minus {0}.
///
/// Membership goes through the Apery set of the smallest generator a: for
/// each residue r mod a, the least element congruent to r. Then n belongs
/// iff n >= apery[n mod a].
class SMonoid {
 public:
  /// Generators must be positive; the smallest one is limited to 10^7 and
  /// all of them to 10^12.
  explicit SMonoid(std::vector<Int> generators);

  const std::vector<Int>& generators() const noexcept { return generators_; }

  bool contains(const Int& n) const;

  std::uint64_t gcd() const noexcept { return gcd_; }

  /// Largest positive integer outside the monoid, -1 if there is none.
  /// nullopt when the generators share a factor (infinitely many gaps).
  std::optional<std::int64_t> frobenius() const;

 private:
  std::vector<Int> generators_;
  std::uint64_t smallest_ = 1;
  std::uint64_t gcd_ = 1;
  std::vector<std::uint64_t> apery_;  // UINT64_MAX where unreachable
};

struct SMonoidSieve {
  Sieve sieve;
  /// False when the minimal-generator search stopped at the bound before its
  /// natural end (Frobenius number squared).
  bool exact;
};

/// The monoid as a sieve: a family over the primes beyond the Frobenius
/// number plus the divisibility-minimal elements supported on smaller
/// primes, searched up to `bound`. Throws NonCoprimeGenerators if the
/// generators share a factor.
SMonoidSieve smonoid_to_sieve(const SMonoid& monoid, const Int& bound);

}  // namespace snat

#endif  // SNAT_SMONOID_HPP
