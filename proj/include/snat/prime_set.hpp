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

#ifndef SNAT_PRIME_SET_HPP
#define SNAT_PRIME_SET_HPP

#include <optional>
#include <set>
#include <vector>

#include "snat/residue_map.hpp"

namespace snat {

/// A set of primes: a union of unit residue classes modulo M, plus finitely
/// many included primes, minus finitely many excluded ones.
///
/// Membership of p is (p in include) or (p not in exclude and p mod M is one
/// of the classes). Primes dividing M fall in no unit class and belong to the
/// set only through `include`.
class PrimeSet {
 public:
  /// The empty set.
  PrimeSet() : map_(false) {}

  static PrimeSet all();
  static PrimeSet none() { return PrimeSet(); }
  static PrimeSet of(const std::vector<Int>& primes);
  /// Union of the classes r mod m; every r must be a unit mod m.
  static PrimeSet classes(Modulus m, const std::vector<Modulus>& residues);
  /// General constructor from the four descriptive fields.
  static PrimeSet from_parts(Modulus m, const std::vector<Modulus>& residues,
                             const std::vector<Int>& include, const std::vector<Int>& exclude);

  explicit PrimeSet(ResidueMap<bool> map) : map_(std::move(map)) {}

  bool contains(const Int& p) const { return map_.at(p); }

  /// Contains infinitely many primes. Every unit class mod M holds infinitely
  /// many primes (Dirichlet), so this is the case exactly when some class is
  /// selected after normalization.
  bool is_infinite() const;
  bool is_empty() const;

  /// Members <= bound, ascending.
  std::vector<Int> members(const Int& bound) const;

  /// Smallest member, searching the unit classes through the first
  /// `prime_cap` primes. nullopt for the empty set; throws
  /// SearchBudgetExceeded if the set is nonempty but no member is found
  /// within the cap.
  std::optional<Int> smallest(std::size_t prime_cap) const;

  Modulus modulus() const { return map_.modulus(); }
  /// Selected unit residues, ascending.
  std::vector<Modulus> class_residues() const;
  /// Primes listed individually as members (including those dividing M).
  std::vector<Int> included() const;
  /// Primes removed from the selected classes.
  std::vector<Int> excluded() const;

  const ResidueMap<bool>& map() const noexcept { return map_; }

  PrimeSet refined(Modulus m) const { return PrimeSet(map_.refined(m)); }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.map_ == b.map_; }

 private:
  ResidueMap<bool> map_;
};

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b);
PrimeSet operator&(const PrimeSet& a, const PrimeSet& b);
PrimeSet operator-(const PrimeSet& a, const PrimeSet& b);
PrimeSet complement(const PrimeSet& a);
bool is_subset(const PrimeSet& a, const PrimeSet& b);

}  // namespace snat

#endif  // SNAT_PRIME_SET_HPP
