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

#include "snat/prime_set.hpp"

#include <algorithm>

namespace snat {

std::vector<Modulus> unit_residues(Modulus m) {
  std::vector<Modulus> out;
  if (m == 1) return {0};
  for (Modulus r = 1; r < m; ++r) {
    if (gcd(r, m) == 1) out.push_back(r);
  }
  return out;
}

PrimeSet PrimeSet::all() { return PrimeSet(ResidueMap<bool>(true)); }

PrimeSet PrimeSet::of(const std::vector<Int>& primes) {
  ResidueMap<bool>::Exceptions ex;
  for (const Int& p : primes) ex[p] = true;
  return PrimeSet(ResidueMap<bool>(1, {false}, std::move(ex)));
}

PrimeSet PrimeSet::classes(Modulus m, const std::vector<Modulus>& residues) {
  return from_parts(m, residues, {}, {});
}

PrimeSet PrimeSet::from_parts(Modulus m, const std::vector<Modulus>& residues,
                              const std::vector<Int>& include, const std::vector<Int>& exclude) {
  if (m == 0 || m > kMaxModulus) {
    throw Error(ErrorKind::InvalidArgument, "prime set modulus out of range");
  }
  std::vector<bool> table(m, false);
  for (Modulus r : residues) {
    if (r >= m || gcd(r, m) != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  std::to_string(r) + " is not a unit residue mod " + std::to_string(m));
    }
    table[r] = true;
  }
  ResidueMap<bool>::Exceptions ex;
  for (Modulus q : prime_divisors(m)) ex[Int(q)] = false;
  for (const Int& p : exclude) ex[p] = false;
  for (const Int& p : include) {
    if (std::find(exclude.begin(), exclude.end(), p) != exclude.end()) {
      throw Error(ErrorKind::InvalidArgument, "prime " + to_string(p) + " both included and excluded");
    }
    ex[p] = true;
  }
  return PrimeSet(ResidueMap<bool>(m, std::move(table), std::move(ex)));
}

bool PrimeSet::is_infinite() const {
  return map_.any_class([](bool v) { return v; });
}

bool PrimeSet::is_empty() const {
  return !is_infinite() && !map_.any_exception([](const Int&, bool v) { return v; });
}

std::vector<Int> PrimeSet::members(const Int& bound) const {
  std::vector<Int> out;
  if (bound < 2) return out;
  if (bound > 2'000'000'000) {
    throw Error(ErrorKind::InvalidArgument, "prime enumeration bound too large");
  }
  for (std::uint64_t p : primes_up_to(bound.get_ui())) {
    if (contains(Int(p))) out.emplace_back(p);
  }
  return out;
}

std::optional<Int> PrimeSet::smallest(std::size_t prime_cap) const {
  std::optional<Int> listed;
  for (const auto& [p, v] : map_.exceptions()) {
    if (v) {
      listed = p;
      break;
    }
  }
  if (!is_infinite()) return listed;
  auto scan = [&](std::span<const std::uint64_t> primes) -> std::optional<Int> {
    for (std::uint64_t q : primes) {
      Int p(q);
      if (listed && p > *listed) return listed;
      if (contains(p)) return p;
    }
    return std::nullopt;
  };
  auto table = small_primes();
  std::optional<Int> found;
  if (prime_cap <= table.size()) {
    found = scan(table.first(prime_cap));
  } else {
    auto primes = first_primes(prime_cap);
    found = scan(primes);
  }
  if (found) return found;
  if (listed) return listed;
  throw Error(ErrorKind::SearchBudgetExceeded,
              "no member among the first " + std::to_string(prime_cap) + " primes");
}

std::vector<Modulus> PrimeSet::class_residues() const {
  std::vector<Modulus> out;
  for (Modulus r : map_.units()) {
    if (map_.class_value(r)) out.push_back(r);
  }
  return out;
}

std::vector<Int> PrimeSet::included() const {
  std::vector<Int> out;
  for (const auto& [p, v] : map_.exceptions()) {
    if (v) out.push_back(p);
  }
  return out;
}

std::vector<Int> PrimeSet::excluded() const {
  std::vector<Int> out;
  for (const auto& [p, v] : map_.exceptions()) {
    Modulus r = residue(p, modulus());
    if (!v && gcd(r, modulus()) == 1 && map_.class_value(r)) {
      out.push_back(p);
    }
  }
  return out;
}

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b) {
  return PrimeSet(zip(a.map(), b.map(), [](bool x, bool y) { return x || y; }));
}

PrimeSet operator&(const PrimeSet& a, const PrimeSet& b) {
  return PrimeSet(zip(a.map(), b.map(), [](bool x, bool y) { return x && y; }));
}

PrimeSet operator-(const PrimeSet& a, const PrimeSet& b) {
  return PrimeSet(zip(a.map(), b.map(), [](bool x, bool y) { return x && !y; }));
}

PrimeSet complement(const PrimeSet& a) {
  return PrimeSet(a.map().transform([](bool x) { return !x; }));
}

bool is_subset(const PrimeSet& a, const PrimeSet& b) { return (a - b).is_empty(); }

}  // namespace snat
