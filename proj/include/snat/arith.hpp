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

#ifndef SNAT_ARITH_HPP
#define SNAT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace snat {

using Int = mpz_class;
using Modulus = std::uint64_t;

/// One prime power in a factorization.
struct PrimePower {
  Int prime;
  unsigned long exponent;
};

bool is_prime(const Int& n);

/// Factorization of n >= 1 in ascending prime order. Trial division by the
/// primes below 10^6, then Pollard-Brent on what remains. Throws
/// SearchBudgetExceeded if a composite cofactor resists the rho budget.
std::vector<PrimePower> factorize(const Int& n);

/// Distinct prime divisors of n >= 1, ascending.
std::vector<Int> prime_divisors(const Int& n);

std::vector<Modulus> prime_divisors(Modulus n);

/// All primes below 1'300'000 (the first 100'000 primes and a few more).
/// Built once on first use, immutable afterwards.
std::span<const std::uint64_t> small_primes();

/// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Residue of n modulo m (m >= 1), for n >= 0.
Modulus residue(const Int& n, Modulus m);

Modulus gcd(Modulus a, Modulus b);

/// lcm of two moduli; throws InvalidArgument when the result exceeds
/// kMaxModulus.
Modulus lcm_modulus(Modulus a, Modulus b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// p-adic valuation of n > 0.
unsigned long valuation(const Int& n, const Int& p);

/// Largest modulus a residue map may use. Refinement enumerates the unit
/// residues, so this bounds memory.
inline constexpr Modulus kMaxModulus = 1'000'000;

std::string to_string(const Int& n);

/// Parses a nonnegative decimal integer; returns false on anything else.
bool parse_int(const std::string& text, Int& out);

}  // namespace snat

#endif  // SNAT_ARITH_HPP
