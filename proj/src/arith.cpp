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

#include "snat/arith.hpp"

#include <algorithm>
#include <cmath>

#include "snat/error.hpp"

namespace snat {

namespace {

constexpr std::uint64_t kSmallPrimeLimit = 1'300'000;
constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;
constexpr unsigned long kRhoIterations = 2'000'000;

std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

// Pollard-Brent; returns a nontrivial factor of the odd composite n or 0 when
// the iteration budget runs out.
Int rho_factor(const Int& n) {
  for (unsigned long c = 1; c < 64; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys;
    unsigned long r = 1, spent = 0;
    auto f = [&](const Int& v) {
      Int w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        unsigned long steps = std::min<unsigned long>(128, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          Int diff = x > y ? Int(x - y) : Int(y - x);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        d = gcd(q, n);
        k += steps;
        spent += steps;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1 && spent < kRhoIterations);
    if (d == n) {
      do {
        ys = f(ys);
        Int diff = x > ys ? Int(x - ys) : Int(ys - x);
        d = gcd(diff, n);
      } while (d == 1);
    }
    if (d != 1 && d != n) return d;
    if (spent >= kRhoIterations) break;
  }
  return 0;
}

void split_cofactor(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = rho_factor(n);
  if (d == 0) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                "could not factor " + to_string(n) + " within budget");
  }
  split_cofactor(d, out);
  split_cofactor(Int(n / d), out);
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnsupportedProduct: return "UnsupportedProduct";
    case ErrorKind::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotIncomparable: return "NotIncomparable";
    case ErrorKind::ConstructionStuck: return "ConstructionStuck";
  }
  return "Error";
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::span<const std::uint64_t> small_primes() {
  static const std::vector<std::uint64_t> table = sieve_primes(kSmallPrimeLimit);
  return table;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  auto table = small_primes();
  if (count <= table.size()) {
    return {table.begin(), table.begin() + static_cast<std::ptrdiff_t>(count)};
  }
  // p_n < n (ln n + ln ln n) for n >= 6.
  double n = static_cast<double>(count);
  auto bound = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 10;
  auto primes = sieve_primes(bound);
  primes.resize(count);
  return primes;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  auto table = small_primes();
  if (bound < kSmallPrimeLimit) {
    auto end = std::upper_bound(table.begin(), table.end(), bound);
    return {table.begin(), end};
  }
  return sieve_primes(bound);
}

std::vector<PrimePower> factorize(const Int& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorize: n must be positive");
  std::vector<PrimePower> out;
  if (n.fits_ulong_p() && n.get_ui() < kTrialDivisionLimit * kTrialDivisionLimit) {
    // Native trial division settles anything below the square of the limit.
    unsigned long rest = n.get_ui();
    for (std::uint64_t p : small_primes()) {
      if (p * p > rest) break;
      if (rest % p != 0) continue;
      unsigned long e = 0;
      do {
        rest /= p;
        ++e;
      } while (rest % p == 0);
      out.push_back({Int(p), e});
    }
    if (rest > 1) out.push_back({Int(rest), 1});
    return out;
  }
  Int rest = n;
  for (std::uint64_t p : small_primes()) {
    if (p > kTrialDivisionLimit) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.push_back({Int(p), e});
  }
  if (rest == 1) return out;
  std::vector<Int> large;
  split_cofactor(rest, large);
  std::sort(large.begin(), large.end());
  for (const Int& p : large) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<Modulus> prime_divisors(Modulus n) {
  std::vector<Modulus> out;
  for (Modulus p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Modulus residue(const Int& n, Modulus m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

Modulus gcd(Modulus a, Modulus b) {
  while (b != 0) {
    Modulus t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Modulus lcm_modulus(Modulus a, Modulus b) {
  Modulus g = gcd(a, b);
  Modulus l = a / g * b;
  if (l > kMaxModulus || l / b != a / g) {
    throw Error(ErrorKind::InvalidArgument,
                "residue modulus " + std::to_string(a) + " * " + std::to_string(b) +
                    " exceeds the supported maximum");
  }
  return l;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::string to_string(const Int& n) { return n.get_str(); }

bool parse_int(const std::string& text, Int& out) {
  if (text.empty() || text.size() > 4096) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  out.set_str(text, 10);
  return true;
}

}  // namespace snat
