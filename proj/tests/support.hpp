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

// Seeded value generators and brute-force reference computations shared by
// the unit tests and the acceptance runner. The references deliberately avoid
// the library's own machinery beyond reading exponents.

#ifndef SNAT_TESTS_SUPPORT_HPP
#define SNAT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "snat/cones.hpp"
#include "snat/sieve.hpp"
#include "snat/supernatural.hpp"

namespace snat::testing {

inline const std::vector<long> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<long>(items.size()) - 1))];
  }

  long small_prime() { return pick(kSmallPrimes); }

  Exp exp(long max_finite = 3, double inf_weight = 0.2) {
    if (coin(inf_weight)) return Exp::inf();
    return Exp(uniform(0, max_finite));
  }

  /// A modulus from a small menu; 1 is the most common.
  Modulus modulus() { return pick(std::vector<Modulus>{1, 1, 3, 4, 5, 6, 8, 12}); }

  ExpMap exp_map(Modulus m, long max_finite, double inf_weight, int max_exceptions) {
    std::vector<Exp> table(m, Exp(0));
    for (Modulus r : unit_residues(m)) table[r] = exp(max_finite, inf_weight);
    ExpMap::Exceptions ex;
    for (Modulus q : prime_divisors(m)) ex[Int(q)] = exp(max_finite, inf_weight);
    int count = static_cast<int>(uniform(0, max_exceptions));
    for (int i = 0; i < count; ++i) ex[Int(small_prime())] = exp(max_finite, inf_weight);
    return ExpMap(m, std::move(table), std::move(ex));
  }

  /// A supernatural number: a natural number, or a residue-class map.
  Supernatural supernatural() {
    if (coin(0.2)) return Supernatural::natural(Int(uniform(1, 720)));
    return Supernatural(exp_map(modulus(), 3, 0.25, 3));
  }

  /// Changes finitely many finite exponents of s: an equivalent number.
  Supernatural perturb(const Supernatural& s) {
    const ExpMap& m = s.exponents();
    ExpMap::Exceptions ex = m.exceptions();
    int count = static_cast<int>(uniform(0, 3));
    for (int i = 0; i < count; ++i) {
      Int p(small_prime());
      if (m.at(p).is_finite()) ex[p] = Exp(uniform(0, 4));
    }
    std::vector<Exp> table(m.modulus(), Exp(0));
    for (Modulus r : m.units()) table[r] = m.class_value(r);
    return Supernatural(ExpMap(m.modulus(), std::move(table), std::move(ex)));
  }

  FractionalSupernatural fractional() {
    ExpMap base = exp_map(modulus(), 3, 0.25, 2);
    ExpMap::Exceptions ex = base.exceptions();
    int count = static_cast<int>(uniform(0, 3));
    for (int i = 0; i < count; ++i) ex[Int(small_prime())] = Exp(-uniform(1, 3));
    std::vector<Exp> table(base.modulus(), Exp(0));
    for (Modulus r : base.units()) table[r] = base.class_value(r);
    return FractionalSupernatural(ExpMap(base.modulus(), std::move(table), std::move(ex)));
  }

  PrimeSet finite_primes(int max_count) {
    std::vector<Int> ps;
    int count = static_cast<int>(uniform(0, max_count));
    for (int i = 0; i < count; ++i) ps.emplace_back(small_prime());
    return PrimeSet::of(ps);
  }

  /// Mostly infinite prime sets.
  PrimeSet prime_set() {
    switch (uniform(0, 3)) {
      case 0: return finite_primes(4);
      case 1: return PrimeSet::all() - finite_primes(3);
      default: {
        Modulus m = pick(std::vector<Modulus>{3, 4, 5, 8, 12});
        std::vector<Modulus> rs;
        for (Modulus r : unit_residues(m)) {
          if (coin()) rs.push_back(r);
        }
        if (rs.empty()) rs.push_back(1);
        return (PrimeSet::classes(m, rs) | finite_primes(2)) - finite_primes(2);
      }
    }
  }

  Family family() {
    Family f;
    f.cofactor = pick(std::vector<long>{1, 1, 1, 2, 3, 5, 6, 10});
    f.primes = prime_set();
    if (coin(0.7)) {
      f.exponents = ExpMap(Exp(uniform(1, 2)));
    } else {
      Modulus m = pick(std::vector<Modulus>{3, 4});
      std::vector<Exp> table(m, Exp(1));
      for (Modulus r : unit_residues(m)) table[r] = Exp(uniform(1, 3));
      ExpMap::Exceptions ex;
      for (Modulus q : prime_divisors(m)) ex[Int(q)] = Exp(uniform(1, 2));
      f.exponents = ExpMap(m, std::move(table), std::move(ex));
    }
    return f;
  }

  /// A nonempty, proper sieve with up to three finite generators and, when
  /// allowed, up to two families.
  Sieve sieve(bool with_families = true) {
    for (;;) {
      std::vector<Int> gens;
      std::vector<Family> fams;
      int g = static_cast<int>(uniform(0, 3));
      for (int i = 0; i < g; ++i) gens.emplace_back(uniform(2, 60));
      if (with_families) {
        int k = static_cast<int>(uniform(0, 2));
        for (int i = 0; i < k; ++i) fams.push_back(family());
      }
      Sieve s(std::move(gens), std::move(fams));
      if (!s.is_empty()) return s;
    }
  }

  /// An incomparable pair. With `residue_branch` both points share their
  /// infinite support and disagree in both directions on whole residue
  /// classes; otherwise the infinite supports are incomparable.
  std::pair<Supernatural, Supernatural> incomparable_pair(bool residue_branch) {
    if (!residue_branch) {
      for (;;) {
        Supernatural x = mul(Supernatural::prime_power(Int(small_prime()), Exp::inf()), supernatural());
        Supernatural y = mul(Supernatural::prime_power(Int(small_prime()), Exp::inf()), supernatural());
        PrimeSet a = infinite_support(x);
        PrimeSet b = infinite_support(y);
        if (!is_subset(a, b) && !is_subset(b, a)) return {x, y};
      }
    }
    for (;;) {
      Modulus m = pick(std::vector<Modulus>{3, 4, 5, 8, 12});
      std::vector<Exp> tx(m, Exp(0)), ty(m, Exp(0));
      bool up = false, down = false;
      for (Modulus r : unit_residues(m)) {
        if (coin(0.2)) {
          tx[r] = ty[r] = Exp::inf();
          continue;
        }
        tx[r] = Exp(uniform(0, 3));
        ty[r] = Exp(uniform(0, 3));
        up = up || tx[r] < ty[r];
        down = down || ty[r] < tx[r];
      }
      if (!up || !down) continue;
      ExpMap::Exceptions ex, ey;
      for (Modulus q : prime_divisors(m)) {
        ex[Int(q)] = exp(3, 0.3);
        ey[Int(q)] = ex[Int(q)].is_inf() ? Exp::inf() : exp(3, 0.0);
      }
      for (int i = 0; i < 2; ++i) {
        Int p(small_prime());
        if (m % p.get_ui() == 0) continue;
        Exp cx = tx[p.get_ui() % m];
        Exp cy = ty[p.get_ui() % m];
        if (cx.is_finite()) ex[p] = Exp(uniform(0, 5));
        if (cy.is_finite()) ey[p] = Exp(uniform(0, 5));
      }
      return {Supernatural(ExpMap(m, tx, ex)), Supernatural(ExpMap(m, ty, ey))};
    }
  }

  /// A point and a sieve sized for the bounded membership oracle: finite
  /// exponents stay small and generators are products of small primes, so a
  /// refuting divisor (when there is one) and a useful sieve element (when
  /// there is one) both lie far below 10^4.
  std::pair<Supernatural, Sieve> oracle_instance() {
    const std::vector<long> tiny = {2, 3, 5, 7, 11, 13};
    Modulus m = pick(std::vector<Modulus>{1, 1, 3, 4});
    std::vector<Exp> table(m, Exp(0));
    for (Modulus r : unit_residues(m)) table[r] = coin(0.15) ? Exp::inf() : Exp(uniform(0, 1));
    ExpMap::Exceptions ex;
    for (Modulus q : prime_divisors(m)) ex[Int(q)] = Exp(uniform(0, 1));
    for (long p : {2L, 3L, 5L, 7L}) {
      if (coin(0.35)) ex[Int(p)] = Exp::inf();
    }
    for (int i = 0, k = static_cast<int>(uniform(0, 2)); i < k; ++i) {
      Int p(pick(tiny));
      if (!ex.contains(p)) ex[p] = Exp(uniform(0, 2));
    }
    Supernatural s(ExpMap(m, std::move(table), std::move(ex)));

    for (;;) {
      std::vector<Int> gens;
      for (int i = 0, k = static_cast<int>(uniform(0, 3)); i < k; ++i) {
        Int g(pick(tiny));
        if (coin(0.4)) g *= pick(tiny);
        gens.push_back(g);
      }
      std::vector<Family> fams;
      for (int i = 0, k = static_cast<int>(uniform(0, 1)); i < k; ++i) {
        Family f;
        f.cofactor = pick(std::vector<long>{1, 1, 2, 3, 6});
        f.primes = coin() ? PrimeSet::all() - finite_primes(2)
                          : PrimeSet::classes(4, {coin() ? Modulus(1) : Modulus(3)});
        f.exponents = ExpMap(Exp(uniform(1, 2)));
        fams.push_back(std::move(f));
      }
      Sieve v(std::move(gens), std::move(fams));
      if (!v.is_empty()) return {s, v};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Primality table up to n by the sieve of Eratosthenes.
inline std::vector<bool> eratosthenes(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

/// Which of 0..n are sums of generators with at least one term.
inline std::vector<bool> smonoid_table(const std::vector<long>& gens, std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  std::vector<bool> sum(n + 1, false);
  sum[0] = true;
  for (std::size_t k = 1; k <= n; ++k) {
    for (long g : gens) {
      if (static_cast<std::size_t>(g) <= k && sum[k - g]) sum[k] = true;
    }
    reach[k] = sum[k];
  }
  return reach;
}

/// Elements of the monoid up to n none of whose proper divisors lie in it.
inline std::vector<long> minimal_elements(const std::vector<long>& gens, std::size_t n) {
  auto in = smonoid_table(gens, n);
  std::vector<bool> has_smaller(n + 1, false);
  std::vector<long> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (!in[d]) continue;
    if (!has_smaller[d]) out.push_back(static_cast<long>(d));
    for (std::size_t m = 2 * d; m <= n; m += d) has_smaller[m] = true;
  }
  return out;
}

/// m | s, by trial division of m and exponent lookups.
inline bool trial_divides(long m, const Supernatural& s) {
  for (long p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (Exp(e) > s.exponent(Int(p))) return false;
  }
  return true;
}

/// { a n / m : n <= n_max, m <= m_max, m | s }, reduced.
inline std::set<std::pair<long, long>> brute_cone(long a, const Supernatural& s, long n_max, long m_max) {
  std::set<std::pair<long, long>> out;
  for (long m = 1; m <= m_max; ++m) {
    if (!trial_divides(m, s)) continue;
    for (long n = 1; n <= n_max; ++n) {
      long u = a * n;
      long g = std::gcd(u, m);
      out.emplace(u / g, m / g);
    }
  }
  return out;
}

}  // namespace snat::testing

#endif  // SNAT_TESTS_SUPPORT_HPP
