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

#include "snat/sieve.hpp"

#include <algorithm>
#include <optional>

namespace snat {

namespace {

Int power(const Int& p, const Exp& e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e.value().get_ui());
  return out;
}

void check_exponents(const ExpMap& e) {
  auto bad = [](const Exp& v) { return v.is_inf() || v < Exp(1); };
  if (e.any_class(bad) || e.any_exception([&](const Int&, const Exp& v) { return bad(v); })) {
    throw Error(ErrorKind::InvalidArgument, "family exponents must be finite and at least 1");
  }
}

// Brings a family into normal form. Instances at primes carrying exponent
// exceptions become finite generators; a family over finitely many primes is
// expanded entirely. Returns nullopt when nothing of the family remains.
std::optional<Family> normalize_family(Family f, std::vector<Int>& generators) {
  if (f.cofactor < 1) throw Error(ErrorKind::InvalidArgument, "family cofactor must be positive");
  check_exponents(f.exponents);

  Modulus m = lcm_modulus(f.primes.modulus(), f.exponents.modulus());
  ExpMap exps = f.exponents.refined(m);
  std::vector<Int> split;
  for (const auto& [p, e] : exps.exceptions()) {
    if (f.primes.contains(p)) {
      generators.push_back(f.cofactor * power(p, e));
      split.push_back(p);
    }
  }
  PrimeSet primes = f.primes - PrimeSet::of(split);
  if (!primes.is_infinite()) {
    for (const Int& p : primes.included()) generators.push_back(f.cofactor * power(p, exps.at(p)));
    return std::nullopt;
  }

  // Only classes that can hold members keep their exponent; the rest are
  // filled with the smallest relevant value so that uniform families print
  // as a single exponent.
  PrimeSet fine = primes.refined(m);
  std::vector<bool> relevant(m, false);
  for (Modulus r : fine.class_residues()) relevant[r] = true;
  for (const Int& p : fine.included()) {
    Modulus r = residue(p, m);
    if (gcd(r, m) == 1) relevant[r] = true;
  }
  std::optional<Exp> lo, hi;
  for (Modulus r : unit_residues(m)) {
    if (!relevant[r]) continue;
    Exp v = exps.class_value(r);
    if (!lo || v < *lo) lo = v;
    if (!hi || *hi < v) hi = v;
  }
  if (*lo == *hi) {
    f.exponents = ExpMap(*lo);
  } else {
    std::vector<Exp> table(m, Exp(1));
    for (Modulus r : unit_residues(m)) table[r] = relevant[r] ? exps.class_value(r) : *lo;
    ExpMap::Exceptions ex;
    for (Modulus q : prime_divisors(m)) ex.emplace(Int(q), Exp(1));
    f.exponents = ExpMap(m, std::move(table), std::move(ex));
  }
  f.primes = std::move(primes);
  return f;
}

}  // namespace

Int Family::instance(const Int& p) const { return cofactor * power(p, exponents.at(p)); }

bool Family::divides_into(const Int& n) const {
  if (mpz_divisible_p(n.get_mpz_t(), cofactor.get_mpz_t()) == 0) return false;
  Int rest = n / cofactor;
  if (rest == 1) return false;
  for (const auto& pp : factorize(rest)) {
    if (!primes.contains(pp.prime)) continue;
    if (Exp(static_cast<long>(pp.exponent)) >= exponents.at(pp.prime)) return true;
  }
  return false;
}

Sieve::Sieve(std::vector<Int> generators, std::vector<Family> families) {
  for (const Int& g : generators) {
    if (g < 1) throw Error(ErrorKind::InvalidArgument, "sieve generators must be positive");
  }
  if (std::any_of(generators.begin(), generators.end(), [](const Int& g) { return g == 1; })) {
    generators_ = {Int(1)};
    return;
  }

  std::vector<Family> kept;
  for (auto& f : families) {
    auto nf = normalize_family(std::move(f), generators);
    if (!nf) continue;
    if (std::find(kept.begin(), kept.end(), *nf) == kept.end()) kept.push_back(std::move(*nf));
  }

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // A family is redundant once a finite generator divides its cofactor.
  std::erase_if(kept, [&](const Family& f) {
    return std::any_of(generators.begin(), generators.end(), [&](const Int& g) {
      return mpz_divisible_p(f.cofactor.get_mpz_t(), g.get_mpz_t()) != 0;
    });
  });

  std::vector<Int> minimal;
  for (const Int& g : generators) {
    bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Int& h) {
      return mpz_divisible_p(g.get_mpz_t(), h.get_mpz_t()) != 0;
    });
    if (covered) continue;
    if (std::any_of(kept.begin(), kept.end(), [&](const Family& f) { return f.divides_into(g); })) continue;
    minimal.push_back(g);
  }
  generators_ = std::move(minimal);
  families_ = std::move(kept);
}

bool Sieve::contains(const Int& n) const {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sieve membership is defined for n >= 1");
  for (const Int& g : generators_) {
    if (mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t()) != 0) return true;
  }
  for (const Family& f : families_) {
    if (f.divides_into(n)) return true;
  }
  return false;
}

Sieve normalize(const Sieve& s) { return Sieve(s.generators(), s.families()); }

Sieve unite(const Sieve& s, const Sieve& t) {
  std::vector<Int> gens = s.generators();
  gens.insert(gens.end(), t.generators().begin(), t.generators().end());
  std::vector<Family> fams = s.families();
  fams.insert(fams.end(), t.families().begin(), t.families().end());
  return Sieve(std::move(gens), std::move(fams));
}

Sieve product(const Sieve& s, const Sieve& t) {
  if (!s.families().empty() && !t.families().empty()) {
    throw Error(ErrorKind::UnsupportedProduct,
                "product of two sieves that both carry generator families has no closed form");
  }
  const Sieve& fam = s.families().empty() ? t : s;
  const Sieve& other = s.families().empty() ? s : t;

  std::vector<Int> gens;
  for (const Int& x : other.generators()) {
    for (const Int& y : fam.generators()) gens.push_back(lcm(x, y));
  }
  std::vector<Family> fams;
  for (const Int& x : other.generators()) {
    for (const Family& f : fam.families()) {
      // lcm(x, m p^e) = lcm(x, m) p^e unless p divides x.
      std::vector<Int> split;
      for (const Int& p : prime_divisors(x)) {
        if (!f.primes.contains(p)) continue;
        gens.push_back(lcm(x, f.instance(p)));
        split.push_back(p);
      }
      fams.push_back(Family{lcm(x, f.cofactor), f.primes - PrimeSet::of(split), f.exponents});
    }
  }
  return Sieve(std::move(gens), std::move(fams));
}

Sieve transport(const Sieve& s, const Int& c) {
  if (c < 1) throw Error(ErrorKind::InvalidArgument, "transport factor must be positive");
  std::vector<Int> gens;
  for (const Int& g : s.generators()) gens.push_back(g / gcd(g, c));
  std::vector<Family> fams;
  for (const Family& f : s.families()) {
    std::vector<Int> split;
    for (const Int& p : prime_divisors(c)) {
      if (!f.primes.contains(p)) continue;
      Int inst = f.instance(p);
      gens.push_back(inst / gcd(inst, c));
      split.push_back(p);
    }
    fams.push_back(Family{f.cofactor / gcd(f.cofactor, c), f.primes - PrimeSet::of(split), f.exponents});
  }
  return Sieve(std::move(gens), std::move(fams));
}

}  // namespace snat
