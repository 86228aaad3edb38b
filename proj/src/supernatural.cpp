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

#include "snat/supernatural.hpp"

namespace snat {

Supernatural::Supernatural(ExpMap exponents) : map_(std::move(exponents)) {
  bool negative = map_.any_class([](const Exp& e) { return e.is_negative(); }) ||
                  map_.any_exception([](const Int&, const Exp& e) { return e.is_negative(); });
  if (negative) {
    throw Error(ErrorKind::InvalidArgument, "supernatural numbers have nonnegative exponents");
  }
}

Supernatural Supernatural::natural(const Int& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "natural number must be positive");
  ExpMap::Exceptions ex;
  for (const auto& pp : factorize(n)) ex.emplace(pp.prime, Exp(static_cast<long>(pp.exponent)));
  return Supernatural(ExpMap(1, {Exp(0)}, std::move(ex)));
}

Supernatural Supernatural::all_infinite() { return constant(Exp::inf()); }

Supernatural Supernatural::prime_power(const Int& p, const Exp& e) {
  return Supernatural(ExpMap(1, {Exp(0)}, {{p, e}}));
}

Supernatural Supernatural::constant(const Exp& e) { return Supernatural(ExpMap(e)); }

Exp Supernatural::exponent(const Int& p) const {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, to_string(p) + " is not prime");
  return map_.at(p);
}

bool Supernatural::is_natural() const {
  return !map_.any_class([](const Exp& e) { return !(e == Exp(0)); }) &&
         !map_.any_exception([](const Int&, const Exp& e) { return e.is_inf(); });
}

Supernatural mul(const Supernatural& s, const Supernatural& t) {
  return Supernatural(zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) { return a + b; }));
}

Supernatural lcm(const Supernatural& s, const Supernatural& t) {
  return Supernatural(
      zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) { return max(a, b); }));
}

bool divides(const Supernatural& s, const Supernatural& t) {
  auto ok = zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) { return a <= b; });
  return !ok.any_class([](bool v) { return !v; }) &&
         !ok.any_exception([](const Int&, bool v) { return !v; });
}

Supernatural infinite_power(const Int& n) {
  ExpMap::Exceptions ex;
  for (const Int& p : prime_divisors(n)) ex.emplace(p, Exp::inf());
  return Supernatural(ExpMap(1, {Exp(0)}, std::move(ex)));
}

PrimeSet infinite_support(const Supernatural& s) {
  return PrimeSet(s.exponents().transform([](const Exp& e) { return e.is_inf(); }));
}

PrimeSet support(const Supernatural& s) {
  return PrimeSet(s.exponents().transform([](const Exp& e) { return Exp(0) < e; }));
}

PrimeSet finite_excess(const Supernatural& s, const Supernatural& t) {
  return PrimeSet(zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) {
    return a.is_finite() && b.is_finite() && b < a;
  }));
}

bool equivalent(const Supernatural& s, const Supernatural& t) {
  // Classes are infinite, so a class where the values differ (finite and
  // unequal, or exactly one infinite) breaks the relation. Exceptions matter
  // only through the infinite supports.
  auto differ = zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) { return !(a == b); });
  if (differ.any_class([](bool v) { return v; })) return false;
  return infinite_support(s) == infinite_support(t);
}

bool weakly_divides(const Supernatural& s, const Supernatural& t) {
  if (!is_subset(infinite_support(s), infinite_support(t))) return false;
  // With inf(s) inside inf(t), every p outside inf(t) has s_p finite.
  auto excess = zip(s.exponents(), t.exponents(), [](const Exp& a, const Exp& b) {
    return b.is_finite() && b < a;
  });
  return !excess.any_class([](bool v) { return v; });
}

bool divides(const Int& n, const Supernatural& s) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "divisor must be positive");
  for (const auto& pp : factorize(n)) {
    if (s.exponents().at(pp.prime) < Exp(static_cast<long>(pp.exponent))) return false;
  }
  return true;
}

}  // namespace snat
