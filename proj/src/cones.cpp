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

#include "snat/cones.hpp"

#include <algorithm>

namespace snat {

PositiveRational::PositiveRational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ < 1 || den_ < 1) throw Error(ErrorKind::InvalidArgument, "rational must be positive");
  Int g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

PositiveRational operator+(const PositiveRational& a, const PositiveRational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

PositiveRational operator*(const PositiveRational& a, const PositiveRational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

PositiveRational operator/(const PositiveRational& a, const PositiveRational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

FractionalSupernatural::FractionalSupernatural(ExpMap exponents) : map_(std::move(exponents)) {
  if (map_.any_class([](const Exp& e) { return e.is_negative(); })) {
    throw Error(ErrorKind::InvalidArgument, "negative exponents may occur at finitely many primes only");
  }
}

BZPair::BZPair(Int a_, Supernatural s_) : a(std::move(a_)), s(std::move(s_)) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "a must be positive");
  for (const Int& p : prime_divisors(a)) {
    if (Exp(0) < s.exponents().at(p)) {
      throw Error(ErrorKind::InvalidArgument, "a must be coprime to the support of s");
    }
  }
}

BZPair frac_to_pair(const FractionalSupernatural& f) {
  Int a = 1;
  for (const auto& [p, e] : f.exponents().exceptions()) {
    if (!e.is_negative()) continue;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), Int(-e.value()).get_ui());
    a *= pw;
  }
  ExpMap s = f.exponents().transform([](const Exp& e) { return e.is_negative() ? Exp(0) : e; });
  return BZPair(a, Supernatural(std::move(s)));
}

FractionalSupernatural pair_to_frac(const BZPair& p) {
  ExpMap a = Supernatural::natural(p.a).exponents();
  return FractionalSupernatural(zip(p.s.exponents(), a, [](const Exp& x, const Exp& y) { return x - y; }));
}

bool cone_contains(const BZPair& p, const PositiveRational& q) {
  return divides(q.den(), p.s) && mpz_divisible_p(q.num().get_mpz_t(), p.a.get_mpz_t()) != 0;
}

std::vector<PositiveRational> cone_enumerate(const BZPair& p, const Int& num_bound, const Int& den_bound) {
  if (num_bound < 1 || den_bound < 1) throw Error(ErrorKind::InvalidArgument, "bounds must be positive");
  if (num_bound * den_bound > 100'000'000) throw Error(ErrorKind::InvalidArgument, "enumeration bounds too large");
  std::vector<PositiveRational> out;
  for (Int v = 1; v <= den_bound; ++v) {
    if (!divides(v, p.s)) continue;
    for (Int u = p.a; u <= num_bound; u += p.a) {
      if (gcd(u, v) == 1) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cones_isomorphic(const BZPair& p, const BZPair& q) { return equivalent(p.s, q.s); }

}  // namespace snat
