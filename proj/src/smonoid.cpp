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

#include "snat/smonoid.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace snat {

namespace {

constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxSmallest = 10'000'000;
constexpr std::uint64_t kMaxGenerator = 1'000'000'000'000;

}  // namespace

SMonoid::SMonoid(std::vector<Int> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::InvalidArgument, "an S-monoid needs at least one generator");
  std::vector<std::uint64_t> gens;
  for (const Int& g : generators_) {
    if (g < 1) throw Error(ErrorKind::InvalidArgument, "S-monoid generators must be positive");
    if (g > kMaxGenerator) throw Error(ErrorKind::InvalidArgument, "S-monoid generator too large");
    gens.push_back(g.get_ui());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  smallest_ = gens.front();
  if (smallest_ > kMaxSmallest) {
    throw Error(ErrorKind::InvalidArgument, "smallest S-monoid generator too large");
  }
  gcd_ = 0;
  for (auto g : gens) gcd_ = snat::gcd(gcd_, g);

  // Dijkstra over residues mod the smallest generator.
  apery_.assign(smallest_, kUnreachable);
  apery_[0] = 0;
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [dist, r] = queue.top();
    queue.pop();
    if (dist != apery_[r]) continue;
    for (auto g : gens) {
      std::uint64_t next = dist + g;
      std::uint64_t s = next % smallest_;
      if (next < apery_[s]) {
        apery_[s] = next;
        queue.emplace(next, s);
      }
    }
  }
}

bool SMonoid::contains(const Int& n) const {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "S-monoid membership is defined for n >= 1");
  std::uint64_t w = apery_[residue(n, smallest_)];
  return w != kUnreachable && Int(w) <= n;
}

std::optional<std::int64_t> SMonoid::frobenius() const {
  if (gcd_ != 1) return std::nullopt;
  std::uint64_t top = *std::max_element(apery_.begin(), apery_.end());
  return static_cast<std::int64_t>(top) - static_cast<std::int64_t>(smallest_);
}

SMonoidSieve smonoid_to_sieve(const SMonoid& monoid, const Int& bound) {
  auto frob = monoid.frobenius();
  if (!frob) {
    throw Error(ErrorKind::NonCoprimeGenerators, "S-monoid generators are not coprime");
  }
  if (*frob < 1) return {Sieve::full(), true};

  auto f = static_cast<std::uint64_t>(*frob);
  // Every prime beyond F is a member and divisibility-minimal.
  std::vector<Int> small;
  for (auto p : primes_up_to(f)) small.emplace_back(p);
  Family beyond{Int(1), PrimeSet::all() - PrimeSet::of(small), ExpMap(Exp(1))};

  // Other minimal elements are F-smooth, and n/q is a gap for each prime
  // q | n, so n <= F * F.
  Int natural_end = Int(f) * f;
  bool exact = bound >= natural_end;
  Int end = exact ? natural_end : bound;
  if (end > 100'000'000) throw Error(ErrorKind::SearchBudgetExceeded, "minimal-generator search too large");

  std::vector<Int> gens;
  for (std::uint64_t n = 2; n <= end.get_ui(); ++n) {
    Int value(n);
    if (!monoid.contains(value)) continue;
    bool smooth = true, minimal = true;
    std::uint64_t rest = n;
    for (std::uint64_t q = 2; q * q <= rest || rest > 1; ++q) {
      if (q * q > rest) q = rest;
      if (rest % q != 0) continue;
      if (q > f) {
        smooth = false;
        break;
      }
      if (n / q > 1 && monoid.contains(Int(n / q))) {
        minimal = false;
        break;
      }
      while (rest % q == 0) rest /= q;
    }
    if (smooth && minimal) gens.push_back(value);
  }
  return {Sieve(std::move(gens), {std::move(beyond)}), exact};
}

}  // namespace snat
