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

#include "snat/oracle.hpp"

#include <algorithm>

namespace snat {

namespace {

constexpr unsigned long kMaxTable = 20'000'000;

// Membership in the monoid for integers up to a limit, memoized on demand.
class MonoidTable {
 public:
  MonoidTable(const Sieve& monoid, const Int& limit) : monoid_(monoid) {
    if (limit > kMaxTable) throw Error(ErrorKind::InvalidArgument, "search bound too large");
    table_.assign(limit.get_ui() + 1, kUnknown);
  }

  bool contains(const Int& n) const {
    if (n >= static_cast<long>(table_.size())) return monoid_.contains(n);
    char& slot = table_[n.get_ui()];
    if (slot == kUnknown) slot = monoid_.contains(n) ? 1 : 0;
    return slot != 0;
  }

  /// Elements <= limit, ascending.
  std::vector<Int> elements() const {
    std::vector<Int> out;
    for (unsigned long k = 1; k < table_.size(); ++k) {
      if (contains(Int(k))) out.emplace_back(k);
    }
    return out;
  }

 private:
  static constexpr char kUnknown = -1;
  const Sieve& monoid_;
  mutable std::vector<char> table_;
};

bool has_element(const TruncatedCone& cone, const PositiveRational& q) {
  return std::binary_search(cone.elements.begin(), cone.elements.end(), q);
}

Int to_int(const PositiveRational& q) { return q.num(); }

}  // namespace

TruncatedCone truncate_cone(const BZPair& pair, const Sieve& monoid, const Int& num_bound,
                            const Int& den_bound) {
  return TruncatedCone{cone_enumerate(pair, num_bound, den_bound), monoid, num_bound, den_bound,
                       [pair](const PositiveRational& q) { return cone_contains(pair, q); }};
}

TruncatedCone truncate_chain(const ChainPoint& point, const Int& num_bound, const Int& den_bound) {
  if (num_bound < 1 || den_bound < 1) throw Error(ErrorKind::InvalidArgument, "bounds must be positive");
  Int last = 1;
  for (const Int& c : point.chain) {
    if (c < 1 || !point.monoid.contains(c)) {
      throw Error(ErrorKind::InvalidArgument, "chain entry " + to_string(c) + " is not in the monoid");
    }
    if (mpz_divisible_p(c.get_mpz_t(), last.get_mpz_t()) == 0) {
      throw Error(ErrorKind::InvalidArgument, "chain entries must divide one another successively");
    }
    last = c;
  }
  Sieve monoid = point.monoid;
  auto contains = [monoid, last](const PositiveRational& q) {
    PositiveRational scaled = q * PositiveRational(last);
    return scaled.is_integer() && monoid.contains(scaled.num());
  };
  std::vector<PositiveRational> elements;
  for (Int v = 1; v <= den_bound; ++v) {
    if (mpz_divisible_p(last.get_mpz_t(), v.get_mpz_t()) == 0) continue;
    for (Int u = 1; u <= num_bound; ++u) {
      if (gcd(u, v) != 1) continue;
      PositiveRational q(u, v);
      if (contains(q)) elements.push_back(q);
    }
  }
  std::sort(elements.begin(), elements.end());
  return TruncatedCone{std::move(elements), point.monoid, num_bound, den_bound, contains};
}

PointConditions check_point_conditions(const TruncatedCone& cone, const Int& search_bound) {
  if (search_bound < 1) throw Error(ErrorKind::InvalidArgument, "search bound must be positive");
  MonoidTable table(cone.monoid, search_bound);

  // Free action: c a = c2 a forces c = c2 inside Q+; checked on a sample.
  bool free = true;
  auto sample_elems = std::min<std::size_t>(cone.elements.size(), 16);
  auto small = MonoidTable(cone.monoid, std::min<Int>(search_bound, Int(64))).elements();
  for (std::size_t i = 0; i < sample_elems; ++i) {
    const auto& a = cone.elements[i];
    for (const Int& c : small) {
      for (const Int& c2 : small) {
        if ((PositiveRational(c) * a == PositiveRational(c2) * a) != (c == c2)) free = false;
      }
    }
  }

  RankOneReport report;
  const auto& el = cone.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i; j < el.size(); ++j) {
      const auto& a = el[i];
      const auto& a2 = el[j];
      // a2/a = P/Q; c2 = c P/Q is integral iff c = Q t.
      PositiveRational ratio = a2 / a;
      const Int& p = ratio.num();
      const Int& q = ratio.den();
      std::optional<RankOneWitness> found;
      for (Int t = 1; q * t <= search_bound; ++t) {
        Int c = q * t;
        Int c2 = p * t;
        if (!table.contains(c) || !table.contains(c2)) continue;
        PositiveRational b = a / PositiveRational(c);
        if (!cone.contains(b)) continue;
        found = RankOneWitness{a, a2, b, c, c2};
        break;
      }
      if (found) {
        report.witnesses.push_back(std::move(*found));
      } else {
        report.unresolved.emplace_back(a, a2);
      }
    }
  }
  if (!report.unresolved.empty()) {
    report.status = RankOneReport::Status::Unresolved;
    report.witnesses.clear();
  }
  return {free, std::move(report)};
}

ChainPoint chain_from_points(const Sieve& monoid, const std::vector<PositiveRational>& seeds,
                             const Int& search_bound) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidArgument, "chain construction needs at least one seed");
  MonoidTable table(monoid, search_bound);
  auto in_monoid_or_one = [&](const PositiveRational& q) {
    return q.is_integer() && (q.num() == 1 || table.contains(to_int(q)));
  };
  std::vector<PositiveRational> scaled;
  for (const auto& s : seeds) scaled.push_back(s / seeds.front());

  ChainPoint out{{}, monoid};
  Int top = 1;  // base = 1/top
  for (;;) {
    PositiveRational base(1, top);
    auto uncovered = std::find_if(scaled.begin(), scaled.end(),
                                  [&](const PositiveRational& l) { return !in_monoid_or_one(l / base); });
    if (uncovered == scaled.end()) break;
    std::optional<Int> step;
    for (Int d = 2; d <= search_bound; ++d) {
      if (!table.contains(d)) continue;
      if (in_monoid_or_one(*uncovered * PositiveRational(d) / base)) {
        step = d;
        break;
      }
    }
    if (!step) {
      throw Error(ErrorKind::ConstructionStuck,
                  "no common refinement for seed " + to_string(uncovered->num()) + "/" +
                      to_string(uncovered->den()) + " within the search bound");
    }
    top *= *step;
    out.chain.push_back(top);
  }
  return out;
}

MemberVerdict verify_member_decision(const Supernatural& s, const Sieve& sieve, const Int& div_bound,
                                     const Int& factor_bound) {
  if (!sieve.is_proper()) throw Error(ErrorKind::InvalidArgument, "verification needs a proper sieve");
  if (div_bound < 1 || factor_bound < 1) throw Error(ErrorKind::InvalidArgument, "bounds must be positive");
  if (div_bound > kMaxTable) throw Error(ErrorKind::InvalidArgument, "divisor bound too large");
  auto factors = MonoidTable(sieve, factor_bound).elements();
  for (Int n = 1; n <= div_bound; ++n) {
    if (!divides(n, s)) continue;
    bool extended = std::any_of(factors.begin(), factors.end(),
                                [&](const Int& c) { return divides(Int(c * n), s); });
    if (!extended) return {false, n};
  }
  return {true, std::nullopt};
}

bool additively_closed(const TruncatedCone& cone) {
  const auto& el = cone.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i; j < el.size(); ++j) {
      PositiveRational sum = el[i] + el[j];
      if (cone.within_bounds(sum) && !has_element(cone, sum)) return false;
    }
  }
  return true;
}

}  // namespace snat
