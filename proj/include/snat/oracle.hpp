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

#ifndef SNAT_ORACLE_HPP
#define SNAT_ORACLE_HPP

// Bounded brute-force checks. They produce evidence for the decision
// procedures in topology.hpp and never claim a negative they cannot exhibit.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "snat/cones.hpp"
#include "snat/sieve.hpp"

namespace snat {

/// A finite window onto a left C-set L inside Q+: the members with
/// numerator <= num_bound and denominator <= den_bound, together with the
/// membership predicate of the whole of L. C acts by multiplication.
struct TruncatedCone {
  std::vector<PositiveRational> elements;  // ascending
  Sieve monoid;
  Int num_bound;
  Int den_bound;
  std::function<bool(const PositiveRational&)> contains;

  bool within_bounds(const PositiveRational& q) const {
    return q.num() <= num_bound && q.den() <= den_bound;
  }
};

/// Truncation of the cone Q+(a, s) acted on by `monoid`.
TruncatedCone truncate_cone(const BZPair& pair, const Sieve& monoid, const Int& num_bound,
                            const Int& den_bound);

/// L(c1, ..., ck) = C u C/c1 u ... u C/ck for a divisor chain of elements
/// of C.
struct ChainPoint {
  std::vector<Int> chain;
  Sieve monoid;
};

/// Validates the chain (divisibility, membership in the monoid) and
/// truncates L(c1, ..., ck). Since C is closed under multiples the union is
/// C/ck, so q is a member iff q*ck is an element of C.
TruncatedCone truncate_chain(const ChainPoint& point, const Int& num_bound, const Int& den_bound);

struct RankOneWitness {
  PositiveRational a, a2;  // the pair
  PositiveRational b;      // common refinement, a = c b and a2 = c2 b
  Int c, c2;
};

struct RankOneReport {
  enum class Status { Verified, Unresolved };
  Status status = Status::Verified;
  /// One per unordered pair when Verified.
  std::vector<RankOneWitness> witnesses;
  std::vector<std::pair<PositiveRational, PositiveRational>> unresolved;
};

struct PointConditions {
  bool free;
  RankOneReport rank_one;
};

/// Flatness conditions on the window. Rank one: every pair (a, a2) has
/// c, c2 in C (c <= search_bound) with b = a/c a member of L and a2 = c2 b.
/// The smallest c is reported. Free action is checked directly on a sample.
PointConditions check_point_conditions(const TruncatedCone& cone, const Int& search_bound);

/// Builds a divisor chain whose point covers the seeds. The seeds are first
/// rescaled so that the first becomes 1; while some seed l is not in
/// (C u {1}) * base, the smallest d in C (d <= search_bound) with
/// l * d / base in C u {1} extends the chain by base -> base/d. Throws
/// ConstructionStuck when no such d exists.
ChainPoint chain_from_points(const Sieve& monoid, const std::vector<PositiveRational>& seeds,
                             const Int& search_bound);

struct MemberVerdict {
  bool consistent;
  /// When refuted: the smallest divisor n of s (n <= div_bound) such that no
  /// c in C with c <= factor_bound has c n | s.
  std::optional<Int> witness;
};

/// The recursive condition behind membership of [Q+(s)] in X(S): for every
/// n <= div_bound dividing s there is c in S, c <= factor_bound, with c n | s.
/// S must be proper.
MemberVerdict verify_member_decision(const Supernatural& s, const Sieve& sieve, const Int& div_bound,
                                     const Int& factor_bound);

/// x + y is in the window whenever x, y are and the sum respects the bounds.
bool additively_closed(const TruncatedCone& cone);

}  // namespace snat

#endif  // SNAT_ORACLE_HPP
