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

#include <gtest/gtest.h>

#include "snat/oracle.hpp"
#include "snat/smonoid.hpp"
#include "snat/text.hpp"
#include "snat/topology.hpp"
#include "support.hpp"

namespace snat {
namespace {

using testing::Gen;

Supernatural S(const char* text) { return parse_supernatural(text); }
Sieve V(const char* text) { return parse_sieve(text); }
PositiveRational Q(long u, long v = 1) { return PositiveRational(Int(u), Int(v)); }

void expect_witnesses_valid(const TruncatedCone& cone, const RankOneReport& report) {
  for (const auto& w : report.witnesses) {
    EXPECT_EQ(PositiveRational(w.c) * w.b, w.a);
    EXPECT_EQ(PositiveRational(w.c2) * w.b, w.a2);
    EXPECT_TRUE(cone.monoid.contains(w.c));
    EXPECT_TRUE(cone.monoid.contains(w.c2));
    EXPECT_TRUE(cone.contains(w.b));
  }
}

TEST(RankOne, NaturalNumbers) {
  TruncatedCone cone = truncate_cone(BZPair(Int(1), S("one")), Sieve::full(), Int(10), Int(1));
  ASSERT_EQ(cone.elements.size(), 10u);
  PointConditions pc = check_point_conditions(cone, Int(100));
  EXPECT_TRUE(pc.free);
  EXPECT_EQ(pc.rank_one.status, RankOneReport::Status::Verified);
  EXPECT_EQ(pc.rank_one.witnesses.size(), 55u);
  expect_witnesses_valid(cone, pc.rank_one);
  // b = 1 serves every pair.
  for (const auto& w : pc.rank_one.witnesses) {
    EXPECT_TRUE(cone.contains(Q(1)) && w.a.is_integer() && w.a2.is_integer());
  }
}

TEST(RankOne, DyadicCone) {
  TruncatedCone cone = truncate_cone(BZPair(Int(1), S("2^inf")), V("sieve(2)"), Int(8), Int(8));
  PointConditions pc = check_point_conditions(cone, Int(64));
  EXPECT_EQ(pc.rank_one.status, RankOneReport::Status::Verified);
  expect_witnesses_valid(cone, pc.rank_one);
  auto it = std::find_if(pc.rank_one.witnesses.begin(), pc.rank_one.witnesses.end(),
                         [](const RankOneWitness& w) { return w.a == Q(1, 2) && w.a2 == Q(1); });
  ASSERT_NE(it, pc.rank_one.witnesses.end());
  EXPECT_EQ(it->b, Q(1, 4));
  EXPECT_EQ(it->c, 2);   // 1/2 = 2 * 1/4
  EXPECT_EQ(it->c2, 4);  // 1 = 4 * 1/4
}

TEST(RankOne, TriadicConeOverEvenNumbers) {
  TruncatedCone cone = truncate_cone(BZPair(Int(1), S("3^inf")), V("sieve(2)"), Int(4), Int(9));
  for (long bound : {64L, 1000L, 10000L}) {
    PointConditions pc = check_point_conditions(cone, Int(bound));
    EXPECT_EQ(pc.rank_one.status, RankOneReport::Status::Unresolved);
    auto& u = pc.rank_one.unresolved;
    EXPECT_NE(std::find(u.begin(), u.end(), std::make_pair(Q(1, 3), Q(1))), u.end());
  }
  EXPECT_FALSE(member(PointClass{S("3^inf")}, V("sieve(2)")));
}

TEST(RankOne, Deterministic) {
  TruncatedCone cone = truncate_cone(BZPair(Int(1), S("2^inf * 3^inf")), V("sieve(6)"), Int(6), Int(36));
  PointConditions a = check_point_conditions(cone, Int(500));
  PointConditions b = check_point_conditions(cone, Int(500));
  ASSERT_EQ(a.rank_one.witnesses.size(), b.rank_one.witnesses.size());
  for (std::size_t i = 0; i < a.rank_one.witnesses.size(); ++i) {
    EXPECT_EQ(a.rank_one.witnesses[i].b, b.rank_one.witnesses[i].b);
    EXPECT_EQ(a.rank_one.witnesses[i].c, b.rank_one.witnesses[i].c);
  }
}

TEST(Chain, Examples) {
  EXPECT_EQ(chain_from_points(Sieve::full(), {Q(1), Q(1, 2), Q(1, 6)}, Int(100)).chain,
            (std::vector<Int>{Int(2), Int(6)}));
  EXPECT_TRUE(chain_from_points(Sieve::full(), {Q(1)}, Int(100)).chain.empty());
  // Rescaled seeds {1, 2/3}: the smallest step is 3, since 2/3 = 2 * (1/3).
  EXPECT_EQ(chain_from_points(Sieve::full(), {Q(1, 4), Q(1, 6)}, Int(100)).chain, (std::vector<Int>{Int(3)}));
  try {
    chain_from_points(V("sieve(4)"), {Q(1), Q(3)}, Int(3));
    ADD_FAILURE() << "construction should be stuck";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstructionStuck);
  }
}

TEST(Chain, Postconditions) {
  Gen g(1);
  std::vector<Sieve> monoids = {Sieve::full(), V("sieve(2)"), V("sieve(2,3)"),
                                smonoid_to_sieve(SMonoid({Int(3), Int(5)}), Int(10000)).sieve};
  for (int i = 0; i < 60; ++i) {
    const Sieve& c = monoids[i % monoids.size()];
    std::vector<PositiveRational> seeds;
    int k = static_cast<int>(g.uniform(1, 4));
    for (int j = 0; j < k; ++j) seeds.push_back(Q(g.uniform(1, 6), g.uniform(1, 12)));
    ChainPoint point = chain_from_points(c, seeds, Int(2000));
    Int prev = 1;
    for (const Int& link : point.chain) {
      EXPECT_EQ(link % prev, 0);
      EXPECT_TRUE(c.contains(link));
      prev = link;
    }
    // Every rescaled seed lies in (C u {1}) / c_k.
    for (const auto& s : seeds) {
      PositiveRational scaled = s / seeds.front() * PositiveRational(prev);
      EXPECT_TRUE(scaled.is_integer() && (scaled.num() == 1 || c.contains(scaled.num())));
    }
  }
}

TEST(VerifyMember, Examples) {
  MemberVerdict a = verify_member_decision(S("sinf"), V("sieve(6)"), Int(1000), Int(1000));
  EXPECT_TRUE(a.consistent);
  MemberVerdict b = verify_member_decision(S("2^inf * 3^inf * 5^2"), V("sieve(10)"), Int(1000), Int(1000));
  EXPECT_FALSE(b.consistent);
  EXPECT_EQ(b.witness, Int(25));
  MemberVerdict c = verify_member_decision(S("one"), V("sieve(2)"), Int(10), Int(10));
  EXPECT_FALSE(c.consistent);
  EXPECT_EQ(c.witness, Int(1));
  EXPECT_THROW(verify_member_decision(S("one"), Sieve::full(), Int(10), Int(10)), Error);
}

TEST(VerifyMember, CoherentWithDecision) {
  Gen g(2);
  int positives = 0, negatives = 0;
  for (int i = 0; i < 150; ++i) {
    auto [s, v] = g.oracle_instance();
    bool m = member(PointClass{s}, v);
    MemberVerdict verdict = verify_member_decision(s, v, Int(2000), Int(2000));
    if (m) {
      ++positives;
      EXPECT_TRUE(verdict.consistent) << to_string(s) << " in " << to_string(v);
    } else {
      ++negatives;
      EXPECT_FALSE(verdict.consistent) << to_string(s) << " in " << to_string(v);
    }
  }
  EXPECT_GT(positives, 20);
  EXPECT_GT(negatives, 20);
}

TEST(AdditiveClosure, Examples) {
  EXPECT_TRUE(additively_closed(truncate_cone(BZPair(Int(1), S("2^inf")), V("sieve(2)"), Int(16), Int(16))));
  TruncatedCone gap{{Q(1, 2), Q(1), Q(2), Q(3)}, Sieve::full(), Int(3), Int(2), nullptr};
  EXPECT_FALSE(additively_closed(gap));
  Sieve c = smonoid_to_sieve(SMonoid({Int(3), Int(5)}), Int(10000)).sieve;
  for (const std::vector<Int>& chain :
       {std::vector<Int>{}, {Int(3)}, {Int(3), Int(15)}, {Int(5), Int(10)}, {Int(8), Int(24), Int(120)}}) {
    TruncatedCone l = truncate_chain(ChainPoint{chain, c}, Int(60), Int(120));
    EXPECT_TRUE(additively_closed(l));
  }
  // A divisor chain must consist of monoid elements dividing one another.
  EXPECT_THROW(truncate_chain(ChainPoint{{Int(7)}, c}, Int(10), Int(10)), Error);
  EXPECT_THROW(truncate_chain(ChainPoint{{Int(5), Int(8)}, c}, Int(10), Int(10)), Error);
}

}  // namespace
}  // namespace snat
