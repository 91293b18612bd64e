// Copyright 2026 The superweave Authors. All Rights Reserved.
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

#include "superweave/weaving.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "superweave/constructions.hpp"
#include "superweave/io.hpp"

namespace superweave {
namespace {

CVector e(std::size_t d, std::size_t k) { return CVector::basis(d, k); }

FrameFamily random_family(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<CVector> v;
  for (std::size_t k = 0; k < n; ++k) {
    CVector x(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double re = g(rng);
      x[i] = Complex(re, g(rng));
    }
    v.push_back(x);
  }
  return FrameFamily(d, v);
}

WeavingOptions exhaustive(WeavingMode mode = WeavingMode::kFrame, bool collapse = true) {
  WeavingOptions o;
  o.mode = mode;
  o.limit = std::uint64_t{1} << 24;
  o.collapse_identical = collapse;
  return o;
}

struct Brute {
  double lower = 1e300;
  double upper = 0.0;
};

// Independent scan: literal weave() of every partition, bounds from frame.hpp.
Brute brute_force(const std::vector<FrameFamily>& fams, WeavingMode mode) {
  Brute b;
  for (const PartitionAssignment& p : enumerate_partitions(fams.front().size(), fams.size())) {
    const FrameFamily w = weave(fams, p);
    const BoundsReport r = mode == WeavingMode::kFrame ? frame_bounds(w) : riesz_sequence_bounds(w);
    b.lower = std::min(b.lower, r.lower);
    b.upper = std::max(b.upper, r.upper);
  }
  return b;
}

TEST(WeaveTest, Examples) {
  const FrameFamily f(2, {e(2, 0), e(2, 1)});
  const FrameFamily g(2, {e(2, 1), e(2, 0)});
  const std::vector<FrameFamily> fg = {f, g};
  EXPECT_EQ(weave(fg, PartitionAssignment::constant(2, 2, 0)), f);
  EXPECT_EQ(weave(fg, PartitionAssignment::constant(2, 2, 1)), g);
  // sigma = {1}: phi_1 from F, psi_2 from G.
  EXPECT_EQ(weave(fg, PartitionAssignment({0, 1}, 2)), FrameFamily(2, {e(2, 0), e(2, 0)}));
  const std::vector<FrameFamily> ff = {f, f};
  for (const PartitionAssignment& p : enumerate_partitions(2, 2)) EXPECT_EQ(weave(ff, p), f);
}

TEST(WeaveTest, ShapeErrors) {
  const std::vector<FrameFamily> bad = {FrameFamily(2, {e(2, 0)}),
                                        FrameFamily(2, {e(2, 0), e(2, 1)})};
  EXPECT_THROW(weave(bad, PartitionAssignment({0}, 2)), Error);
  const std::vector<FrameFamily> dims = {FrameFamily(2, {e(2, 0)}), FrameFamily(3, {e(3, 0)})};
  EXPECT_THROW(weaving_check(dims), Error);
  const std::vector<FrameFamily> ok = {FrameFamily(2, {e(2, 0)}), FrameFamily(2, {e(2, 1)})};
  EXPECT_THROW(weave(ok, PartitionAssignment({0, 0}, 2)), Error);
  EXPECT_THROW(weave(ok, PartitionAssignment({0}, 3)), Error);
}

TEST(WeavingCheckTest, LimitAndSamplesBothZeroThrows) {
  const std::vector<FrameFamily> f = {FrameFamily::canonical_basis(2),
                                      FrameFamily::canonical_basis(2)};
  WeavingOptions o;
  o.limit = 0;
  o.samples = 0;
  EXPECT_THROW(weaving_check(f, o), Error);
}

TEST(WeavingCheckTest, TwoCopiesOfAnOrthonormalBasis) {
  const std::vector<FrameFamily> f = {FrameFamily::canonical_basis(3),
                                      FrameFamily::canonical_basis(3)};
  for (bool collapse : {true, false}) {
    const WeavingReport r = weaving_check(f, exhaustive(WeavingMode::kFrame, collapse));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.woven());
    EXPECT_DOUBLE_EQ(r.universal_lower, 1.0);
    EXPECT_DOUBLE_EQ(r.universal_upper, 1.0);
    EXPECT_EQ(r.partitions_checked, collapse ? 1u : 8u);
    EXPECT_EQ(r.partitions_total, 8u);
  }
}

TEST(WeavingCheckTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 3;
    const std::size_t n = d + t % 4;
    const std::size_t m = 2 + t % 2;
    std::vector<FrameFamily> fams;
    for (std::size_t i = 0; i < m; ++i) fams.push_back(random_family(rng, d, n));
    const Brute b = brute_force(fams, WeavingMode::kFrame);
    const WeavingReport r = weaving_check(fams, exhaustive());
    EXPECT_TRUE(r.exhaustive);
    EXPECT_NEAR(r.universal_lower, b.lower, 1e-10 * (1.0 + b.upper));
    EXPECT_NEAR(r.universal_upper, b.upper, 1e-10 * (1.0 + b.upper));
    const BoundsReport at_worst = frame_bounds(weave(fams, r.worst_lower_partition));
    EXPECT_NEAR(at_worst.lower, r.universal_lower, 1e-10 * (1.0 + b.upper));
  }
}

TEST(WeavingCheckTest, CollapseEqualsLiteralScan) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; ++t) {
    const FrameFamily base = random_family(rng, 2, 7);
    std::vector<CVector> v = base.vectors();
    for (std::size_t k = 0; k < v.size(); k += 2) v[k] = random_family(rng, 2, 1)[0];
    const std::vector<FrameFamily> fams = {base, FrameFamily(2, v)};
    const WeavingReport a = weaving_check(fams, exhaustive(WeavingMode::kFrame, true));
    const WeavingReport b = weaving_check(fams, exhaustive(WeavingMode::kFrame, false));
    EXPECT_EQ(a.free_indices, 4u);
    EXPECT_EQ(a.partitions_checked, 16u);
    EXPECT_EQ(b.partitions_checked, 128u);
    EXPECT_NEAR(a.universal_lower, b.universal_lower, 1e-12 * (1.0 + b.universal_upper));
    EXPECT_NEAR(a.universal_upper, b.universal_upper, 1e-12 * (1.0 + b.universal_upper));
  }
}

TEST(WeavingCheckTest, RieszModeAgreesWithFrameModeForSquareFamilies) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 15; ++t) {
    const std::size_t d = 2 + t % 3;
    const std::vector<FrameFamily> fams = {random_family(rng, d, d), random_family(rng, d, d)};
    const WeavingReport f = weaving_check(fams, exhaustive(WeavingMode::kFrame));
    const WeavingReport r = weaving_check(fams, exhaustive(WeavingMode::kRiesz));
    ASSERT_GT(f.universal_lower, 0.0);
    EXPECT_NEAR(f.universal_lower, r.universal_lower, 1e-8 * (1.0 + f.universal_upper));
    EXPECT_NEAR(f.universal_upper, r.universal_upper, 1e-8 * (1.0 + f.universal_upper));
    const Brute b = brute_force(fams, WeavingMode::kRiesz);
    EXPECT_NEAR(r.universal_lower, b.lower, 1e-10 * (1.0 + b.upper));
  }
}

TEST(WeavingCheckTest, Example33Woven) {
  const SuperFramePair p = gen_example_3_3(2);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  const WeavingReport r = weaving_check(sums, exhaustive(WeavingMode::kFrame, false));
  EXPECT_EQ(r.partitions_checked, 256u);
  EXPECT_TRUE(r.woven());
  EXPECT_NEAR(r.universal_lower, 1.0, 1e-9);
  EXPECT_NEAR(r.universal_upper, 2.0, 1e-9);
  EXPECT_FALSE(r.witness_vector.has_value());
}

TEST(WeavingCheckTest, Example34NotWovenWithWitness) {
  const SuperFramePair p = gen_example_3_4(2);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  const WeavingReport r = weaving_check(sums, exhaustive(WeavingMode::kFrame, false));
  EXPECT_FALSE(r.woven());
  EXPECT_LE(r.universal_lower, 1e-9);
  // 1-based {5, 6} go to G.
  std::vector<std::uint32_t> blocks(12, 0);
  blocks[4] = blocks[5] = 1;
  EXPECT_EQ(r.worst_lower_partition, PartitionAssignment(blocks, 2));
  ASSERT_TRUE(r.witness_vector.has_value());
  const CVector& v = *r.witness_vector;
  const CVector kernel{-1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0};
  EXPECT_GE(std::abs(inner(v, kernel)), 1.0 - 1e-6);
  const CMatrix s = frame_operator(weave(sums, r.worst_lower_partition));
  EXPECT_LE(std::abs(inner(s * v, v)), 1e-9);
}

TEST(WeavingCheckTest, Example34CollapsedAgrees) {
  const SuperFramePair p = gen_example_3_4(2);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  const WeavingReport a = weaving_check(sums, exhaustive(WeavingMode::kFrame, true));
  const WeavingReport b = weaving_check(sums, exhaustive(WeavingMode::kFrame, false));
  EXPECT_EQ(a.worst_lower_partition, b.worst_lower_partition);
  EXPECT_NEAR(a.universal_upper, b.universal_upper, 1e-12);
}

TEST(WeavingCheckTest, ThreadCountDoesNotChangeReport) {
  std::mt19937_64 rng(24);
  const std::vector<FrameFamily> fams = {random_family(rng, 3, 9), random_family(rng, 3, 9),
                                         random_family(rng, 3, 9)};
  WeavingOptions o = exhaustive();
  const Json one = to_json(weaving_check(fams, o));
  for (unsigned t : {2u, 3u, 8u, 64u}) {
    o.threads = t;
    EXPECT_EQ(dump(to_json(weaving_check(fams, o))), dump(one));
  }
  WeavingOptions s;
  s.limit = 10;
  s.samples = 300;
  s.seed = 5;
  const Json sampled = to_json(weaving_check(fams, s));
  s.threads = 7;
  EXPECT_EQ(dump(to_json(weaving_check(fams, s))), dump(sampled));
}

TEST(WeavingCheckTest, SampledModeIsSoundAndReproducible) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 10; ++t) {
    const std::vector<FrameFamily> fams = {random_family(rng, 2, 8), random_family(rng, 2, 8)};
    const WeavingReport full = weaving_check(fams, exhaustive());
    WeavingOptions s;
    s.limit = 16;
    s.samples = 20;
    s.seed = static_cast<std::uint64_t>(t);
    const WeavingReport a = weaving_check(fams, s);
    const WeavingReport b = weaving_check(fams, s);
    EXPECT_FALSE(a.exhaustive);
    EXPECT_GE(a.universal_lower, full.universal_lower - 1e-12);
    EXPECT_LE(a.universal_upper, full.universal_upper + 1e-12);
    EXPECT_EQ(dump(to_json(a)), dump(to_json(b)));
    EXPECT_GE(a.partitions_checked, 22u);
  }
}

TEST(WeavingCheckTest, SampledDescentFindsExample34Failure) {
  const SuperFramePair p = gen_example_3_4(2);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  WeavingOptions s;
  s.limit = 0;
  s.samples = 64;
  const WeavingReport r = weaving_check(sums, s);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_FALSE(r.woven());
}

TEST(WeavingCheckTest, AggregationIsMonotone) {
  std::mt19937_64 rng(26);
  const std::vector<FrameFamily> fams = {random_family(rng, 2, 5), random_family(rng, 2, 5)};
  const WeavingReport r = weaving_check(fams, exhaustive());
  for (const PartitionAssignment& p : enumerate_partitions(5, 2)) {
    const BoundsReport b = weaving_bounds(fams, p, WeavingMode::kFrame);
    EXPECT_LE(r.universal_lower, b.lower + 1e-12);
    EXPECT_GE(r.universal_upper, b.upper - 1e-12);
  }
}

TEST(SuperWeavingCheckTest, SingleSuperframe) {
  const SuperFrameFamily s = gen_example_3_3(2)[0];
  const std::vector<SuperFrameFamily> one = {s};
  const SuperWeavingReport r = super_weaving_check(one, exhaustive());
  const BoundsReport b = frame_bounds(direct_sum(s));
  EXPECT_DOUBLE_EQ(r.joint.universal_lower, b.lower);
  EXPECT_DOUBLE_EQ(r.joint.universal_upper, b.upper);
}

TEST(SuperWeavingCheckTest, Example34JointFailsComponentsWoven) {
  const SuperFramePair p = gen_example_3_4(2);
  const SuperWeavingReport r = super_weaving_check(p, exhaustive());
  EXPECT_FALSE(r.joint.woven());
  ASSERT_EQ(r.components.size(), 2u);
  for (const WeavingReport& c : r.components) {
    EXPECT_TRUE(c.woven());
    EXPECT_NEAR(c.universal_lower, 1.0, 1e-9);
    EXPECT_NEAR(c.universal_upper, 3.0, 1e-9);
  }
}

TEST(SuperWeavingCheckTest, Example33Woven) {
  const SuperWeavingReport r = super_weaving_check(gen_example_3_3(2), exhaustive());
  EXPECT_TRUE(r.joint.woven());
  EXPECT_NEAR(r.joint.universal_lower, 1.0, 1e-9);
  EXPECT_NEAR(r.joint.universal_upper, 2.0, 1e-9);
}

TEST(SuperWeavingCheckTest, MismatchedShapesThrow) {
  const std::vector<SuperFrameFamily> v = {gen_example_3_3(2)[0], gen_example_3_3(3)[0]};
  EXPECT_THROW(super_weaving_check(v), Error);
}

// Component weavings are sandwiched by the super weaving at each partition.
TEST(SuperWeavingCheckTest, ComponentBoundsSandwichedPerPartition) {
  std::mt19937_64 rng(27);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + t % 3;
    const std::size_t d1 = 1 + t % 3, d2 = 1 + (t + 1) % 3;
    const std::vector<SuperFrameFamily> s = {
        SuperFrameFamily({random_family(rng, d1, n), random_family(rng, d2, n)}),
        SuperFrameFamily({random_family(rng, d1, n), random_family(rng, d2, n)})};
    std::vector<FrameFamily> sums = {direct_sum(s[0]), direct_sum(s[1])};
    for (const PartitionAssignment& p : enumerate_partitions(n, 2)) {
      const BoundsReport joint = weaving_bounds(sums, p, WeavingMode::kFrame);
      if (!joint.is_frame) continue;
      for (std::size_t j = 0; j < 2; ++j) {
        const std::vector<FrameFamily> comp = {s[0].component(j), s[1].component(j)};
        const BoundsReport c = weaving_bounds(comp, p, WeavingMode::kFrame);
        EXPECT_GE(c.lower, joint.lower - 1e-12 * (1.0 + joint.upper));
        EXPECT_LE(c.upper, joint.upper + 1e-12 * (1.0 + joint.upper));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(SuperWeavingCheckTest, BesselWeavingBound) {
  std::mt19937_64 rng(28);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + t % 3;
    std::vector<SuperFrameFamily> s;
    for (int i = 0; i < 2; ++i)
      s.push_back(SuperFrameFamily({random_family(rng, 2, n), random_family(rng, 3, n)}));
    double max_b = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
      const std::vector<FrameFamily> comp = {s[0].component(j), s[1].component(j)};
      max_b = std::max(max_b, weaving_check(comp, exhaustive()).universal_upper);
    }
    const SuperWeavingReport r = super_weaving_check(s, exhaustive());
    EXPECT_LE(r.joint.universal_upper, 2.0 * max_b * (1.0 + 1e-12));
  }
}

}  // namespace
}  // namespace superweave
