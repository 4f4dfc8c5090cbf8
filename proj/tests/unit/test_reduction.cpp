// Copyright 2026 The cfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "cfft/error.hpp"
#include "cfft/reduction.hpp"

using namespace cfft;

namespace {

using V = std::vector<uint32_t>;

std::vector<FieldElement> random_vector(size_t n, const GaloisField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> d(0, f.n());
  std::vector<FieldElement> v(n);
  for (auto& x : v) x = FieldElement(d(rng));
  return v;
}

// 1-based kernel product indices of a coset that were struck.
V struck_columns(const ReducedPlan& rp, const CfftPlan& full, uint32_t coset) {
  V out;
  for (uint32_t s : rp.removed_slots)
    if (full.slot_coset[s] == coset) out.push_back(full.slot_kernel[s] + 1);
  return out;
}

CosetStructure example_cosets() { return with_rotations(compute_cosets(31), {0, 1, 1, 1, 0, 0, 0}); }

}  // namespace

TEST(Reduction, SyndromeExampleStrikeOut) {
  auto f = make_field(5, 0x25);
  auto full = build_full_cfft(f, example_cosets(), Variant::SCFFT);
  auto rp = reduce_partial(full, SupportSpec::spectral(SupportSpec::range(0, 5)));
  EXPECT_EQ(struck_columns(rp, full, 1), V{8});
  EXPECT_EQ(struck_columns(rp, full, 2), (V{4, 7, 8, 9}));
  EXPECT_EQ(struck_columns(rp, full, 3), (V{4, 7, 8, 9}));
  EXPECT_EQ(mult_count(rp), 18u);
  EXPECT_EQ(rp.base.c.size(), rp.kept_slots.size());
  // Per coset: 0, 8, 5, 5.
  std::vector<uint64_t> per(7, 0);
  for (size_t r = 0; r < rp.base.slots(); ++r) per[rp.base.slot_coset[r]] += !rp.base.c[r].is_one();
  EXPECT_EQ(per, (std::vector<uint64_t>{0, 8, 5, 5, 0, 0, 0}));
}

TEST(Reduction, SearchReproducesExampleRotations) {
  auto f = make_field(5, 0x25);
  auto sup = SupportSpec::spectral(SupportSpec::range(0, 5));
  auto rs = search_rotation(f, compute_cosets(31), Variant::SCFFT, sup);
  EXPECT_EQ(rs.cosets.cosets[1].rotated(), (V{2, 4, 8, 16, 1}));
  EXPECT_EQ(rs.cosets.cosets[2].rotated(), (V{6, 12, 24, 17, 3}));
  EXPECT_EQ(rs.cosets.cosets[3].rotated(), (V{10, 20, 9, 18, 5}));
  EXPECT_EQ(rs.cosets.cosets[0].rotation, 0u);
  // Keeping {2,4,1} strikes one product for rotations 1 and 2 only.
  EXPECT_EQ(rs.struck[1], (V{0, 1, 1, 0, 0}));
  EXPECT_EQ(rs.struck[2], (V{4, 4, 4, 1, 4}));
  auto rp = build_reduced_plan(f, Variant::SCFFT, sup);
  EXPECT_EQ(mult_count(rp), 18u);
}

TEST(Reduction, SearchPicksAMaximum) {
  auto f = make_field(5, 0x25);
  for (Variant v : {Variant::SCFFT, Variant::DCFFT}) {
    for (auto sup : {SupportSpec::spectral(SupportSpec::range(0, 5)), SupportSpec::temporal(SupportSpec::range(0, 6)),
                     SupportSpec::spectral({0, 3, 7, 19})}) {
      auto rs = search_rotation(f, compute_cosets(31), v, sup);
      for (size_t i = 0; i < rs.cosets.cosets.size(); ++i) {
        const Coset& c = rs.cosets.cosets[i];
        uint32_t best = 0;
        for (uint32_t r = 0; r < c.size(); ++r) {
          // Exhaustive re-check on the whole plan.
          CosetStructure cs = rs.cosets;
          cs.cosets[i].rotation = r;
          auto full = build_full_cfft(f, cs, v);
          auto rp = reduce(full, sup);
          uint32_t struck = 0;
          for (uint32_t s : rp.removed_slots) struck += full.slot_coset[s] == i;
          EXPECT_EQ(struck, rs.struck[i][r]);
          best = std::max(best, struck);
        }
        EXPECT_EQ(rs.struck[i][c.rotation], best);
      }
    }
  }
}

TEST(Reduction, ChienExampleDualStrikeOut) {
  auto f = make_field(5, 0x25);
  auto full = build_full_cfft(f, example_cosets(), Variant::DCFFT);
  auto rp = reduce_dual_partial(full, SupportSpec::temporal(SupportSpec::range(0, 6)));
  // Coset {6,12,24,17,3}: only positions 0 and 4 carry data.
  V kept_positions;
  for (uint32_t q : rp.kept_cols)
    if (full.in_index[q] == 6 || full.in_index[q] == 3) kept_positions.push_back(q);
  EXPECT_EQ(kept_positions.size(), 2u);
  EXPECT_EQ(struck_columns(rp, full, 2), (V{8, 9}));
}

TEST(Reduction, FullSupportIsIdentity) {
  auto f = make_field(5, 0x25);
  auto full = build_full_cfft(f, example_cosets(), Variant::SCFFT);
  auto all = SupportSpec::range(0, 30);
  for (auto sup : {SupportSpec::spectral(all), SupportSpec::temporal(all)}) {
    auto rp = reduce(full, sup);
    EXPECT_TRUE(rp.removed_slots.empty());
    EXPECT_EQ(rp.base.pre, full.pre);
    EXPECT_EQ(rp.base.post, full.post);
    EXPECT_EQ(mult_count(rp), plan_mult_count(full));
  }
}

TEST(Reduction, KeepZeroOnly) {
  auto f = make_field(5, 0x25);
  auto rp = build_reduced_plan(f, Variant::SCFFT, SupportSpec::spectral({0}));
  EXPECT_EQ(mult_count(rp), 0u);
  EXPECT_EQ(rp.base.slots(), 1u);
  EXPECT_THROW(reduce_partial(build_full_cfft(f, compute_cosets(31), Variant::SCFFT), SupportSpec::spectral({})), Error);
}

TEST(Reduction, PartialAndDualMatchNaive) {
  std::mt19937_64 rng(23);
  for (int m : {3, 5, 8}) {
    auto f = default_field(m);
    const uint32_t n = f->n();
    std::vector<SupportSpec> sups = {
        SupportSpec::spectral(SupportSpec::range(0, n / 8 + 1)),
        SupportSpec::spectral({1, n - 1}),
        SupportSpec::temporal(SupportSpec::range(0, n / 8 + 1)),
        SupportSpec::temporal(SupportSpec::range(1, n / 8 + 1, 2)),
    };
    for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
      auto full = build_full_cfft(f, compute_cosets(n), v);
      for (const auto& sup : sups) {
        auto rp = build_reduced_plan(f, v, sup);
        EXPECT_LE(mult_count(rp), plan_mult_count(full));
        EXPECT_LT(additive_bound(rp.base), additive_bound(full));
        const int trials = m == 8 ? 100 : 1000;
        for (int t = 0; t < trials; ++t) {
          auto x = random_vector(n, *f, rng);
          if (sup.kind == SupportKind::Temporal)
            for (uint32_t i = 0; i < n; ++i)
              if (!sup.contains(i)) x[i] = FieldElement();
          auto want = naive_dft(x, *f);
          auto got = evaluate_plan(rp.base, x).values;
          for (uint32_t j = 0; j < n; ++j)
            if (sup.kind == SupportKind::Temporal || sup.contains(j)) ASSERT_EQ(got[j], want[j]);
        }
      }
    }
  }
}

TEST(Reduction, SyndromeTradeoff255) {
  auto f = default_field(8);
  auto sup = SupportSpec::spectral(SupportSpec::range(0, 31));
  auto s = build_reduced_plan(f, Variant::SCFFT, sup);
  auto d = build_reduced_plan(f, Variant::DCFFT, sup);
  EXPECT_LE(mult_count(s), 200u);
  EXPECT_GE(mult_count(d), mult_count(s));
  EXPECT_LE(additive_bound(d.base), additive_bound(s.base));
  std::printf("syndromes 255: SCFFT mult %llu bound %llu | DCFFT mult %llu bound %llu\n",
              (unsigned long long)mult_count(s), (unsigned long long)additive_bound(s.base),
              (unsigned long long)mult_count(d), (unsigned long long)additive_bound(d.base));
}
