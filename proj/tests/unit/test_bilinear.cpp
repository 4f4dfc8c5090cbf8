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

#include "cfft/bilinear.hpp"
#include "cfft/error.hpp"

using namespace cfft;

namespace {

std::vector<FieldElement> random_vector(size_t n, const GaloisField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> d(0, f.n());
  std::vector<FieldElement> v(n);
  for (auto& x : v) x = FieldElement(d(rng));
  return v;
}

CosetStructure example_cosets_31() { return with_rotations(compute_cosets(31), {0, 1, 1, 1, 0, 0, 0}); }

}  // namespace

TEST(Kernel, TrivialLengthOne) {
  auto k = builtin_kernel(1, false);
  EXPECT_EQ(k.mults, 1u);
  EXPECT_EQ(k.data_pre.to_strings(), std::vector<std::string>{"1"});
  EXPECT_EQ(k.const_pre.to_strings(), std::vector<std::string>{"1"});
  EXPECT_EQ(k.post.to_strings(), std::vector<std::string>{"1"});
  EXPECT_TRUE(verify_kernel(k, *default_field(5), 100));
}

TEST(Kernel, MultiplicationCounts) {
  const std::pair<uint32_t, uint32_t> expected[] = {{1, 1}, {2, 3}, {3, 4}, {4, 9}, {5, 10}, {8, 27}};
  auto f = default_field(8);
  for (auto [L, R] : expected) {
    auto k = builtin_kernel(L, false);
    EXPECT_EQ(k.mults, R) << L;
    EXPECT_TRUE(verify_kernel(k, *f, 1000)) << L;
  }
}

TEST(Kernel, LengthFiveDataSideIsPrintedMatrixTransposed) {
  auto k = builtin_kernel(5, false);
  const std::vector<std::string> printed = {
      "1101101001", "1011100011", "1111111110", "1111000101", "1110110001",
  };
  EXPECT_EQ(k.data_pre.transpose().to_strings(), printed);
  EXPECT_TRUE(verify_kernel(k, *make_field(5, 0x25), 1000));
}

TEST(Kernel, ExtendedLengthsNeedFlag) {
  EXPECT_THROW(builtin_kernel(9, false), Error);
  EXPECT_THROW(builtin_kernel(7, true), Error);
  auto k9 = builtin_kernel(9, true);
  auto k10 = builtin_kernel(10, true);
  auto f = default_field(10);
  EXPECT_TRUE(verify_kernel(k9, *f, 200));
  EXPECT_TRUE(verify_kernel(k10, *f, 200));
}

TEST(Kernel, CorruptedKernelIsRejected) {
  auto k = builtin_kernel(5, false);
  k.post.flip(2, 3);
  EXPECT_FALSE(verify_kernel(k, *make_field(5, 0x25), 100));
  auto k2 = builtin_kernel(2, false);
  k2.data_pre.flip(0, 1);
  EXPECT_FALSE(verify_kernel(k2, *default_field(8), 10));
}

TEST(NaiveDft, Basics) {
  auto f = make_field(5, 0x25);
  std::vector<FieldElement> zero(31);
  EXPECT_EQ(naive_dft(zero, *f), zero);
  std::vector<FieldElement> e1(31);
  e1[1] = f->one();
  auto F = naive_dft(e1, *f);
  for (uint32_t j = 0; j < 31; ++j) EXPECT_EQ(F[j], f->exp(j));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto v = random_vector(31, *f, rng);
    EXPECT_EQ(naive_dft(naive_dft(v, *f), *f, true), v);
  }
  EXPECT_THROW(naive_dft(std::vector<FieldElement>(5), *f), Error);
}

TEST(Plan, ExampleConstantsGf32) {
  auto f = make_field(5, 0x25);
  auto plan = build_full_cfft(f, example_cosets_31(), Variant::SCFFT);
  const int expected[] = {0, 1, 25, 7, 2, 16, 4, 28, 14, 27};
  for (uint32_t coset = 1; coset <= 3; ++coset) {
    std::vector<int> got;
    for (size_t r = 0; r < plan.slots(); ++r)
      if (plan.slot_coset[r] == coset) got.push_back(static_cast<int>(f->log(plan.c[r])));
    EXPECT_EQ(got, std::vector<int>(std::begin(expected), std::end(expected))) << coset;
  }
  // Post block of the second coset is the printed 5 x 10 matrix.
  std::vector<size_t> rows = {1, 2, 3, 4, 5}, cols;
  for (size_t r = 0; r < plan.slots(); ++r)
    if (plan.slot_coset[r] == 1) cols.push_back(r);
  EXPECT_EQ(plan.post.select_rows(rows).select_cols(cols).to_strings(),
            (std::vector<std::string>{"1101101001", "1011100011", "1111111110", "1111000101", "1110110001"}));
}

TEST(Plan, UnitImpulseGivesAllOnes) {
  for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
    auto f = make_field(5, 0x25);
    auto plan = build_full_cfft(f, compute_cosets(31), v);
    std::vector<FieldElement> x(31);
    x[0] = f->one();
    auto ev = evaluate_plan(plan, x);
    for (auto y : ev.values) EXPECT_EQ(y, f->one());
  }
}

TEST(Plan, ExhaustiveGf8) {
  auto f = make_field(3, 0xb);
  for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
    auto plan = build_full_cfft(f, compute_cosets(7), v);
    std::vector<FieldElement> x(7);
    for (uint64_t code = 0; code < (1ull << 21); ++code) {
      for (int i = 0; i < 7; ++i) x[i] = FieldElement((code >> (3 * i)) & 7u);
      ASSERT_EQ(evaluate_plan(plan, x).values, naive_dft(x, *f));
    }
  }
}

TEST(Plan, MatchesNaiveDftRandom) {
  std::mt19937_64 rng(11);
  for (int m : {5, 8}) {
    auto f = default_field(m);
    auto cs = compute_cosets(f->n());
    for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
      for (auto rot : {std::vector<uint32_t>(cs.cosets.size(), 0), std::vector<uint32_t>()}) {
        CosetStructure c = cs;
        if (rot.empty()) {
          for (auto& co : c.cosets) co.rotation = static_cast<uint32_t>(rng() % co.size());
        }
        auto plan = build_full_cfft(f, c, v);
        const int trials = m == 5 ? 1000 : 100;
        for (int t = 0; t < trials; ++t) {
          auto x = random_vector(f->n(), *f, rng);
          ASSERT_EQ(evaluate_plan(plan, x).values, naive_dft(x, *f)) << m << to_string(v);
        }
      }
    }
  }
}

TEST(Plan, Linearity) {
  auto f = make_field(5, 0x25);
  auto plan = build_full_cfft(f, example_cosets_31(), Variant::DCFFT);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto a = random_vector(31, *f, rng);
    auto b = random_vector(31, *f, rng);
    FieldElement s = FieldElement(static_cast<uint32_t>(rng() % 32));
    std::vector<FieldElement> mix(31);
    for (int i = 0; i < 31; ++i) mix[i] = f->mul(s, a[i]) + b[i];
    auto lhs = evaluate_plan(plan, mix).values;
    auto ea = evaluate_plan(plan, a).values, eb = evaluate_plan(plan, b).values;
    for (int i = 0; i < 31; ++i) ASSERT_EQ(lhs[i], f->mul(s, ea[i]) + eb[i]);
  }
}

TEST(Plan, VariantsRealizeTheSameSymmetricMatrix) {
  for (int m : {3, 5}) {
    auto f = default_field(m);
    auto cs = compute_cosets(f->n());
    auto d = materialize_plan(build_full_cfft(f, cs, Variant::DCFFT));
    auto s = materialize_plan(build_full_cfft(f, cs, Variant::SCFFT));
    for (uint32_t i = 0; i < f->n(); ++i)
      for (uint32_t j = 0; j < f->n(); ++j) {
        ASSERT_EQ(d[i][j], f->exp(static_cast<int64_t>(i) * j));
        ASSERT_EQ(d[i][j], s[j][i]);
      }
  }
}

TEST(Plan, MultCountSumsPerCoset) {
  auto f = default_field(8);
  auto cs = compute_cosets(255);
  auto plan = build_full_cfft(f, cs, Variant::SCFFT);
  uint64_t sum = 0;
  for (size_t i = 0; i < cs.cosets.size(); ++i) sum += plan_mult_count(build_full_cfft(f, cs, Variant::SCFFT, i));
  EXPECT_EQ(plan_mult_count(plan), sum);
  std::vector<FieldElement> zero(255);
  auto ev = evaluate_plan(plan, zero);
  EXPECT_EQ(ev.tally.mult, 0u);
}

TEST(Plan, Gf256AgainstNaive) {
  auto f = default_field(8);
  auto plan = build_full_cfft(f, compute_cosets(255), Variant::SCFFT);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    auto x = random_vector(255, *f, rng);
    ASSERT_EQ(evaluate_plan(plan, x).values, naive_dft(x, *f));
  }
}
