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

#include <map>
#include <random>

#include "cfft/error.hpp"
#include "cfft/reduction.hpp"
#include "cfft/slp.hpp"

using namespace cfft;

namespace {

std::vector<FieldElement> random_vector(size_t n, const GaloisField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> d(0, f.n());
  std::vector<FieldElement> v(n);
  for (auto& x : v) x = FieldElement(d(rng));
  return v;
}

// M x computed directly.
std::vector<FieldElement> mat_vec(const BitMatrix& M, const std::vector<FieldElement>& x) {
  std::vector<FieldElement> y(M.rows());
  for (size_t r = 0; r < M.rows(); ++r)
    for (size_t c = 0; c < M.cols(); ++c)
      if (M.get(r, c)) y[r] += x[c];
  return y;
}

void expect_computes(const StraightLineProgram& p, const BitMatrix& M, const GaloisField& f, std::mt19937_64& rng,
                     int trials) {
  validate(p);
  for (size_t c = 0; c < M.cols(); ++c) {
    std::vector<FieldElement> e(M.cols());
    e[c] = f.one();
    ASSERT_EQ(slp_eval(p, e, f), mat_vec(M, e)) << "column " << c;
  }
  for (int t = 0; t < trials; ++t) {
    const auto x = random_vector(M.cols(), f, rng);
    ASSERT_EQ(slp_eval(p, x, f), mat_vec(M, x));
  }
}

uint64_t count_op(const StraightLineProgram& p, OpKind k) {
  uint64_t c = 0;
  for (const auto& i : p.instrs) c += i.op == k;
  return c;
}

}  // namespace

TEST(Slp, NaiveAccumulation) {
  const auto M = BitMatrix::from_strings({"111", "110"});
  EXPECT_EQ(matrix_to_naive_slp(M).counts().add, 3u);
  const auto I = matrix_to_naive_slp(BitMatrix::identity(5));
  EXPECT_EQ(I.counts().add, 0u);
  EXPECT_EQ(count_op(I, OpKind::Copy), 5u);
}

TEST(Slp, CseSharesPair) {
  const auto M = BitMatrix::from_strings({"111", "110"});
  const auto p = cse_optimize(M);
  EXPECT_EQ(p.counts().add, 2u);
  auto f = default_field(3);
  std::mt19937_64 rng(3);
  expect_computes(p, M, *f, rng, 20);
  EXPECT_EQ(cse_optimize(BitMatrix::identity(6)).counts().add, 0u);
}

TEST(Slp, DuplicateRowsShareWork) {
  for (size_t w = 2; w <= 9; ++w) {
    BitMatrix M(2, 12);
    for (size_t c = 0; c < w; ++c) {
      M.set(0, c);
      M.set(1, c);
    }
    const auto p = cse_optimize(M);
    EXPECT_LE(p.counts().add, w) << "w = " << w;
    EXPECT_EQ(p.counts().add, w - 1) << "w = " << w;
  }
}

TEST(Slp, CseSoundOnRandomMatrices) {
  auto f = default_field(5);
  std::mt19937_64 rng(11);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    BitMatrix M(20, 20);
    for (size_t r = 0; r < 20; ++r)
      for (size_t c = 0; c < 20; ++c)
        if (bit(rng)) M.set(r, c);
    const auto naive = matrix_to_naive_slp(M);
    const auto opt = cse_optimize(M);
    expect_computes(opt, M, *f, rng, 100);
    EXPECT_LE(opt.counts().add, naive.counts().add);
    EXPECT_EQ(naive.counts().add, M.naive_additions());
  }
}

TEST(Slp, CseStrictWhenPairRepeats) {
  const auto M = BitMatrix::from_strings({"1101", "1110", "0111"});
  EXPECT_LT(cse_optimize(M).counts().add, M.naive_additions());
}

TEST(Slp, CseSoundOnPlanMatrices) {
  std::mt19937_64 rng(5);
  for (int m : {3, 5, 8}) {
    auto f = default_field(m);
    const auto cs = compute_cosets(f->n());
    for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
      const auto plan = build_full_cfft(f, cs, v);
      for (const BitMatrix* M : {&plan.pre, &plan.post}) {
        const auto p = cse_optimize(*M);
        expect_computes(p, *M, *f, rng, m == 8 ? 5 : 50);
        EXPECT_LE(p.counts().add, M->naive_additions());
      }
    }
  }
}

TEST(Slp, PlanProgramMatchesEvaluator) {
  auto f = make_field(5, 0x25);
  const auto rp = build_reduced_plan(f, Variant::SCFFT, SupportSpec::spectral(SupportSpec::range(0, 5)));
  const auto pp = plan_to_slp(rp.base);
  EXPECT_EQ(pp.slp.counts().mult, 18u);
  EXPECT_EQ(pp.slp.counts().mult, mult_count(rp));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_vector(31, *f, rng);
    ASSERT_EQ(run_plan_program(pp, x, *f), evaluate_plan(rp.base, x).values);
  }
}

TEST(Slp, UnitVectorsReconstructMatrix) {
  auto f = default_field(5);
  for (Variant v : {Variant::DCFFT, Variant::SCFFT}) {
    const auto plan = build_full_cfft(f, compute_cosets(31), v);
    const auto pp = plan_to_slp(plan);
    const auto M = materialize_plan(plan);
    for (uint32_t j = 0; j < 31; ++j) {
      std::vector<FieldElement> e(31);
      e[j] = f->one();
      const auto col = run_plan_program(pp, e, *f);
      for (uint32_t i = 0; i < 31; ++i) ASSERT_EQ(col[i], M[i][j]);
    }
  }
}

TEST(Slp, LargePlanProgramMatchesEvaluator) {
  auto f = default_field(8);
  const auto rp = build_reduced_plan(f, Variant::SCFFT, SupportSpec::spectral(SupportSpec::range(0, 31)));
  const auto pp = plan_to_slp(rp.base);
  const auto naive = plan_to_slp(rp.base, {}, false);
  EXPECT_LT(pp.slp.counts().add, naive.slp.counts().add);
  EXPECT_EQ(naive.slp.counts().add, naive_additions(rp.base));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_vector(255, *f, rng);
    ASSERT_EQ(run_plan_program(pp, x, *f), evaluate_plan(rp.base, x).values);
  }
}

TEST(Slp, EmptyPlanGivesEmptyProgram) {
  CfftPlan plan;
  plan.field = default_field(3);
  plan.cosets.n = 7;
  const auto pp = plan_to_slp(plan);
  EXPECT_TRUE(pp.slp.instrs.empty());
  EXPECT_TRUE(pp.slp.outputs.empty());
  EXPECT_EQ(pp.slp.counts(), OpTally{});
}

TEST(Slp, EvalIdentityProgram) {
  StraightLineProgram p;
  const auto a = p.new_slot("x_0");
  const auto b = p.new_slot("x_1");
  p.inputs = {a, b};
  p.outputs = {{"x_0", a}, {"x_1", b}};
  auto f = default_field(3);
  const std::vector<FieldElement> x{FieldElement(3), FieldElement(6)};
  EXPECT_EQ(slp_eval(p, x, *f), x);
}

TEST(Slp, EvalRejectsUnboundSlot) {
  StraightLineProgram p;
  const auto a = p.new_slot("x_0");
  p.inputs = {a};
  const auto dangling = p.new_slot("t_0");
  const auto y = p.add(a, dangling, "y_0");
  p.outputs = {{"y_0", y}};
  auto f = default_field(3);
  EXPECT_THROW(
      {
        try {
          slp_eval(p, {f->one()}, *f);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::UnboundSlot);
          throw;
        }
      },
      Error);
}

TEST(Slp, MulConstNormalization) {
  StraightLineProgram p;
  const auto a = p.new_slot("x_0");
  p.inputs = {a};
  p.mul_const(a, FieldElement(1), "g_0");
  EXPECT_EQ(p.instrs.back().op, OpKind::Copy);
  EXPECT_EQ(p.counts().mult, 0u);
  p.mul_const(a, FieldElement(2), "g_1");
  EXPECT_EQ(p.counts().mult, 1u);
  EXPECT_THROW(p.mul_const(a, FieldElement(0), "g_2"), Error);
}

TEST(Slp, CostFormula) {
  EXPECT_EQ(make_cost(8, 149, 3970, 0).total, 6205u);
  EXPECT_EQ(make_cost(8, 335, 8405, 32).total, 13910u);
  EXPECT_EQ(make_cost(8, 0, 0, 0).total, 0u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + static_cast<int>(rng() % 15);
    const uint64_t a = rng() % 100000, b = rng() % 100000, c = rng() % 1000;
    const auto r = make_cost(m, a, b, c);
    EXPECT_EQ(r.total, static_cast<uint64_t>(2 * m - 1) * (a + c) + b);
  }
  const auto p = cse_optimize(BitMatrix::from_strings({"111", "110"}));
  const auto cr = cost_report(p, 4, 3);
  EXPECT_EQ(cr.n_add, 2u);
  EXPECT_EQ(cr.n_div, 3u);
  EXPECT_EQ(cr.total, 7u * 3u + 2u);
}

TEST(SlpText, ParseSimple) {
  const auto pp = parse_slp_text("t_1 = x_0 + x_1\ny_0 = t_1\n");
  EXPECT_EQ(pp.slp.counts().add, 1u);
  EXPECT_EQ(count_op(pp.slp, OpKind::Copy), 1u);
  EXPECT_EQ(pp.slp.inputs.size(), 2u);
  ASSERT_EQ(pp.slp.outputs.size(), 1u);
  EXPECT_EQ(pp.slp.outputs[0].first, "y_{0}");
}

TEST(SlpText, MultiOperandExpandsLeftToRight) {
  const auto pp = parse_slp_text("# comment\n\ny_{3} = x_{0} + x_{1} + x_{2} + x_{5}\n");
  EXPECT_EQ(pp.slp.counts().add, 3u);
  auto f = default_field(4);
  const std::vector<FieldElement> x{FieldElement(1), FieldElement(2), FieldElement(4), FieldElement(8)};
  EXPECT_EQ(slp_eval(pp.slp, x, *f), std::vector<FieldElement>{FieldElement(15)});
}

TEST(SlpText, Errors) {
  try {
    parse_slp_text("t_1 = x_0 + x_1\ny_0 = t_1 + t_9\n");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    parse_slp_text("t_1 = x_0 + x_1\nt_1 = x_0\n");
    FAIL() << "expected RedefinitionError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RedefinitionError);
  }
  try {
    parse_slp_text("t_1 = x_0 +\n");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(SlpText, OutputReassignmentWarns) {
  const auto pp = parse_slp_text("y_0 = x_0 + x_1\ny_0 = x_2 + x_3\n");
  ASSERT_EQ(pp.redefined.size(), 1u);
  EXPECT_EQ(pp.redefined[0], "y_{0}");
  EXPECT_EQ(pp.warnings.size(), 1u);
  auto f = default_field(4);
  const std::vector<FieldElement> x{FieldElement(1), FieldElement(2), FieldElement(4), FieldElement(8)};
  EXPECT_EQ(slp_eval(pp.slp, x, *f), std::vector<FieldElement>{FieldElement(12)});
}

TEST(SlpText, EmitParseRoundTrip) {
  auto f = make_field(5, 0x25);
  const auto rp = build_reduced_plan(f, Variant::SCFFT, SupportSpec::spectral(SupportSpec::range(0, 5)));
  const auto pp = plan_to_slp(rp.base);
  const std::string text = emit_slp_text(pp.slp, f.get());
  ParseOptions opts;
  opts.field = f;
  opts.output_prefixes = {"y"};
  const auto back = parse_slp_text(text, opts);
  EXPECT_EQ(back.slp.counts(), pp.slp.counts());
  EXPECT_EQ(back.slp.inputs.size(), pp.slp.inputs.size());
  EXPECT_EQ(back.slp.outputs.size(), pp.slp.outputs.size());
  EXPECT_EQ(emit_slp_text(back.slp, f.get()), text);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::map<std::string, FieldElement> named;
    const auto x = random_vector(pp.slp.inputs.size(), *f, rng);
    for (size_t i = 0; i < x.size(); ++i) named[pp.slp.slot_names[pp.slp.inputs[i]]] = x[i];
    std::vector<FieldElement> xb;
    for (uint32_t s : back.slp.inputs) xb.push_back(named.at(back.slp.slot_names[s]));
    const auto ya = slp_eval(pp.slp, x, *f);
    const auto yb = slp_eval(back.slp, xb, *f);
    std::map<std::string, FieldElement> out_a, out_b;
    for (size_t i = 0; i < ya.size(); ++i) out_a[pp.slp.outputs[i].first] = ya[i];
    for (size_t i = 0; i < yb.size(); ++i) out_b[back.slp.outputs[i].first] = yb[i];
    EXPECT_EQ(out_a, out_b);
  }
}

TEST(SlpText, CanonicalSlot) {
  EXPECT_EQ(canonical_slot("t_12"), "t_{12}");
  EXPECT_EQ(canonical_slot("r'_{150}"), "r'_{150}");
  EXPECT_EQ(slot_name("g", 7), "g_{7}");
}
