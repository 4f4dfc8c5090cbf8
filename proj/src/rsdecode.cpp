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

#include "cfft/rsdecode.hpp"

#include <algorithm>
#include <set>

#include "cfft/error.hpp"

namespace cfft {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<FieldElement> spread(const Poly& coeffs, uint32_t n, uint32_t stride, uint32_t offset) {
  std::vector<FieldElement> v(n);
  for (size_t l = 0; l < coeffs.size(); ++l) v[(offset + stride * l) % n] += coeffs[l];
  return v;
}

OpTally program_cost(const PlanProgram& pp) { return pp.slp.counts(); }

void check_erasures(const std::vector<uint32_t>& erasures, const CodeSpec& code) {
  std::set<uint32_t> seen;
  for (uint32_t j : erasures) {
    if (j >= code.n) fail(ErrorCode::IndexOutOfRange, "erasure position " + std::to_string(j));
    if (!seen.insert(j).second) fail(ErrorCode::InvalidArgument, "duplicate erasure " + std::to_string(j));
  }
  if (erasures.size() > code.redundancy()) fail(ErrorCode::DecodeFailure, "more erasures than n - k");
}

void add_stage(DecodeResult& res, const std::string& name, const OpTally& t, int m) {
  res.stages.push_back({name, make_cost(m, t)});
}

void finish_totals(DecodeResult& res, int m) {
  OpTally sum;
  for (const auto& s : res.stages) {
    sum.mult += s.cost.n_mult;
    sum.add += s.cost.n_add;
    sum.div += s.cost.n_div;
  }
  res.total = make_cost(m, sum);
}

}  // namespace

CodeSpec make_code(const FieldSpec& field, uint32_t n, uint32_t k) {
  if (!field) fail(ErrorCode::InvalidArgument, "no field");
  if (n != field->n()) fail(ErrorCode::LengthMismatch, "n must equal 2^m - 1 = " + std::to_string(field->n()));
  if (k == 0 || k >= n) fail(ErrorCode::LengthMismatch, "k must satisfy 0 < k < n");
  if ((n - k) % 2) fail(ErrorCode::LengthMismatch, "n - k must be even");
  return CodeSpec{field, n, k};
}

Poly poly_mul(const Poly& a, const Poly& b, const GaloisField& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += f.mul(a[i], b[j]);
  return c;
}

int poly_degree(const Poly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly formal_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); i += 2) d[i - 1] = a[i];
  return d;
}

EvenOddSplit split_even_odd(const Poly& a) {
  EvenOddSplit s;
  for (size_t i = 0; i < a.size(); ++i) (i % 2 ? s.odd : s.even).push_back(a[i]);
  return s;
}

Poly merge_even_odd(const EvenOddSplit& s) {
  Poly a(std::max(2 * s.even.size(), 2 * s.odd.size() + 1));
  for (size_t l = 0; l < s.even.size(); ++l) a[2 * l] = s.even[l];
  for (size_t l = 0; l < s.odd.size(); ++l) a[2 * l + 1] = s.odd[l];
  trim(a);
  return a;
}

Poly generator_poly(const CodeSpec& code) {
  const GaloisField& f = *code.field;
  Poly g{f.one()};
  for (uint32_t j = 0; j < code.redundancy(); ++j) g = poly_mul(g, {f.exp(j), f.one()}, f);
  return g;
}

std::vector<FieldElement> encode(const std::vector<FieldElement>& msg, const CodeSpec& code) {
  if (msg.size() != code.k) fail(ErrorCode::LengthMismatch, "message must have k symbols");
  const GaloisField& f = *code.field;
  const uint32_t r = code.redundancy();
  const Poly g = generator_poly(code);
  std::vector<FieldElement> c(code.n);
  for (uint32_t i = 0; i < code.k; ++i) c[r + i] = msg[i];
  // Remainder of x^r m(x) by the monic g.
  std::vector<FieldElement> rem(c);
  for (uint32_t i = code.n; i-- > r;) {
    const FieldElement q = rem[i];
    if (q.is_zero()) continue;
    for (uint32_t j = 0; j <= r; ++j) rem[i - r + j] += f.mul(q, g[j]);
  }
  for (uint32_t i = 0; i < r; ++i) c[i] = rem[i];
  return c;
}

std::vector<FieldElement> syndromes_horner(const std::vector<FieldElement>& r, const CodeSpec& code) {
  if (r.size() != code.n) fail(ErrorCode::LengthMismatch, "received vector must have length n");
  std::vector<FieldElement> S(code.redundancy());
  for (uint32_t i = 0; i < S.size(); ++i) S[i] = horner_eval(r, code.field->exp(i), *code.field).value;
  return S;
}

ErrataState bma_inversionless(const std::vector<FieldElement>& S, const std::vector<uint32_t>& erasures,
                              const CodeSpec& code) {
  const GaloisField& f = *code.field;
  const uint32_t two_t = code.redundancy();
  if (S.size() != two_t) fail(ErrorCode::LengthMismatch, "expected n - k syndromes");
  check_erasures(erasures, code);

  ErrataState st;
  st.erasures = erasures;
  std::sort(st.erasures.begin(), st.erasures.end());
  OpTally& tl = st.tally;

  Poly gamma_poly{f.one()};
  for (uint32_t j : st.erasures) {
    gamma_poly = poly_mul(gamma_poly, {f.one(), f.exp(j)}, f);
    tl.mult += gamma_poly.size() - 2;
    tl.add += gamma_poly.size() - 2;
  }
  const uint32_t mu = static_cast<uint32_t>(st.erasures.size());
  Poly lambda = gamma_poly;
  Poly B = gamma_poly;
  uint32_t L = mu;
  FieldElement gamma = f.one();
  for (uint32_t r = mu; r < two_t; ++r) {
    FieldElement delta;
    for (size_t l = 0; l < lambda.size() && l <= r; ++l) {
      delta += f.mul(lambda[l], S[r - l]);
      ++tl.mult;
      if (l) ++tl.add;
    }
    Poly next(std::max(lambda.size(), B.size() + 1));
    for (size_t i = 0; i < lambda.size(); ++i) next[i] = f.mul(gamma, lambda[i]);
    for (size_t i = 0; i < B.size(); ++i) next[i + 1] += f.mul(delta, B[i]);
    tl.mult += lambda.size() + B.size();
    tl.add += std::min(lambda.size() - 1, B.size());
    if (!delta.is_zero() && 2 * L <= r + mu) {
      B = lambda;
      L = r + 1 + mu - L;
      gamma = delta;
    } else {
      B.insert(B.begin(), f.zero());
    }
    lambda = std::move(next);
  }
  trim(lambda);
  if (lambda.empty() || lambda[0].is_zero()) fail(ErrorCode::DecodeFailure, "degenerate locator");
  if (poly_degree(lambda) != static_cast<int>(L)) fail(ErrorCode::DecodeFailure, "locator degree differs from L");
  if (2 * (L - mu) + mu > two_t) fail(ErrorCode::DecodeFailure, "errata exceed the correction capability");
  const FieldElement inv0 = f.inv(lambda[0]);
  ++tl.div;
  for (size_t i = 1; i < lambda.size(); ++i) {
    lambda[i] = f.mul(lambda[i], inv0);
    ++tl.mult;
  }
  lambda[0] = f.one();
  st.tau = std::move(lambda);
  return st;
}

void compute_evaluator(ErrataState& st, const std::vector<FieldElement>& S, const CodeSpec& code) {
  const GaloisField& f = *code.field;
  const uint32_t two_t = code.redundancy();
  Poly A(two_t);
  for (uint32_t i = 0; i < two_t; ++i) {
    for (size_t l = 0; l < st.tau.size() && l <= i; ++l) {
      if (st.tau[l].is_one()) {
        A[i] += S[i - l];
      } else {
        A[i] += f.mul(st.tau[l], S[i - l]);
        ++st.tally.mult;
      }
      if (l) ++st.tally.add;
    }
  }
  trim(A);
  st.A = std::move(A);
}

static std::vector<FieldElement> extend_to(const std::vector<FieldElement>& S, const Poly& tau, size_t len,
                                           const GaloisField& f, OpTally* tally) {
  std::vector<FieldElement> E(S);
  const int d = poly_degree(tau);
  E.resize(len);
  for (size_t j = S.size(); j < len; ++j) {
    FieldElement acc;
    for (int i = 1; i <= d; ++i) {
      acc += f.mul(tau[i], E[j - i]);
      if (tally) {
        ++tally->mult;
        if (i > 1) ++tally->add;
      }
    }
    E[j] = acc;
  }
  return E;
}

std::vector<FieldElement> recursive_extend(const std::vector<FieldElement>& S, const Poly& tau,
                                           const CodeSpec& code, OpTally* tally) {
  if (poly_degree(tau) > static_cast<int>(S.size())) fail(ErrorCode::InvalidArgument, "deg tau exceeds 2t");
  if (!tau.empty() && !tau[0].is_one()) fail(ErrorCode::InvalidArgument, "tau(0) must be 1");
  return extend_to(S, tau, code.n, *code.field, tally);
}

DecoderPlans::DecoderPlans(const CodeSpec& code, bool optimize) : code_(code) {
  const FieldSpec& field = code.field;
  const uint32_t t = code.t();
  const uint32_t two_t = code.redundancy();
  syn_ = build_reduced_plan(field, Variant::SCFFT, SupportSpec::spectral(SupportSpec::range(0, two_t - 1)));
  a_ = build_reduced_plan(field, Variant::DCFFT, SupportSpec::temporal(SupportSpec::range(0, two_t - 1)));
  even_ = build_reduced_plan(field, Variant::DCFFT, SupportSpec::temporal(SupportSpec::range(0, t)));
  odd1_ = build_reduced_plan(field, Variant::DCFFT, SupportSpec::temporal(SupportSpec::range(1, two_t - 1, 2)));
  odd2_ = build_reduced_plan(field, Variant::DCFFT, SupportSpec::temporal(SupportSpec::range(0, t - 1)));
  full_ = build_full_cfft(field, compute_cosets(code.n), Variant::SCFFT);

  SlpNames names;
  names.input = "r";
  names.output = "S";
  syn_prog_ = plan_to_slp(syn_.base, names, optimize);
  names.output = "y";
  names.input = "x";
  a_prog_ = plan_to_slp(a_.base, names, optimize);
  even_prog_ = plan_to_slp(even_.base, names, optimize);
  odd1_prog_ = plan_to_slp(odd1_.base, names, optimize);
  odd2_prog_ = plan_to_slp(odd2_.base, names, optimize);
  full_prog_ = plan_to_slp(full_, names, optimize);
}

std::vector<FieldElement> DecoderPlans::syndromes(const std::vector<FieldElement>& r) const {
  if (r.size() != code_.n) fail(ErrorCode::LengthMismatch, "received vector must have length n");
  const auto out = run_plan_program(syn_prog_, r, *code_.field);
  return std::vector<FieldElement>(out.begin(), out.begin() + code_.redundancy());
}

OpTally DecoderPlans::syndrome_cost() const { return program_cost(syn_prog_); }
OpTally DecoderPlans::a_cost() const { return program_cost(a_prog_); }
OpTally DecoderPlans::tau_even_cost() const { return program_cost(even_prog_); }
OpTally DecoderPlans::odd_cost(ChienOption opt) const {
  OpTally t = program_cost(odd_program(opt));
  if (opt == ChienOption::Two) t.mult += code_.n;
  return t;
}
OpTally DecoderPlans::misc_cost() const { return OpTally{0, code_.n, code_.redundancy()}; }
OpTally DecoderPlans::full_cost() const { return program_cost(full_prog_); }

ChienForneyResult chien_forney_combined(const ErrataState& st, const DecoderPlans& plans, ChienOption opt) {
  const CodeSpec& code = plans.code();
  const GaloisField& f = *code.field;
  const uint32_t n = code.n;
  if (st.A.size() > code.redundancy()) fail(ErrorCode::InvalidArgument, "deg A must be below 2t");
  if (st.tau.size() > code.redundancy() + 1) fail(ErrorCode::InvalidArgument, "deg tau must not exceed 2t");

  ChienForneyResult res;
  res.A_values = run_plan_program(plans.a_program(), spread(st.A, n, 1, 0), f);

  const EvenOddSplit parts = split_even_odd(st.tau);
  const auto even_raw = run_plan_program(plans.tau_even_program(), spread(parts.even, n, 1, 0), f);
  std::vector<FieldElement> even(n);
  for (uint32_t i = 0; i < n; ++i) even[i] = even_raw[(2 * static_cast<uint64_t>(i)) % n];

  res.odd_values.assign(n, FieldElement());
  if (opt == ChienOption::One) {
    res.odd_values = run_plan_program(plans.odd_program(opt), spread(parts.odd, n, 2, 1), f);
  } else {
    const auto odd_raw = run_plan_program(plans.odd_program(opt), spread(parts.odd, n, 1, 0), f);
    for (uint32_t i = 0; i < n; ++i) res.odd_values[i] = f.mul(f.exp(i), odd_raw[(2 * static_cast<uint64_t>(i)) % n]);
  }

  res.tau_values.resize(n);
  for (uint32_t i = 0; i < n; ++i) res.tau_values[i] = even[i] + res.odd_values[i];

  for (uint32_t i = 0; i < n; ++i) {
    if (!res.tau_values[i].is_zero()) continue;
    const uint32_t j = (n - i) % n;
    res.roots.push_back(j);
    if (res.odd_values[i].is_zero())
      fail(ErrorCode::ForneyZeroDerivative, "tau' vanishes at root for position " + std::to_string(j));
    const FieldElement v = f.div(res.A_values[i], res.odd_values[i]);
    if (!v.is_zero()) res.errata.push_back({j, v});
  }
  std::sort(res.roots.begin(), res.roots.end());
  std::sort(res.errata.begin(), res.errata.end(), [](const Erratum& a, const Erratum& b) { return a.position < b.position; });
  if (static_cast<int>(res.roots.size()) != poly_degree(st.tau))
    fail(ErrorCode::CountMismatch, std::to_string(res.roots.size()) + " roots for a locator of degree " +
                                       std::to_string(poly_degree(st.tau)));
  return res;
}

ChienOption select_option(const CostReport& option1, const CostReport& option2) {
  return option2.total < option1.total ? ChienOption::Two : ChienOption::One;
}

DecodeResult decode_time_domain(const std::vector<FieldElement>& r, const std::vector<uint32_t>& erasures,
                                const DecoderPlans& plans, ChienOption opt) {
  const CodeSpec& code = plans.code();
  const int m = code.field->m();
  DecodeResult res;
  res.codeword = r;
  const auto S = plans.syndromes(r);
  add_stage(res, "t.1 syndromes", plans.syndrome_cost(), m);
  try {
    ErrataState st = bma_inversionless(S, erasures, code);
    add_stage(res, "t.2 BMA", st.tally, m);
    const OpTally before = st.tally;
    compute_evaluator(st, S, code);
    OpTally ev = st.tally;
    ev.mult -= before.mult;
    ev.add -= before.add;
    ev.div -= before.div;
    add_stage(res, "t.3 evaluator", ev, m);
    const auto cf = chien_forney_combined(st, plans, opt);
    add_stage(res, "t.4 A(x)", plans.a_cost(), m);
    add_stage(res, "t.4 tau_e", plans.tau_even_cost(), m);
    add_stage(res, opt == ChienOption::One ? "t.4 x tau_o option 1" : "t.4 x tau_o option 2", plans.odd_cost(opt), m);
    add_stage(res, "t.4 misc", plans.misc_cost(), m);
    for (const auto& e : cf.errata) res.codeword[e.position] += e.value;
    res.errata = cf.errata;
    res.success = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DecodeFailure && e.code() != ErrorCode::CountMismatch &&
        e.code() != ErrorCode::ForneyZeroDerivative)
      throw;
    res.failure = e.what();
    res.codeword = r;
    res.errata.clear();
  }
  finish_totals(res, m);
  return res;
}

DecodeResult decode_transform_domain(const std::vector<FieldElement>& r, const std::vector<uint32_t>& erasures,
                                     const DecoderPlans& plans) {
  const CodeSpec& code = plans.code();
  const GaloisField& f = *code.field;
  const uint32_t n = code.n;
  const int m = f.m();
  DecodeResult res;
  res.codeword = r;
  const auto S = plans.syndromes(r);
  add_stage(res, "T.1 syndromes", plans.syndrome_cost(), m);
  try {
    ErrataState st = bma_inversionless(S, erasures, code);
    add_stage(res, "T.2 BMA", st.tally, m);
    OpTally ext;
    const int d = poly_degree(st.tau);
    const auto E = extend_to(S, st.tau, n + static_cast<size_t>(d), f, &ext);
    add_stage(res, "T.3 extension", ext, m);
    for (int i = 0; i < d; ++i)
      if (E[n + i] != E[i]) fail(ErrorCode::DecodeFailure, "extended syndromes are not periodic");
    std::vector<FieldElement> g(n);
    for (uint32_t l = 0; l < n; ++l) g[l] = E[(n - l) % n];
    const auto e = run_plan_program(plans.full_program(), g, f);
    add_stage(res, "T.4 inverse transform", plans.full_cost(), m);
    uint32_t weight = 0;
    for (uint32_t j = 0; j < n; ++j) {
      if (e[j].is_zero()) continue;
      ++weight;
      res.errata.push_back({j, e[j]});
      res.codeword[j] += e[j];
    }
    if (weight > static_cast<uint32_t>(d)) fail(ErrorCode::DecodeFailure, "error weight exceeds locator degree");
    res.success = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DecodeFailure) throw;
    res.failure = e.what();
    res.codeword = r;
    res.errata.clear();
  }
  finish_totals(res, m);
  return res;
}

}  // namespace cfft
