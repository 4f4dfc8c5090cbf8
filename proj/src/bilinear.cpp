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

#include "cfft/bilinear.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>

#include "cfft/error.hpp"

namespace cfft {

namespace {

struct LinearKernel {
  uint32_t length = 0;
  std::vector<std::vector<uint8_t>> d, c;  // R x L
  std::vector<std::vector<uint8_t>> k;     // (2L-1) x R
};

LinearKernel karatsuba_linear(uint32_t L) {
  LinearKernel out;
  out.length = L;
  if (L == 1) {
    out.d = {{1}};
    out.c = {{1}};
    out.k = {{1}};
    return out;
  }
  const uint32_t h = (L + 1) / 2;
  const uint32_t l2 = L - h;
  const LinearKernel lo = karatsuba_linear(h);
  const LinearKernel hi = karatsuba_linear(l2);
  const LinearKernel mid = karatsuba_linear(h);
  const size_t R = lo.d.size() + hi.d.size() + mid.d.size();
  out.k.assign(2 * L - 1, std::vector<uint8_t>(R, 0));

  size_t slot = 0;
  // lo * lo contributes z[d] + z[d + h]
  for (size_t r = 0; r < lo.d.size(); ++r, ++slot) {
    std::vector<uint8_t> dr(L, 0), cr(L, 0);
    for (uint32_t i = 0; i < h; ++i) {
      dr[i] = lo.d[r][i];
      cr[i] = lo.c[r][i];
    }
    out.d.push_back(dr);
    out.c.push_back(cr);
    for (size_t deg = 0; deg < lo.k.size(); ++deg)
      if (lo.k[deg][r]) {
        out.k[deg][slot] ^= 1;
        out.k[deg + h][slot] ^= 1;
      }
  }
  // hi * hi contributes z[d + h] + z[d + 2h]
  for (size_t r = 0; r < hi.d.size(); ++r, ++slot) {
    std::vector<uint8_t> dr(L, 0), cr(L, 0);
    for (uint32_t i = 0; i < l2; ++i) {
      dr[h + i] = hi.d[r][i];
      cr[h + i] = hi.c[r][i];
    }
    out.d.push_back(dr);
    out.c.push_back(cr);
    for (size_t deg = 0; deg < hi.k.size(); ++deg)
      if (hi.k[deg][r]) {
        out.k[deg + h][slot] ^= 1;
        out.k[deg + 2 * h][slot] ^= 1;
      }
  }
  // (lo + hi) * (lo + hi) contributes z[d + h]
  for (size_t r = 0; r < mid.d.size(); ++r, ++slot) {
    std::vector<uint8_t> dr(L, 0), cr(L, 0);
    for (uint32_t i = 0; i < h; ++i) {
      dr[i] ^= mid.d[r][i];
      cr[i] ^= mid.c[r][i];
      if (h + i < L) {
        dr[h + i] ^= mid.d[r][i];
        cr[h + i] ^= mid.c[r][i];
      }
    }
    out.d.push_back(dr);
    out.c.push_back(cr);
    for (size_t deg = 0; deg < mid.k.size(); ++deg)
      if (mid.k[deg][r]) out.k[deg + h][slot] ^= 1;
  }
  return out;
}

ConvolutionKernel from_rows(uint32_t L, const std::vector<std::string>& d, const std::vector<std::string>& c,
                            const std::vector<std::string>& k) {
  ConvolutionKernel out;
  out.length = L;
  out.mults = static_cast<uint32_t>(d.size());
  out.data_pre = BitMatrix::from_strings(d);
  out.const_pre = BitMatrix::from_strings(c);
  out.post = BitMatrix::from_strings(k);
  return out;
}

}  // namespace

bool extended_enabled() {
  const char* v = std::getenv("CFFT_EXTENDED");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

ConvolutionKernel karatsuba_cyclic_kernel(uint32_t L) {
  if (L == 0) fail(ErrorCode::UnsupportedLength, "kernel length must be positive");
  const LinearKernel lin = karatsuba_linear(L);
  const size_t R = lin.d.size();
  ConvolutionKernel out;
  out.length = L;
  out.mults = static_cast<uint32_t>(R);
  out.data_pre = BitMatrix(R, L);
  out.const_pre = BitMatrix(R, L);
  out.post = BitMatrix(L, R);
  for (size_t r = 0; r < R; ++r)
    for (uint32_t i = 0; i < L; ++i) {
      out.data_pre.set(r, i, lin.d[r][i]);
      out.const_pre.set(r, i, lin.c[r][i]);
    }
  for (size_t deg = 0; deg < lin.k.size(); ++deg)
    for (size_t r = 0; r < R; ++r)
      if (lin.k[deg][r]) out.post.flip(deg % L, r);
  return out;
}

ConvolutionKernel builtin_kernel(uint32_t L) { return builtin_kernel(L, extended_enabled()); }

ConvolutionKernel builtin_kernel(uint32_t L, bool extended) {
  switch (L) {
    case 1:
    case 2:
    case 4:
    case 8:
      return karatsuba_cyclic_kernel(L);
    case 3:
      return from_rows(3, {"111", "101", "011", "110"}, {"111", "101", "011", "110"},
                       {"1101", "1110", "1011"});
    case 5:
      return from_rows(5,
                       {"11111", "10111", "01111", "11110", "11101", "00101", "10100", "00110", "01100", "11011"},
                       {"11111", "10001", "01001", "00101", "00011", "11000", "00110", "10100", "01010", "11110"},
                       {"1100010101", "1111100000", "1000101011", "1001001101", "1010010011"});
    case 9:
    case 10:
      if (extended) return karatsuba_cyclic_kernel(L);
      fail(ErrorCode::UnsupportedLength,
           "kernel length " + std::to_string(L) + " requires CFFT_EXTENDED=1");
    default:
      fail(ErrorCode::UnsupportedLength, "no convolution kernel of length " + std::to_string(L));
  }
}

std::vector<FieldElement> cyclic_convolution(const std::vector<FieldElement>& u, const std::vector<FieldElement>& v,
                                             const GaloisField& f) {
  if (u.size() != v.size()) fail(ErrorCode::LengthMismatch, "convolution operands differ in length");
  const size_t L = u.size();
  std::vector<FieldElement> z(L);
  for (size_t i = 0; i < L; ++i)
    for (size_t j = 0; j < L; ++j) z[(i + j) % L] += f.mul(u[i], v[j]);
  return z;
}

std::vector<FieldElement> apply_kernel(const ConvolutionKernel& k, const std::vector<FieldElement>& u,
                                       const std::vector<FieldElement>& v, const GaloisField& f) {
  auto a = k.data_pre.apply(u);
  auto b = k.const_pre.apply(v);
  for (size_t r = 0; r < a.size(); ++r) a[r] = f.mul(a[r], b[r]);
  return k.post.apply(a);
}

bool verify_kernel(const ConvolutionKernel& k, const GaloisField& f, size_t trials, uint64_t seed) {
  const uint32_t L = k.length;
  if (k.data_pre.rows() != k.mults || k.const_pre.rows() != k.mults || k.post.cols() != k.mults ||
      k.data_pre.cols() != L || k.const_pre.cols() != L || k.post.rows() != L)
    return false;
  if (L <= 10) {
    for (uint32_t a = 0; a < (1u << L); ++a)
      for (uint32_t b = 0; b < (1u << L); ++b) {
        std::vector<FieldElement> u(L), v(L);
        for (uint32_t i = 0; i < L; ++i) {
          u[i] = FieldElement((a >> i) & 1u);
          v[i] = FieldElement((b >> i) & 1u);
        }
        if (apply_kernel(k, u, v, f) != cyclic_convolution(u, v, f)) return false;
      }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> d(0, f.n());
  for (size_t t = 0; t < trials; ++t) {
    std::vector<FieldElement> u(L), v(L);
    for (uint32_t i = 0; i < L; ++i) {
      u[i] = FieldElement(d(rng));
      v[i] = FieldElement(d(rng));
    }
    if (apply_kernel(k, u, v, f) != cyclic_convolution(u, v, f)) return false;
  }
  return true;
}

const char* to_string(Variant v) { return v == Variant::DCFFT ? "DCFFT" : "SCFFT"; }

Variant parse_variant(const std::string& s) {
  if (s == "DCFFT" || s == "dcfft") return Variant::DCFFT;
  if (s == "SCFFT" || s == "scfft") return Variant::SCFFT;
  fail(ErrorCode::InvalidArgument, "unknown variant '" + s + "'");
}

CfftPlan build_full_cfft(const FieldSpec& field, const CosetStructure& cs, Variant variant,
                         std::optional<size_t> only_coset) {
  const GaloisField& f = *field;
  const uint32_t n = f.n();
  if (cs.n != n) fail(ErrorCode::ShapeMismatch, "coset structure modulus does not match the field");
  if (only_coset && *only_coset >= cs.cosets.size()) fail(ErrorCode::IndexOutOfRange, "coset index out of range");

  CfftPlan plan;
  plan.variant = variant;
  plan.field = field;
  plan.cosets = cs;
  plan.input_perm = coset_permutation(cs);
  plan.output_perm = variant == Variant::SCFFT ? plan.input_perm : IndexPermutation::identity(n);
  plan.in_index = plan.input_perm.forward;
  plan.out_index = plan.output_perm.forward;

  std::map<uint32_t, ConvolutionKernel> kernels;
  std::map<uint32_t, BasisCoordinates> bases;
  for (size_t i = 0; i < cs.cosets.size(); ++i) {
    if (only_coset && i != *only_coset) continue;
    const uint32_t s = cs.cosets[i].size();
    if (!kernels.count(s)) {
      try {
        kernels.emplace(s, builtin_kernel(s));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnsupportedLength) fail(ErrorCode::KernelMissing, e.what());
        throw;
      }
      bases.emplace(s, BasisCoordinates(f, find_normal_basis(f, s)));
    }
  }

  size_t total_slots = 0;
  std::vector<size_t> slot_base(cs.cosets.size(), 0), pos_base(cs.cosets.size(), 0);
  {
    size_t pos = 0;
    for (size_t i = 0; i < cs.cosets.size(); ++i) {
      pos_base[i] = pos;
      pos += cs.cosets[i].size();
      slot_base[i] = total_slots;
      if (!only_coset || i == *only_coset) total_slots += kernels.at(cs.cosets[i].size()).mults;
    }
  }

  plan.pre = BitMatrix(total_slots, n);
  plan.post = BitMatrix(n, total_slots);
  plan.c.resize(total_slots);
  plan.slot_coset.resize(total_slots);
  plan.slot_kernel.resize(total_slots);

  for (size_t i = 0; i < cs.cosets.size(); ++i) {
    if (only_coset && i != *only_coset) continue;
    const Coset& cos = cs.cosets[i];
    const uint32_t s = cos.size();
    const ConvolutionKernel& k = kernels.at(s);
    const BasisCoordinates& bc = bases.at(s);
    const auto& conj = bc.basis().conjugate_exponents;
    const size_t sb = slot_base[i], pb = pos_base[i];

    // Reversed conjugate sequence turns the per-coset correlation into a convolution.
    std::vector<FieldElement> v(s);
    for (uint32_t j = 0; j < s; ++j) v[j] = f.exp(conj[(s - j) % s]);
    std::vector<FieldElement> ci = k.const_pre.apply(v);

    // qrow[p]: bitmask over kernel products r of Q[p][r] = post[-p mod s][r].
    std::vector<uint64_t> qrow(s, 0);
    for (uint32_t p = 0; p < s; ++p)
      for (uint32_t r = 0; r < k.mults; ++r)
        if (k.post.get((s - p) % s, r)) qrow[p] |= uint64_t{1} << r;

    const uint64_t lead = cos.at(0);
    auto slots_for_output = [&](uint32_t j) {
      const uint32_t a = bc.coords(f.exp(static_cast<int64_t>((j * lead) % n)));
      uint64_t w = 0;
      for (uint32_t p = 0; p < s; ++p)
        if (a & (1u << p)) w ^= qrow[p];
      return w;
    };

    for (uint32_t r = 0; r < k.mults; ++r) {
      plan.c[sb + r] = ci[r];
      plan.slot_coset[sb + r] = static_cast<uint32_t>(i);
      plan.slot_kernel[sb + r] = r;
    }

    if (variant == Variant::DCFFT) {
      for (uint32_t r = 0; r < k.mults; ++r)
        for (uint32_t l = 0; l < s; ++l)
          if (k.data_pre.get(r, l)) plan.pre.set(sb + r, pb + l);
      for (uint32_t j = 0; j < n; ++j) {
        uint64_t w = slots_for_output(j);
        while (w) {
          plan.post.set(j, sb + std::countr_zero(w));
          w &= w - 1;
        }
      }
    } else {
      for (uint32_t q = 0; q < n; ++q) {
        uint64_t w = slots_for_output(plan.input_perm.forward[q]);
        while (w) {
          plan.pre.set(sb + std::countr_zero(w), q);
          w &= w - 1;
        }
      }
      for (uint32_t r = 0; r < k.mults; ++r)
        for (uint32_t l = 0; l < s; ++l)
          if (k.data_pre.get(r, l)) plan.post.set(pb + l, sb + r);
    }
  }
  return plan;
}

uint64_t plan_mult_count(const CfftPlan& plan) {
  uint64_t m = 0;
  for (FieldElement x : plan.c) m += !x.is_one();
  return m;
}

std::vector<FieldElement> naive_dft(const std::vector<FieldElement>& f, const GaloisField& field, bool inverse) {
  const uint32_t n = field.n();
  if (f.size() != n) fail(ErrorCode::LengthMismatch, "DFT input must have length n");
  std::vector<FieldElement> out(n);
  for (uint32_t j = 0; j < n; ++j) {
    FieldElement acc;
    for (uint32_t i = 0; i < n; ++i) {
      if (f[i].is_zero()) continue;
      const int64_t e = static_cast<int64_t>((static_cast<uint64_t>(i) * j) % n);
      acc += field.mul(f[i], field.exp(inverse ? -e : e));
    }
    out[j] = acc;
  }
  return out;
}

PlanEvaluation evaluate_plan(const CfftPlan& plan, const std::vector<FieldElement>& f) {
  const GaloisField& field = *plan.field;
  if (f.size() != plan.n()) fail(ErrorCode::ShapeMismatch, "plan input must have length n");
  if (plan.pre.cols() != plan.in_index.size() || plan.post.rows() != plan.out_index.size() ||
      plan.pre.rows() != plan.c.size() || plan.post.cols() != plan.c.size())
    fail(ErrorCode::ShapeMismatch, "inconsistent plan");
  PlanEvaluation ev;
  std::vector<FieldElement> x(plan.in_index.size());
  for (size_t q = 0; q < x.size(); ++q) x[q] = f[plan.in_index[q]];
  std::vector<FieldElement> u = plan.pre.apply(x, &ev.tally.add);
  for (size_t r = 0; r < u.size(); ++r) {
    if (plan.c[r].is_one()) continue;
    if (!u[r].is_zero()) ++ev.tally.mult;
    u[r] = field.mul(u[r], plan.c[r]);
  }
  std::vector<FieldElement> y = plan.post.apply(u, &ev.tally.add);
  ev.values.assign(plan.n(), FieldElement());
  for (size_t r = 0; r < y.size(); ++r) ev.values[plan.out_index[r]] = y[r];
  return ev;
}

std::vector<std::vector<FieldElement>> materialize_plan(const CfftPlan& plan) {
  const uint32_t n = plan.n();
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n));
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<FieldElement> e(n);
    e[i] = FieldElement(1);
    auto col = evaluate_plan(plan, e).values;
    for (uint32_t j = 0; j < n; ++j) m[j][i] = col[j];
  }
  return m;
}

}  // namespace cfft
