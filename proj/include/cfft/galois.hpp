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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cfft {

// Element of GF(2^m) in polynomial basis: bit i is the coefficient of x^i.
struct FieldElement {
  uint32_t bits = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool is_one() const { return bits == 1; }
  friend constexpr bool operator==(FieldElement a, FieldElement b) { return a.bits == b.bits; }
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.bits ^ b.bits);
  }
  constexpr FieldElement& operator+=(FieldElement o) {
    bits ^= o.bits;
    return *this;
  }
};

// Operation tally shared by every counted computation in the library.
struct OpTally {
  uint64_t mult = 0;
  uint64_t add = 0;
  uint64_t div = 0;

  OpTally& operator+=(const OpTally& o) {
    mult += o.mult;
    add += o.add;
    div += o.div;
    return *this;
  }
  friend OpTally operator+(OpTally a, const OpTally& b) { return a += b; }
  friend bool operator==(const OpTally&, const OpTally&) = default;
};

class GaloisField {
 public:
  GaloisField(int m, uint32_t prim_poly);

  int m() const { return m_; }
  uint32_t prim_poly() const { return poly_; }
  // Multiplicative group order 2^m - 1.
  uint32_t n() const { return n_; }
  uint32_t size() const { return n_ + 1; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement alpha() const { return exp(1); }
  // alpha^e for any integer e (reduced mod n).
  FieldElement exp(int64_t e) const;
  // Discrete log base alpha; throws DivideByZero for zero.
  uint32_t log(FieldElement a) const;

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.bits == 0 || b.bits == 0) return FieldElement(0);
    uint32_t s = log_[a.bits] + log_[b.bits];
    if (s >= n_) s -= n_;
    return FieldElement(exp_[s]);
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, int64_t e) const;
  bool contains(FieldElement a) const { return a.bits <= n_; }

  const std::vector<uint32_t>& exp_table() const { return exp_; }
  const std::vector<uint32_t>& log_table() const { return log_; }

  std::string poly_hex() const;

 private:
  int m_;
  uint32_t poly_;
  uint32_t n_;
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
};

using FieldSpec = std::shared_ptr<const GaloisField>;

// Throws DegreeMismatch / NotPrimitive.
FieldSpec make_field(int m, uint32_t prim_poly);
// Default primitive polynomial for degree m (2..16).
uint32_t default_prim_poly(int m);
FieldSpec default_field(int m);

inline FieldElement gf_add(FieldElement a, FieldElement b) { return a + b; }
inline FieldElement gf_mul(FieldElement a, FieldElement b, const GaloisField& f) { return f.mul(a, b); }
inline FieldElement gf_inv(FieldElement a, const GaloisField& f) { return f.inv(a); }

// Shift-and-reduce multiply, independent of the tables.
FieldElement mul_reference(FieldElement a, FieldElement b, int m, uint32_t prim_poly);
// Order of x in GF(2)[x]/(poly), or 0 if x is not invertible or order exceeds 2^m - 1.
uint64_t order_of_x(int m, uint32_t poly);

struct HornerResult {
  FieldElement value;
  OpTally tally;
};

// Sum coeffs[i] x^i by Horner recursion; tally = (deg mults, deg adds).
HornerResult horner_eval(const std::vector<FieldElement>& coeffs, FieldElement x,
                         const GaloisField& f);

// Analytic Horner cost of evaluating a degree (len-1) polynomial at `points`
// points, one of which is x = 1 when `includes_one` (its multiplications are free).
OpTally horner_cost(uint64_t len, uint64_t points, bool includes_one);

}  // namespace cfft
