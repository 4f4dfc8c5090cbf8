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

#include "cfft/galois.hpp"

#include <bit>
#include <cstdio>

#include "cfft/error.hpp"

namespace cfft {

namespace {

int degree_of(uint32_t poly) { return poly == 0 ? -1 : 31 - std::countl_zero(poly); }

}  // namespace

uint64_t order_of_x(int m, uint32_t poly) {
  if ((poly & 1u) == 0) return 0;
  const uint32_t top = 1u << m;
  const uint64_t limit = top - 1;
  uint32_t v = 1;
  for (uint64_t k = 1; k <= limit; ++k) {
    v <<= 1;
    if (v & top) v ^= poly;
    if (v == 1) return k;
  }
  return 0;
}

GaloisField::GaloisField(int m, uint32_t prim_poly) : m_(m), poly_(prim_poly) {
  if (m < 2 || m > 16) fail(ErrorCode::DegreeMismatch, "m must lie in [2, 16], got " + std::to_string(m));
  if (degree_of(prim_poly) != m)
    fail(ErrorCode::DegreeMismatch, "polynomial degree " + std::to_string(degree_of(prim_poly)) +
                                        " does not match m = " + std::to_string(m));
  n_ = (1u << m) - 1;
  if (order_of_x(m, prim_poly) != n_) fail(ErrorCode::NotPrimitive, "alpha does not have order 2^m - 1");

  exp_.resize(n_);
  log_.assign(n_ + 1, 0);
  uint32_t v = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    exp_[i] = v;
    log_[v] = i;
    v <<= 1;
    if (v & (1u << m)) v ^= prim_poly;
  }
}

FieldElement GaloisField::exp(int64_t e) const {
  int64_t r = e % static_cast<int64_t>(n_);
  if (r < 0) r += n_;
  return FieldElement(exp_[static_cast<size_t>(r)]);
}

uint32_t GaloisField::log(FieldElement a) const {
  if (a.bits == 0) fail(ErrorCode::DivideByZero, "log of zero");
  if (a.bits > n_) fail(ErrorCode::InvalidArgument, "element out of range");
  return log_[a.bits];
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.bits == 0) fail(ErrorCode::DivideByZero, "inverse of zero");
  return FieldElement(exp_[(n_ - log_[a.bits]) % n_]);
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const {
  if (b.bits == 0) fail(ErrorCode::DivideByZero, "division by zero");
  if (a.bits == 0) return FieldElement(0);
  return FieldElement(exp_[(log_[a.bits] + n_ - log_[b.bits]) % n_]);
}

FieldElement GaloisField::pow(FieldElement a, int64_t e) const {
  if (a.bits == 0) {
    if (e == 0) return one();
    if (e < 0) fail(ErrorCode::DivideByZero, "negative power of zero");
    return zero();
  }
  int64_t le = static_cast<int64_t>(log_[a.bits]) * (e % static_cast<int64_t>(n_));
  return exp(le);
}

std::string GaloisField::poly_hex() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", poly_);
  return buf;
}

uint32_t default_prim_poly(int m) {
  switch (m) {
    case 3: return 0xb;
    case 5: return 0x25;
    case 8: return 0x11d;
    case 9: return 0x211;
    case 10: return 0x409;
    default: break;
  }
  if (m < 2 || m > 16) fail(ErrorCode::DegreeMismatch, "no default polynomial for m = " + std::to_string(m));
  const uint32_t top = 1u << m;
  for (uint32_t low = 1; low < top; low += 2) {
    if (order_of_x(m, top | low) == top - 1) return top | low;
  }
  fail(ErrorCode::NotFound, "no primitive polynomial of degree " + std::to_string(m));
}

FieldSpec make_field(int m, uint32_t prim_poly) { return std::make_shared<const GaloisField>(m, prim_poly); }

FieldSpec default_field(int m) { return make_field(m, default_prim_poly(m)); }

FieldElement mul_reference(FieldElement a, FieldElement b, int m, uint32_t prim_poly) {
  uint32_t x = a.bits, y = b.bits, acc = 0;
  const uint32_t top = 1u << m;
  while (y) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= prim_poly;
  }
  return FieldElement(acc);
}

HornerResult horner_eval(const std::vector<FieldElement>& coeffs, FieldElement x, const GaloisField& f) {
  HornerResult r;
  if (coeffs.empty()) return r;
  FieldElement acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = f.mul(acc, x) + coeffs[i];
    ++r.tally.mult;
    ++r.tally.add;
  }
  r.value = acc;
  return r;
}

OpTally horner_cost(uint64_t len, uint64_t points, bool includes_one) {
  OpTally t;
  if (len == 0 || points == 0) return t;
  const uint64_t deg = len - 1;
  t.add = deg * points;
  t.mult = deg * (includes_one ? points - 1 : points);
  return t;
}

}  // namespace cfft
