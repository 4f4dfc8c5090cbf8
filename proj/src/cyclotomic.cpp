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

#include "cfft/cyclotomic.hpp"

#include <algorithm>

#include "cfft/error.hpp"

namespace cfft {

std::vector<uint32_t> Coset::rotated() const {
  std::vector<uint32_t> out(elements.size());
  for (uint32_t i = 0; i < size(); ++i) out[i] = at(i);
  return out;
}

bool Coset::contains(uint32_t e) const { return std::find(elements.begin(), elements.end(), e) != elements.end(); }

std::vector<uint32_t> CosetStructure::rotations() const {
  std::vector<uint32_t> r;
  for (const auto& c : cosets) r.push_back(c.rotation);
  return r;
}

size_t CosetStructure::coset_of(uint32_t e) const {
  for (size_t i = 0; i < cosets.size(); ++i)
    if (cosets[i].contains(e)) return i;
  fail(ErrorCode::IndexOutOfRange, "exponent " + std::to_string(e) + " is in no coset");
}

IndexPermutation IndexPermutation::from_forward(std::vector<uint32_t> forward) {
  IndexPermutation p;
  p.forward = std::move(forward);
  p.inverse.assign(p.forward.size(), UINT32_MAX);
  for (uint32_t i = 0; i < p.forward.size(); ++i) {
    uint32_t v = p.forward[i];
    if (v >= p.forward.size() || p.inverse[v] != UINT32_MAX)
      fail(ErrorCode::InvalidArgument, "index permutation is not a bijection");
    p.inverse[v] = i;
  }
  return p;
}

IndexPermutation IndexPermutation::identity(uint32_t n) {
  std::vector<uint32_t> f(n);
  for (uint32_t i = 0; i < n; ++i) f[i] = i;
  return from_forward(std::move(f));
}

CosetStructure compute_cosets(uint32_t n) {
  if (n < 1 || ((n + 1) & n) != 0) fail(ErrorCode::InvalidArgument, "modulus must be 2^m - 1");
  CosetStructure cs;
  cs.n = n;
  std::vector<bool> seen(n, false);
  for (uint32_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    Coset c;
    uint32_t e = k;
    do {
      seen[e] = true;
      c.elements.push_back(e);
      e = static_cast<uint32_t>((2ull * e) % n);
    } while (e != k);
    cs.cosets.push_back(std::move(c));
  }
  return cs;
}

CosetStructure rotate_coset(const CosetStructure& cs, size_t coset_index, uint32_t offset) {
  if (coset_index >= cs.cosets.size()) fail(ErrorCode::IndexOutOfRange, "coset index out of range");
  const uint32_t s = cs.cosets[coset_index].size();
  if (offset >= s) fail(ErrorCode::IndexOutOfRange, "rotation offset must be smaller than the coset size");
  CosetStructure out = cs;
  out.cosets[coset_index].rotation = (out.cosets[coset_index].rotation + offset) % s;
  return out;
}

CosetStructure with_rotations(const CosetStructure& cs, const std::vector<uint32_t>& rotations) {
  if (rotations.size() != cs.cosets.size()) fail(ErrorCode::LengthMismatch, "one rotation per coset expected");
  CosetStructure out = cs;
  for (size_t i = 0; i < rotations.size(); ++i) {
    if (rotations[i] >= out.cosets[i].size()) fail(ErrorCode::IndexOutOfRange, "rotation out of range");
    out.cosets[i].rotation = rotations[i];
  }
  return out;
}

IndexPermutation coset_permutation(const CosetStructure& cs) {
  std::vector<uint32_t> f;
  f.reserve(cs.n);
  for (const auto& c : cs.cosets)
    for (uint32_t i = 0; i < c.size(); ++i) f.push_back(c.at(i));
  return IndexPermutation::from_forward(std::move(f));
}

uint32_t gf2_rank(std::vector<uint32_t> v) {
  uint32_t rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    const uint32_t mask = 1u << bit;
    auto piv = std::find_if(v.begin() + rank, v.end(), [&](uint32_t x) { return x & mask; });
    if (piv == v.end()) continue;
    std::iter_swap(v.begin() + rank, piv);
    for (size_t i = 0; i < v.size(); ++i)
      if (i != rank && (v[i] & mask)) v[i] ^= v[rank];
    ++rank;
  }
  return rank;
}

NormalBasis find_normal_basis(const GaloisField& f, uint32_t s) {
  const uint32_t m = static_cast<uint32_t>(f.m());
  if (s == 0 || m % s != 0) fail(ErrorCode::InvalidArgument, "coset size must divide m");
  const uint32_t n = f.n();
  const uint32_t step = n / ((1u << s) - 1);
  for (uint32_t u = 0; u < n; u += step) {
    NormalBasis nb;
    nb.coset_size = s;
    nb.beta_exponent = u;
    std::vector<uint32_t> vecs;
    uint64_t e = u;
    for (uint32_t t = 0; t < s; ++t) {
      nb.conjugate_exponents.push_back(static_cast<uint32_t>(e));
      vecs.push_back(f.exp(static_cast<int64_t>(e)).bits);
      e = (2 * e) % n;
    }
    if (gf2_rank(vecs) == s) return nb;
  }
  fail(ErrorCode::NotFound, "no normal basis for subfield of degree " + std::to_string(s));
}

BasisCoordinates::BasisCoordinates(const GaloisField& f, const NormalBasis& nb)
    : nb_(nb), table_(f.size(), -1) {
  const uint32_t s = nb.coset_size;
  for (uint32_t mask = 0; mask < (1u << s); ++mask) {
    uint32_t v = 0;
    for (uint32_t p = 0; p < s; ++p)
      if (mask & (1u << p)) v ^= f.exp(nb.conjugate_exponents[p]).bits;
    table_[v] = static_cast<int32_t>(mask);
  }
}

uint32_t BasisCoordinates::coords(FieldElement x) const {
  if (x.bits >= table_.size() || table_[x.bits] < 0)
    fail(ErrorCode::BasisExpansionFailed, "element is not in the subfield spanned by the basis");
  return static_cast<uint32_t>(table_[x.bits]);
}

}  // namespace cfft
