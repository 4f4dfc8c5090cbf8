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
#include <vector>

#include "cfft/galois.hpp"

namespace cfft {

struct Coset {
  // Doubling orbit starting at the smallest element, before rotation.
  std::vector<uint32_t> elements;
  uint32_t rotation = 0;

  uint32_t leader() const { return elements.front(); }
  uint32_t size() const { return static_cast<uint32_t>(elements.size()); }
  // Element at position i of the rotated ordering.
  uint32_t at(uint32_t i) const { return elements[(i + rotation) % elements.size()]; }
  std::vector<uint32_t> rotated() const;
  bool contains(uint32_t e) const;
};

struct CosetStructure {
  uint32_t n = 0;
  std::vector<Coset> cosets;

  std::vector<uint32_t> rotations() const;
  // Coset index holding exponent e.
  size_t coset_of(uint32_t e) const;
};

struct IndexPermutation {
  // forward[position] = natural index; inverse[natural index] = position.
  std::vector<uint32_t> forward;
  std::vector<uint32_t> inverse;

  static IndexPermutation from_forward(std::vector<uint32_t> forward);
  static IndexPermutation identity(uint32_t n);
  size_t size() const { return forward.size(); }
};

struct NormalBasis {
  uint32_t coset_size = 0;
  uint32_t beta_exponent = 0;
  // Exponents of beta^(2^t), t = 0 .. s-1.
  std::vector<uint32_t> conjugate_exponents;
};

// Cosets of n = 2^m - 1 in ascending leader order, all rotations zero.
CosetStructure compute_cosets(uint32_t n);
// Shifts the current ordering of one coset by `offset` positions.
CosetStructure rotate_coset(const CosetStructure& cs, size_t coset_index, uint32_t offset);
CosetStructure with_rotations(const CosetStructure& cs, const std::vector<uint32_t>& rotations);
IndexPermutation coset_permutation(const CosetStructure& cs);

// Rank over GF(2) of a set of m-bit vectors.
uint32_t gf2_rank(std::vector<uint32_t> vectors);
// Smallest exponent u whose conjugates form a basis of GF(2^s) inside GF(2^m).
NormalBasis find_normal_basis(const GaloisField& f, uint32_t s);

// Coordinates of subfield elements over a normal basis.
class BasisCoordinates {
 public:
  BasisCoordinates(const GaloisField& f, const NormalBasis& nb);
  // Bit p of the result is the coefficient of beta^(2^p). Throws BasisExpansionFailed
  // when the element lies outside the subfield.
  uint32_t coords(FieldElement x) const;
  const NormalBasis& basis() const { return nb_; }

 private:
  NormalBasis nb_;
  std::vector<int32_t> table_;
};

}  // namespace cfft
