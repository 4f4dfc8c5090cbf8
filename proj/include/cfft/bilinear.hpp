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
#include <optional>
#include <string>
#include <vector>

#include "cfft/bitmatrix.hpp"
#include "cfft/cyclotomic.hpp"
#include "cfft/galois.hpp"

namespace cfft {

// Length-L cyclic convolution z = post * ((data_pre u) .* (const_pre v)).
struct ConvolutionKernel {
  uint32_t length = 0;
  uint32_t mults = 0;
  BitMatrix data_pre;   // R x L
  BitMatrix const_pre;  // R x L
  BitMatrix post;       // L x R
};

// True when CFFT_EXTENDED=1 is set in the environment.
bool extended_enabled();

// L in {1,2,3,4,5,8}; 9 and 10 only when `extended` is set.
ConvolutionKernel builtin_kernel(uint32_t L, bool extended);
ConvolutionKernel builtin_kernel(uint32_t L);
// Recursive Karatsuba product folded modulo x^L - 1.
ConvolutionKernel karatsuba_cyclic_kernel(uint32_t L);

std::vector<FieldElement> cyclic_convolution(const std::vector<FieldElement>& u,
                                             const std::vector<FieldElement>& v, const GaloisField& f);
std::vector<FieldElement> apply_kernel(const ConvolutionKernel& k, const std::vector<FieldElement>& u,
                                       const std::vector<FieldElement>& v, const GaloisField& f);
// Exhaustive over GF(2), then `trials` random pairs over f.
bool verify_kernel(const ConvolutionKernel& k, const GaloisField& f, size_t trials, uint64_t seed = 1);

enum class Variant { DCFFT, SCFFT };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

struct CfftPlan {
  Variant variant = Variant::SCFFT;
  FieldSpec field;
  CosetStructure cosets;
  IndexPermutation input_perm;
  IndexPermutation output_perm;
  // Natural index of each pre column / post row. Full plans list all n.
  std::vector<uint32_t> in_index;
  std::vector<uint32_t> out_index;
  BitMatrix pre;  // slots x inputs
  std::vector<FieldElement> c;
  BitMatrix post;  // outputs x slots
  // Coset and kernel product index of every multiplication slot.
  std::vector<uint32_t> slot_coset;
  std::vector<uint32_t> slot_kernel;

  uint32_t n() const { return cosets.n; }
  size_t slots() const { return c.size(); }
};

// Builds F = post * (c .* (pre * f')). With `only_coset`, only that coset's slots are kept.
CfftPlan build_full_cfft(const FieldSpec& field, const CosetStructure& cs, Variant variant,
                         std::optional<size_t> only_coset = std::nullopt);

// Number of entries of c not equal to one.
uint64_t plan_mult_count(const CfftPlan& plan);

std::vector<FieldElement> naive_dft(const std::vector<FieldElement>& f, const GaloisField& field,
                                    bool inverse = false);

struct PlanEvaluation {
  // Length n, natural order; entries outside out_index stay zero.
  std::vector<FieldElement> values;
  OpTally tally;
};

// Input is a length-n vector in natural order.
PlanEvaluation evaluate_plan(const CfftPlan& plan, const std::vector<FieldElement>& f);

// Dense realized matrix, M[out_index[r]][in_index[q]] layout: rows outputs, cols inputs (natural).
std::vector<std::vector<FieldElement>> materialize_plan(const CfftPlan& plan);

}  // namespace cfft
