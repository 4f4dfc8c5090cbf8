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

#include "cfft/bilinear.hpp"

namespace cfft {

enum class SupportKind { Spectral, Temporal };

struct SupportSpec {
  SupportKind kind = SupportKind::Spectral;
  // Natural indices, sorted and unique.
  std::vector<uint32_t> keep;

  static SupportSpec spectral(std::vector<uint32_t> keep);
  static SupportSpec temporal(std::vector<uint32_t> keep);
  // {first, first + step, ...} up to and including `last`.
  static std::vector<uint32_t> range(uint32_t first, uint32_t last, uint32_t step = 1);
  bool contains(uint32_t i) const;
};

struct ReducedPlan {
  CfftPlan base;
  SupportSpec support;
  std::vector<uint32_t> rotations;
  // Indices into the unreduced plan's slots / pre columns / post rows.
  std::vector<uint32_t> kept_slots;
  std::vector<uint32_t> removed_slots;
  std::vector<uint32_t> kept_cols;
  std::vector<uint32_t> kept_rows;
  uint64_t full_mult_count = 0;
};

// Drops post rows outside the spectral support, then strikes dead slots and inputs to a fixed point.
ReducedPlan reduce_partial(const CfftPlan& plan, const SupportSpec& keep);
// Drops pre columns outside the temporal support, then strikes dead slots to a fixed point.
ReducedPlan reduce_dual_partial(const CfftPlan& plan, const SupportSpec& support);
ReducedPlan reduce(const CfftPlan& plan, const SupportSpec& support);
// Plan wrapped without any reduction.
ReducedPlan unreduced(const CfftPlan& plan);

uint64_t mult_count(const ReducedPlan& rp);
// Pre plus post popcount, an upper bound on the additions before sharing.
uint64_t additive_bound(const CfftPlan& plan);
uint64_t naive_additions(const CfftPlan& plan);

struct RotationSearch {
  CosetStructure cosets;
  // struck[i][r]: slots of coset i struck when it is rotated by r.
  std::vector<std::vector<uint32_t>> struck;
};

// Per coset, picks the rotation that strikes the most slots. Ties keep the rotation
// last chosen for a coset of the same size, then the smallest offset.
RotationSearch search_rotation(const FieldSpec& field, const CosetStructure& base, Variant variant,
                               const SupportSpec& support);

// Cosets, rotation search, construction and reduction in one call.
ReducedPlan build_reduced_plan(const FieldSpec& field, Variant variant, const SupportSpec& support,
                               bool search = true);

}  // namespace cfft
