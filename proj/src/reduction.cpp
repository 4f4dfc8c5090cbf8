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

#include "cfft/reduction.hpp"

#include <algorithm>
#include <map>

#include "cfft/error.hpp"

namespace cfft {

namespace {

std::vector<uint32_t> normalized(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T>
std::vector<size_t> as_size(const std::vector<T>& v) {
  return std::vector<size_t>(v.begin(), v.end());
}

ReducedPlan strike(const CfftPlan& plan, const SupportSpec& sup, std::vector<uint32_t> rows,
                   std::vector<uint32_t> cols, bool drop_inputs) {
  std::vector<uint32_t> slots(plan.slots());
  for (uint32_t r = 0; r < slots.size(); ++r) slots[r] = r;

  for (;;) {
    BitMatrix pre = plan.pre.select_rows(as_size(slots)).select_cols(as_size(cols));
    BitMatrix post = plan.post.select_rows(as_size(rows)).select_cols(as_size(slots));
    std::vector<uint32_t> live_slots, live_cols;
    for (size_t r = 0; r < slots.size(); ++r)
      if (!pre.row_is_zero(r) && !post.col_is_zero(r)) live_slots.push_back(slots[r]);
    if (drop_inputs) {
      BitMatrix preT = pre.transpose();
      for (size_t q = 0; q < cols.size(); ++q)
        if (!preT.row_is_zero(q)) live_cols.push_back(cols[q]);
    } else {
      live_cols = cols;
    }
    if (live_slots.size() == slots.size() && live_cols.size() == cols.size()) break;
    slots = std::move(live_slots);
    cols = std::move(live_cols);
  }

  ReducedPlan rp;
  rp.support = sup;
  rp.rotations = plan.cosets.rotations();
  rp.full_mult_count = plan_mult_count(plan);
  rp.kept_slots = slots;
  rp.kept_cols = cols;
  rp.kept_rows = rows;
  for (uint32_t r = 0, k = 0; r < plan.slots(); ++r) {
    if (k < slots.size() && slots[k] == r) ++k;
    else rp.removed_slots.push_back(r);
  }

  CfftPlan& b = rp.base;
  b.variant = plan.variant;
  b.field = plan.field;
  b.cosets = plan.cosets;
  b.input_perm = plan.input_perm;
  b.output_perm = plan.output_perm;
  b.pre = plan.pre.select_rows(as_size(slots)).select_cols(as_size(cols));
  b.post = plan.post.select_rows(as_size(rows)).select_cols(as_size(slots));
  for (uint32_t q : cols) b.in_index.push_back(plan.in_index[q]);
  for (uint32_t r : rows) b.out_index.push_back(plan.out_index[r]);
  for (uint32_t s : slots) {
    b.c.push_back(plan.c[s]);
    b.slot_coset.push_back(plan.slot_coset[s]);
    b.slot_kernel.push_back(plan.slot_kernel[s]);
  }
  return rp;
}

std::vector<uint32_t> all_indices(size_t n) {
  std::vector<uint32_t> v(n);
  for (uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

void check_support(const CfftPlan& plan, const SupportSpec& s) {
  if (s.keep.empty()) fail(ErrorCode::EmptySupport, "support set is empty");
  if (s.keep.back() >= plan.n()) fail(ErrorCode::IndexOutOfRange, "support index exceeds n - 1");
}

}  // namespace

SupportSpec SupportSpec::spectral(std::vector<uint32_t> keep) {
  return SupportSpec{SupportKind::Spectral, normalized(std::move(keep))};
}

SupportSpec SupportSpec::temporal(std::vector<uint32_t> keep) {
  return SupportSpec{SupportKind::Temporal, normalized(std::move(keep))};
}

std::vector<uint32_t> SupportSpec::range(uint32_t first, uint32_t last, uint32_t step) {
  std::vector<uint32_t> v;
  for (uint32_t i = first; i <= last; i += step) v.push_back(i);
  return v;
}

bool SupportSpec::contains(uint32_t i) const { return std::binary_search(keep.begin(), keep.end(), i); }

ReducedPlan reduce_partial(const CfftPlan& plan, const SupportSpec& keep) {
  if (keep.kind != SupportKind::Spectral) fail(ErrorCode::InvalidArgument, "partial reduction needs a spectral support");
  check_support(plan, keep);
  std::vector<uint32_t> rows;
  for (uint32_t r = 0; r < plan.out_index.size(); ++r)
    if (keep.contains(plan.out_index[r])) rows.push_back(r);
  if (rows.empty()) fail(ErrorCode::EmptySupport, "no plan output lies in the support");
  return strike(plan, keep, rows, all_indices(plan.in_index.size()), true);
}

ReducedPlan reduce_dual_partial(const CfftPlan& plan, const SupportSpec& support) {
  if (support.kind != SupportKind::Temporal)
    fail(ErrorCode::InvalidArgument, "dual partial reduction needs a temporal support");
  check_support(plan, support);
  std::vector<uint32_t> cols;
  for (uint32_t q = 0; q < plan.in_index.size(); ++q)
    if (support.contains(plan.in_index[q])) cols.push_back(q);
  if (cols.empty()) fail(ErrorCode::EmptySupport, "no plan input lies in the support");
  return strike(plan, support, all_indices(plan.out_index.size()), cols, false);
}

ReducedPlan reduce(const CfftPlan& plan, const SupportSpec& support) {
  return support.kind == SupportKind::Spectral ? reduce_partial(plan, support) : reduce_dual_partial(plan, support);
}

ReducedPlan unreduced(const CfftPlan& plan) {
  ReducedPlan rp;
  rp.base = plan;
  rp.support = SupportSpec::spectral(all_indices(plan.n()));
  rp.rotations = plan.cosets.rotations();
  rp.kept_slots = all_indices(plan.slots());
  rp.kept_cols = all_indices(plan.in_index.size());
  rp.kept_rows = all_indices(plan.out_index.size());
  rp.full_mult_count = plan_mult_count(plan);
  return rp;
}

uint64_t mult_count(const ReducedPlan& rp) { return plan_mult_count(rp.base); }

uint64_t additive_bound(const CfftPlan& plan) { return plan.pre.popcount() + plan.post.popcount(); }

uint64_t naive_additions(const CfftPlan& plan) { return plan.pre.naive_additions() + plan.post.naive_additions(); }

RotationSearch search_rotation(const FieldSpec& field, const CosetStructure& base, Variant variant,
                               const SupportSpec& support) {
  RotationSearch out;
  out.cosets = base;
  out.struck.resize(base.cosets.size());
  std::map<uint32_t, uint32_t> current;  // coset size -> rotation last chosen
  for (size_t i = 0; i < base.cosets.size(); ++i) {
    const uint32_t s = base.cosets[i].size();
    for (uint32_t r = 0; r < s; ++r) {
      CosetStructure cs = base;
      cs.cosets[i].rotation = r;
      CfftPlan single = build_full_cfft(field, cs, variant, i);
      uint32_t struck;
      try {
        struck = static_cast<uint32_t>(reduce(single, support).removed_slots.size());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptySupport) throw;
        struck = static_cast<uint32_t>(single.slots());
      }
      out.struck[i].push_back(struck);
    }
    const uint32_t best = *std::max_element(out.struck[i].begin(), out.struck[i].end());
    uint32_t pick = 0;
    auto it = current.find(s);
    if (it != current.end() && out.struck[i][it->second] == best) {
      pick = it->second;
    } else {
      while (out.struck[i][pick] != best) ++pick;
    }
    out.cosets.cosets[i].rotation = pick;
    current[s] = pick;
  }
  return out;
}

ReducedPlan build_reduced_plan(const FieldSpec& field, Variant variant, const SupportSpec& support, bool search) {
  CosetStructure cs = compute_cosets(field->n());
  if (search) cs = search_rotation(field, cs, variant, support).cosets;
  return reduce(build_full_cfft(field, cs, variant), support);
}

}  // namespace cfft
