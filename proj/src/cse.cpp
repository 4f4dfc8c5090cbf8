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

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "cfft/error.hpp"
#include "cfft/slp.hpp"

namespace cfft {

namespace {

struct PairEntry {
  int32_t count;
  uint32_t a;
  uint32_t b;
};

struct PairOrder {
  bool operator()(const PairEntry& x, const PairEntry& y) const {
    if (x.count != y.count) return x.count < y.count;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

inline uint64_t key(uint32_t a, uint32_t b) {
  if (a > b) std::swap(a, b);
  return (uint64_t{a} << 32) | b;
}

struct CseCore {
  uint32_t base = 0;
  // New variable base + k is extracted[k].first + extracted[k].second.
  std::vector<std::pair<uint32_t, uint32_t>> extracted;
  std::vector<std::vector<uint32_t>> rows;
};

CseCore greedy_pairs(const BitMatrix& M) {
  CseCore core;
  core.base = static_cast<uint32_t>(M.cols());
  core.rows.resize(M.rows());
  for (size_t r = 0; r < M.rows(); ++r) core.rows[r] = M.row_ones(r);

  std::unordered_map<uint64_t, int32_t> counts;
  size_t expected = 0;
  for (const auto& row : core.rows) expected += row.size() * (row.size() > 0 ? row.size() - 1 : 0) / 2;
  counts.reserve(std::min<size_t>(expected, size_t{1} << 22));
  for (const auto& row : core.rows)
    for (size_t i = 0; i < row.size(); ++i)
      for (size_t j = i + 1; j < row.size(); ++j) ++counts[key(row[i], row[j])];

  std::priority_queue<PairEntry, std::vector<PairEntry>, PairOrder> heap;
  for (const auto& [k, c] : counts)
    if (c >= 2) heap.push({c, static_cast<uint32_t>(k >> 32), static_cast<uint32_t>(k)});

  auto dec = [&](uint32_t a, uint32_t b) {
    auto it = counts.find(key(a, b));
    if (--it->second == 0) counts.erase(it);
  };

  std::vector<uint32_t> touched;
  while (!heap.empty()) {
    const PairEntry top = heap.top();
    auto it = counts.find(key(top.a, top.b));
    const int32_t cur = it == counts.end() ? 0 : it->second;
    if (cur != top.count) {
      heap.pop();
      if (cur >= 2) heap.push({cur, top.a, top.b});
      continue;
    }
    if (cur < 2) break;
    heap.pop();

    const uint32_t x = core.base + static_cast<uint32_t>(core.extracted.size());
    core.extracted.emplace_back(top.a, top.b);
    touched.clear();
    for (auto& row : core.rows) {
      if (!std::binary_search(row.begin(), row.end(), top.a) || !std::binary_search(row.begin(), row.end(), top.b))
        continue;
      for (uint32_t c : row) {
        if (c == top.a || c == top.b) continue;
        dec(top.a, c);
        dec(top.b, c);
        ++counts[key(c, x)];
        touched.push_back(c);
      }
      dec(top.a, top.b);
      row.erase(std::remove_if(row.begin(), row.end(), [&](uint32_t v) { return v == top.a || v == top.b; }),
                row.end());
      row.push_back(x);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (uint32_t c : touched) {
      auto jt = counts.find(key(c, x));
      if (jt != counts.end() && jt->second >= 2) heap.push({jt->second, c, x});
    }
  }
  return core;
}

CseCore no_sharing(const BitMatrix& M) {
  CseCore core;
  core.base = static_cast<uint32_t>(M.cols());
  core.rows.resize(M.rows());
  for (size_t r = 0; r < M.rows(); ++r) core.rows[r] = M.row_ones(r);
  return core;
}

// Minimum spanning tree over the rows plus a virtual zero row, Hamming weights.
// parent[r] == -1 means the row hangs off the zero row. order lists parents before children.
struct RowTree {
  std::vector<int32_t> parent;
  std::vector<uint32_t> order;
};

RowTree row_tree(const BitMatrix& M) {
  const size_t R = M.rows();
  RowTree t;
  t.parent.assign(R, -1);
  std::vector<size_t> dist(R);
  std::vector<char> done(R, 0);
  for (size_t r = 0; r < R; ++r) dist[r] = M.row_popcount(r);
  for (size_t k = 0; k < R; ++k) {
    size_t best = R;
    for (size_t r = 0; r < R; ++r)
      if (!done[r] && (best == R || dist[r] < dist[best])) best = r;
    done[best] = 1;
    t.order.push_back(static_cast<uint32_t>(best));
    for (size_t r = 0; r < R; ++r) {
      if (done[r]) continue;
      const size_t d = M.row_distance(r, best);
      if (d < dist[r]) {
        dist[r] = d;
        t.parent[r] = static_cast<int32_t>(best);
      }
    }
  }
  return t;
}

BitMatrix tree_deltas(const BitMatrix& M, const RowTree& t) {
  BitMatrix D = M;
  // Children before parents, so each parent row is still original when read.
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it)
    if (t.parent[*it] >= 0) D.add_row(*it, static_cast<size_t>(t.parent[*it]));
  return D;
}

uint64_t core_additions(const CseCore& core) {
  uint64_t adds = core.extracted.size();
  for (const auto& row : core.rows) adds += row.empty() ? 0 : row.size() - 1;
  return adds;
}

}  // namespace

// Appends M * in to p; returns the output slots.
static std::vector<uint32_t> append_matrix(StraightLineProgram& p, const BitMatrix& M, const std::vector<uint32_t>& in,
                                    const std::vector<std::string>& out_names, const std::string& temp_prefix,
                                    uint64_t& temp_counter, bool optimize) {
  CseCore core = optimize ? greedy_pairs(M) : no_sharing(M);
  RowTree tree;
  if (optimize && M.rows() > 1) {
    RowTree t = row_tree(M);
    CseCore dcore = greedy_pairs(tree_deltas(M, t));
    uint64_t dadds = core_additions(dcore);
    for (size_t r = 0; r < M.rows(); ++r)
      if (t.parent[r] >= 0 && !dcore.rows[r].empty()) ++dadds;
    if (dadds < core_additions(core)) {
      core = std::move(dcore);
      tree = std::move(t);
    }
  }
  if (tree.order.empty()) {
    tree.parent.assign(M.rows(), -1);
    for (uint32_t r = 0; r < M.rows(); ++r) tree.order.push_back(r);
  }

  std::vector<uint32_t> var_slot(in);
  var_slot.reserve(in.size() + core.extracted.size());
  for (const auto& [a, b] : core.extracted)
    var_slot.push_back(p.add(var_slot[a], var_slot[b], slot_name(temp_prefix, temp_counter++)));
  p.extractions += core.extracted.size();

  std::vector<uint32_t> outs(core.rows.size());
  for (uint32_t r : tree.order) {
    const auto& row = core.rows[r];
    const int32_t par = tree.parent[r];
    if (row.empty()) {
      outs[r] = par >= 0 ? p.copy(outs[par], out_names[r]) : p.zero(out_names[r]);
      continue;
    }
    const size_t terms = row.size() + (par >= 0 ? 1 : 0);
    if (terms == 1) {
      outs[r] = p.copy(var_slot[row[0]], out_names[r]);
      continue;
    }
    uint32_t acc = par >= 0 ? outs[par] : var_slot[row[0]];
    for (size_t i = par >= 0 ? 0 : 1; i < row.size(); ++i)
      acc = p.add(acc, var_slot[row[i]], i + 1 == row.size() ? out_names[r] : std::string());
    outs[r] = acc;
  }
  return outs;
}

StraightLineProgram matrix_to_naive_slp(const BitMatrix& M) {
  StraightLineProgram p;
  std::vector<uint32_t> in;
  for (size_t j = 0; j < M.cols(); ++j) in.push_back(p.new_slot(slot_name("x", j)));
  p.inputs = in;
  std::vector<std::string> names;
  for (size_t i = 0; i < M.rows(); ++i) names.push_back(slot_name("y", i));
  uint64_t tc = 0;
  auto outs = append_matrix(p, M, in, names, "t", tc, false);
  for (size_t i = 0; i < outs.size(); ++i) p.outputs.emplace_back(names[i], outs[i]);
  return p;
}

StraightLineProgram cse_optimize(const BitMatrix& M) {
  StraightLineProgram p;
  std::vector<uint32_t> in;
  for (size_t j = 0; j < M.cols(); ++j) in.push_back(p.new_slot(slot_name("x", j)));
  p.inputs = in;
  std::vector<std::string> names;
  for (size_t i = 0; i < M.rows(); ++i) names.push_back(slot_name("y", i));
  uint64_t tc = 0;
  auto outs = append_matrix(p, M, in, names, "t", tc, true);
  for (size_t i = 0; i < outs.size(); ++i) p.outputs.emplace_back(names[i], outs[i]);
  return p;
}

PlanProgram plan_to_slp(const CfftPlan& plan, const SlpNames& names, bool optimize) {
  PlanProgram pp;
  pp.n = plan.n();
  pp.in_index = plan.in_index;
  pp.out_index = plan.out_index;
  StraightLineProgram& p = pp.slp;
  std::vector<uint32_t> in;
  for (uint32_t i : plan.in_index) in.push_back(p.new_slot(slot_name(names.input, i)));
  p.inputs = in;

  uint64_t tc = 0;
  std::vector<std::string> pre_names, prod_names, out_names;
  for (size_t r = 0; r < plan.slots(); ++r) {
    pre_names.push_back(slot_name(names.pre, r));
    prod_names.push_back(slot_name(names.product, r));
  }
  for (uint32_t j : plan.out_index) out_names.push_back(slot_name(names.output, j));

  const OpTally before = p.counts();
  auto pre = append_matrix(p, plan.pre, in, pre_names, names.temp, tc, optimize);
  pp.pre_counts = p.counts();
  std::vector<uint32_t> prod;
  for (size_t r = 0; r < plan.slots(); ++r) {
    if (plan.c[r].is_zero()) fail(ErrorCode::InvalidArgument, "zero constant in plan");
    prod.push_back(plan.c[r].is_one() ? p.copy(pre[r], prod_names[r]) : p.mul_const(pre[r], plan.c[r], prod_names[r]));
  }
  const OpTally mid = p.counts();
  auto outs = append_matrix(p, plan.post, prod, out_names, names.temp, tc, optimize);
  pp.post_counts = p.counts();
  pp.post_counts.add -= mid.add;
  pp.pre_counts.add -= before.add;
  pp.pre_counts.mult = 0;
  pp.post_counts.mult = 0;
  for (size_t i = 0; i < outs.size(); ++i) p.outputs.emplace_back(out_names[i], outs[i]);
  return pp;
}

std::vector<FieldElement> run_plan_program(const PlanProgram& pp, const std::vector<FieldElement>& f,
                                           const GaloisField& field) {
  if (f.size() != pp.n) fail(ErrorCode::ShapeMismatch, "program input must have length n");
  std::vector<FieldElement> x(pp.in_index.size());
  for (size_t q = 0; q < x.size(); ++q) x[q] = f[pp.in_index[q]];
  auto y = slp_eval(pp.slp, x, field);
  std::vector<FieldElement> out(pp.n);
  for (size_t r = 0; r < y.size(); ++r) out[pp.out_index[r]] = y[r];
  return out;
}

}  // namespace cfft
