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

#include "cfft/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "cfft/error.hpp"

namespace cfft {

namespace {

Json exponent_or_zero(FieldElement x, const GaloisField& f) {
  if (x.is_zero()) return nullptr;
  return f.log(x);
}

Json matrix_summary(const BitMatrix& M) {
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"ones", M.popcount()}, {"naive_additions", M.naive_additions()}};
}

}  // namespace

Json to_json(const CosetStructure& cs) {
  Json arr = Json::array();
  for (const auto& c : cs.cosets)
    arr.push_back(Json{{"leader", c.leader()}, {"elements", c.rotated()}, {"rotation", c.rotation}});
  return Json{{"n", cs.n}, {"cosets", arr}};
}

Json to_json(const OpTally& t) { return Json{{"mult", t.mult}, {"add", t.add}, {"div", t.div}}; }

Json to_json(const CostReport& c) {
  return Json{{"mult", c.n_mult}, {"add", c.n_add}, {"div", c.n_div}, {"total", c.total}};
}

Json to_json(const CfftPlan& plan) {
  const GaloisField& f = *plan.field;
  Json c = Json::array();
  for (auto x : plan.c) c.push_back(exponent_or_zero(x, f));
  return Json{{"variant", to_string(plan.variant)},
              {"field", {{"m", f.m()}, {"prim_poly", f.poly_hex()}}},
              {"n", plan.n()},
              {"cosets", to_json(plan.cosets)},
              {"in_index", plan.in_index},
              {"out_index", plan.out_index},
              {"slots", plan.slots()},
              {"mult_count", plan_mult_count(plan)},
              {"c_exponents", c},
              {"pre", matrix_summary(plan.pre)},
              {"post", matrix_summary(plan.post)},
              {"additive_bound", additive_bound(plan)}};
}

Json to_json(const ReducedPlan& rp) {
  Json j = to_json(rp.base);
  j["support"] = Json{{"kind", rp.support.kind == SupportKind::Spectral ? "spectral" : "temporal"},
                      {"keep", rp.support.keep}};
  j["rotations"] = rp.rotations;
  j["kept_slots"] = rp.kept_slots;
  j["removed_slots"] = rp.removed_slots;
  j["full_mult_count"] = rp.full_mult_count;
  return j;
}

Json to_json(const PlanProgram& pp, int m) {
  const OpTally t = pp.slp.counts();
  return Json{{"instructions", pp.slp.instrs.size()},
              {"pre_additions", pp.pre_counts.add},
              {"post_additions", pp.post_counts.add},
              {"extractions", pp.slp.extractions},
              {"cost", to_json(make_cost(m, t))}};
}

Json to_json(const TableReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"key", r.key}, {"label", r.label}, {"cost", to_json(r.cost)}};
    if (r.target) {
      const auto d = delta(r);
      row["target"] = Json{{"table", r.target->table},
                           {"column", r.target->column},
                           {"mult", r.target->mult},
                           {"add", r.target->add},
                           {"div", r.target->div},
                           {"total", r.target->total}};
      row["delta"] = Json{{"mult", d.mult}, {"add", d.add}, {"div", d.div}, {"total", d.total}};
    }
    rows.push_back(row);
  }
  return Json{{"title", rep.title},
              {"field", {{"m", rep.m}, {"prim_poly", rep.prim_poly}}},
              {"code", {{"n", rep.n}, {"k", rep.k}}},
              {"kernels", rep.kernels},
              {"cse_extractions", rep.cse_extractions},
              {"rows", rows},
              {"notes", rep.notes}};
}

Json to_json(const DecodeResult& res) {
  Json errata = Json::array();
  for (const auto& e : res.errata) errata.push_back(Json{{"position", e.position}, {"value", e.value.bits}});
  Json stages = Json::array();
  for (const auto& s : res.stages) stages.push_back(Json{{"stage", s.stage}, {"cost", to_json(s.cost)}});
  std::vector<uint32_t> cw;
  for (auto x : res.codeword) cw.push_back(x.bits);
  Json j{{"success", res.success},
         {"codeword", cw},
         {"errata", errata},
         {"tallies", to_json(res.total)},
         {"stage_costs", stages}};
  if (!res.success) j["failure"] = res.failure;
  return j;
}

Json to_json(const FixtureVerdict& v) {
  Json idx = Json::array();
  for (const auto& i : v.indices)
    idx.push_back(Json{{"index", i.index}, {"ambiguous", i.ambiguous}, {"mismatches", i.mismatches}});
  return Json{{"name", v.name},
              {"pre_additions", v.pre_additions},
              {"post_additions", v.post_additions},
              {"total_additions", v.pre_additions + v.post_additions},
              {"multiplications", v.multiplications},
              {"trials", v.trials},
              {"indices", idx},
              {"missing", v.missing},
              {"passed", v.passed}};
}

std::vector<FieldElement> parse_hex_symbols(const std::string& text, const GaloisField& f) {
  std::vector<FieldElement> out;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos, 16);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) fail(ErrorCode::ParseError, "bad hex symbol '" + tok + "'");
    if (v > f.n()) fail(ErrorCode::ParseError, "symbol '" + tok + "' outside GF(2^" + std::to_string(f.m()) + ")");
    out.emplace_back(static_cast<uint32_t>(v));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\n' || ch == '\t' || ch == '\r') flush();
    else tok += ch;
  }
  flush();
  return out;
}

std::string format_hex_symbols(const std::vector<FieldElement>& v, const GaloisField& f) {
  const int width = (f.m() + 3) / 4;
  std::string s;
  char buf[16];
  for (size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%0*x", width, v[i].bits);
    if (i) s += ' ';
    s += buf;
  }
  return s;
}

}  // namespace cfft
