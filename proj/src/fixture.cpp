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

#include "cfft/fixture.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cfft/error.hpp"

namespace cfft {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) fail(ErrorCode::NotFound, "cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Index of a slot token "x_{12}" and its prefix.
std::pair<std::string, uint32_t> split_slot(const std::string& name) {
  const auto us = name.rfind('_');
  if (us == std::string::npos) fail(ErrorCode::ParseError, "slot without index: " + name);
  std::string digits;
  for (size_t i = us + 1; i < name.size(); ++i)
    if (name[i] >= '0' && name[i] <= '9') digits += name[i];
  if (digits.empty()) fail(ErrorCode::ParseError, "slot without index: " + name);
  return {name.substr(0, us), static_cast<uint32_t>(std::stoul(digits))};
}

uint32_t parse_hex(const std::string& s) { return static_cast<uint32_t>(std::stoul(s, nullptr, 0)); }

}  // namespace

std::string default_fixture_path() { return std::string(CFFT_SOURCE_DIR) + "/fixtures/syndromes_255_223.json"; }

FixtureSpec load_fixture(const std::string& json_path) {
  const std::filesystem::path path(json_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, json_path + ": " + e.what());
  }
  FixtureSpec s;
  try {
    s.name = j.value("name", std::string("fixture"));
    const auto& fj = j.at("field");
    const int m = fj.at("m").get<int>();
    s.field = fj.contains("prim_poly") ? make_field(m, parse_hex(fj.at("prim_poly").get<std::string>()))
                                       : default_field(m);
    s.syndromes = j.at("syndromes").get<uint32_t>();
    s.input_prefix = j.at("input_prefix").get<std::string>();
    s.input_order = j.at("input_order").get<std::vector<uint32_t>>();
    const auto dir = path.parent_path();
    s.pre_text = read_file(dir / j.at("pre").get<std::string>());
    s.pre_outputs = j.at("pre_outputs").get<std::string>();
    const auto& mj = j.at("multiply");
    s.mul_src_prefix = mj.at("src_prefix").get<std::string>();
    s.mul_dst_prefix = mj.at("dst_prefix").get<std::string>();
    for (const auto& [k, v] : mj.at("alpha_exponents").items())
      s.alpha_exponents[split_slot(k).second] = v.get<uint32_t>();
    s.post_text = read_file(dir / j.at("post").get<std::string>());
    s.post_outputs = j.at("post_outputs").get<std::string>();
    const auto& ej = j.at("expected");
    s.expected_pre_additions = ej.at("pre_additions").get<uint64_t>();
    s.expected_post_additions = ej.at("post_additions").get<uint64_t>();
    s.expected_multiplications = ej.at("multiplications").get<uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, json_path + ": " + e.what());
  }
  return s;
}

FixtureProgram compile_fixture(const FixtureSpec& spec) {
  FixtureProgram fp;
  fp.field = spec.field;
  ParseOptions pre_opts;
  pre_opts.input_prefix = spec.input_prefix;
  pre_opts.output_prefixes = {spec.pre_outputs};
  pre_opts.field = spec.field;
  fp.pre = parse_slp_text(spec.pre_text, pre_opts);
  ParseOptions post_opts;
  post_opts.input_prefix = spec.mul_dst_prefix;
  post_opts.output_prefixes = {spec.post_outputs};
  post_opts.field = spec.field;
  fp.post = parse_slp_text(spec.post_text, post_opts);

  for (uint32_t s : fp.pre.slp.inputs) {
    const uint32_t q = split_slot(fp.pre.slp.slot_names[s]).second;
    if (q >= spec.input_order.size()) fail(ErrorCode::IndexOutOfRange, "input " + fp.pre.slp.slot_names[s]);
    fp.input_index.push_back(spec.input_order[q]);
  }
  std::map<uint32_t, uint32_t> pre_pos;
  for (size_t i = 0; i < fp.pre.slp.outputs.size(); ++i)
    pre_pos[split_slot(fp.pre.slp.outputs[i].first).second] = static_cast<uint32_t>(i);
  for (uint32_t s : fp.post.slp.inputs) {
    const uint32_t k = split_slot(fp.post.slp.slot_names[s]).second;
    auto pit = pre_pos.find(k);
    auto eit = spec.alpha_exponents.find(k);
    if (pit == pre_pos.end() || eit == spec.alpha_exponents.end())
      fail(ErrorCode::UnboundSlot, "no source for " + fp.post.slp.slot_names[s]);
    fp.mul_src.push_back(pit->second);
    fp.mul_const.push_back(spec.field->exp(eit->second));
  }
  for (const auto& [name, slot] : fp.post.slp.outputs) fp.output_index.push_back(split_slot(name).second);
  for (const auto& name : fp.post.redefined) fp.redefined.push_back(split_slot(name).second);
  std::sort(fp.redefined.begin(), fp.redefined.end());
  fp.warnings = fp.pre.warnings;
  fp.warnings.insert(fp.warnings.end(), fp.post.warnings.begin(), fp.post.warnings.end());

  fp.pre_additions = fp.pre.slp.counts().add;
  fp.post_additions = fp.post.slp.counts().add;
  for (const auto& [k, e] : spec.alpha_exponents)
    if (spec.field->exp(e) != spec.field->one()) ++fp.multiplications;
  return fp;
}

void check_fixture_counts(const FixtureProgram& prog, const FixtureSpec& spec) {
  auto cmp = [](const char* what, uint64_t got, uint64_t want) {
    if (got != want)
      fail(ErrorCode::CountMismatch,
           std::string(what) + ": counted " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  cmp("pre-additions", prog.pre_additions, spec.expected_pre_additions);
  cmp("post-additions", prog.post_additions, spec.expected_post_additions);
  cmp("multiplications", prog.multiplications, spec.expected_multiplications);
}

std::map<uint32_t, FieldElement> run_fixture(const FixtureProgram& prog, const std::vector<FieldElement>& r) {
  const GaloisField& f = *prog.field;
  if (r.size() != f.n()) fail(ErrorCode::LengthMismatch, "received vector must have length n");
  std::vector<FieldElement> x(prog.input_index.size());
  for (size_t q = 0; q < x.size(); ++q) x[q] = r[prog.input_index[q]];
  const auto p = slp_eval(prog.pre.slp, x, f);
  std::vector<FieldElement> g(prog.mul_src.size());
  for (size_t k = 0; k < g.size(); ++k) g[k] = f.mul(prog.mul_const[k], p[prog.mul_src[k]]);
  const auto s = slp_eval(prog.post.slp, g, f);
  std::map<uint32_t, FieldElement> out;
  for (size_t i = 0; i < s.size(); ++i) out[prog.output_index[i]] = s[i];
  return out;
}

FixtureVerdict verify_fixture(const FixtureSpec& spec, uint64_t trials, uint64_t seed) {
  const FixtureProgram prog = compile_fixture(spec);
  check_fixture_counts(prog, spec);
  const GaloisField& f = *spec.field;

  FixtureVerdict v;
  v.name = spec.name;
  v.pre_additions = prog.pre_additions;
  v.post_additions = prog.post_additions;
  v.multiplications = prog.multiplications;
  v.trials = trials;
  for (uint32_t i = 0; i < spec.syndromes; ++i) {
    if (std::find(prog.output_index.begin(), prog.output_index.end(), i) == prog.output_index.end()) {
      v.missing.push_back(i);
      continue;
    }
    IndexVerdict iv;
    iv.index = i;
    iv.ambiguous = std::binary_search(prog.redefined.begin(), prog.redefined.end(), i);
    v.indices.push_back(iv);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> sym(0, f.n());
  std::vector<FieldElement> r(f.n());
  for (uint64_t t = 0; t < trials; ++t) {
    for (auto& e : r) e = FieldElement(sym(rng));
    const auto got = run_fixture(prog, r);
    for (auto& iv : v.indices) {
      const FieldElement want = horner_eval(r, f.exp(iv.index), f).value;
      if (got.at(iv.index) != want) ++iv.mismatches;
    }
  }
  v.passed = v.missing.empty();
  for (const auto& iv : v.indices)
    if (!iv.ambiguous && iv.mismatches) v.passed = false;
  return v;
}

}  // namespace cfft
