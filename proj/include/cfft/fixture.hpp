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
#include <map>
#include <string>
#include <vector>

#include "cfft/galois.hpp"
#include "cfft/slp.hpp"

namespace cfft {

// Syndrome network stored as two SLP texts joined by a constant-multiply layer.
struct FixtureSpec {
  std::string name;
  FieldSpec field;
  uint32_t syndromes = 0;
  std::string input_prefix;
  // input_order[q] is the natural index of input slot q.
  std::vector<uint32_t> input_order;
  std::string pre_text;
  std::string pre_outputs;
  std::string mul_src_prefix;
  std::string mul_dst_prefix;
  // Source slot index -> exponent e of alpha^e.
  std::map<uint32_t, uint32_t> alpha_exponents;
  std::string post_text;
  std::string post_outputs;
  uint64_t expected_pre_additions = 0;
  uint64_t expected_post_additions = 0;
  uint64_t expected_multiplications = 0;
};

// Reads the JSON descriptor; the SLP files it names are resolved next to it.
FixtureSpec load_fixture(const std::string& json_path);
// Default shipped fixture under the source tree.
std::string default_fixture_path();

struct FixtureProgram {
  FieldSpec field;
  ParsedProgram pre;
  ParsedProgram post;
  // Per post input g_k: pre output slot position and constant.
  std::vector<uint32_t> mul_src;
  std::vector<FieldElement> mul_const;
  // Natural index of each pre input.
  std::vector<uint32_t> input_index;
  // Output index of each post output.
  std::vector<uint32_t> output_index;
  uint64_t pre_additions = 0;
  uint64_t post_additions = 0;
  uint64_t multiplications = 0;
  std::vector<uint32_t> redefined;
  std::vector<ParseWarning> warnings;
};

FixtureProgram compile_fixture(const FixtureSpec& spec);
// Throws CountMismatch when counts differ from the expected ones.
void check_fixture_counts(const FixtureProgram& prog, const FixtureSpec& spec);
// r in natural order, length n. Result maps output index to value.
std::map<uint32_t, FieldElement> run_fixture(const FixtureProgram& prog, const std::vector<FieldElement>& r);

struct IndexVerdict {
  uint32_t index = 0;
  bool ambiguous = false;
  uint64_t mismatches = 0;
};

struct FixtureVerdict {
  std::string name;
  uint64_t pre_additions = 0;
  uint64_t post_additions = 0;
  uint64_t multiplications = 0;
  uint64_t trials = 0;
  std::vector<IndexVerdict> indices;
  std::vector<uint32_t> missing;
  // Every unambiguous index matched on every trial.
  bool passed = false;
};

// Counts are checked first (CountMismatch), then `trials` seeded vectors are compared
// against Horner syndromes.
FixtureVerdict verify_fixture(const FixtureSpec& spec, uint64_t trials, uint64_t seed);

}  // namespace cfft
