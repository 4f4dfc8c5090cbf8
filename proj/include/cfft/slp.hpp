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

#include "cfft/bilinear.hpp"
#include "cfft/bitmatrix.hpp"
#include "cfft/galois.hpp"

namespace cfft {

enum class OpKind { Add, MulConst, Copy, Zero };

struct Instr {
  OpKind op = OpKind::Copy;
  uint32_t dst = 0;
  uint32_t a = 0;
  uint32_t b = 0;
  FieldElement c;
};

struct StraightLineProgram {
  // Slot names; an empty name marks an anonymous accumulator inside a multi-operand sum.
  std::vector<std::string> slot_names;
  std::vector<uint32_t> inputs;
  std::vector<Instr> instrs;
  std::vector<std::pair<std::string, uint32_t>> outputs;
  // Pairs extracted by common-subexpression elimination, when applicable.
  uint64_t extractions = 0;

  uint32_t new_slot(const std::string& name);
  uint32_t add(uint32_t a, uint32_t b, const std::string& name);
  uint32_t mul_const(uint32_t src, FieldElement c, const std::string& name);
  uint32_t copy(uint32_t src, const std::string& name);
  uint32_t zero(const std::string& name);

  OpTally counts() const;
  std::vector<std::string> output_names() const;
};

// Single-assignment and def-before-use check; throws UnboundSlot / RedefinitionError.
void validate(const StraightLineProgram& p);

// Executes in order; result follows p.outputs.
std::vector<FieldElement> slp_eval(const StraightLineProgram& p, const std::vector<FieldElement>& x,
                                   const GaloisField& f);

struct CostReport {
  uint64_t n_mult = 0;
  uint64_t n_add = 0;
  uint64_t n_div = 0;
  uint64_t total = 0;
};

CostReport make_cost(int m, uint64_t mult, uint64_t add, uint64_t div);
CostReport make_cost(int m, const OpTally& t);
CostReport cost_report(const StraightLineProgram& p, int m, uint64_t n_div);

// Row-by-row accumulation over inputs x_{j}, outputs y_{i}.
StraightLineProgram matrix_to_naive_slp(const BitMatrix& M);
// Greedy pair extraction: most frequent column pair first, ties to the smallest pair.
StraightLineProgram cse_optimize(const BitMatrix& M);

struct SlpNames {
  std::string input = "x";
  std::string pre = "p";
  std::string product = "g";
  std::string output = "y";
  std::string temp = "t";
};

struct PlanProgram {
  StraightLineProgram slp;
  // Natural index of each program input / output, in order.
  std::vector<uint32_t> in_index;
  std::vector<uint32_t> out_index;
  uint32_t n = 0;
  OpTally pre_counts;
  OpTally post_counts;
};

// CSE'd pre-additions, constant layer, CSE'd post-additions.
PlanProgram plan_to_slp(const CfftPlan& plan, const SlpNames& names = {}, bool optimize = true);
// Natural-order input of length n; natural-order output of length n with zeros outside out_index.
std::vector<FieldElement> run_plan_program(const PlanProgram& pp, const std::vector<FieldElement>& f,
                                           const GaloisField& field);

struct ParseOptions {
  // Operands with this prefix that are never assigned become inputs.
  std::string input_prefix = "x";
  // Assignments to slots with one of these prefixes are outputs; they may be reassigned.
  std::vector<std::string> output_prefixes = {"y"};
  // Needed only for `SLOT = OPERAND * alpha^{e}` lines.
  FieldSpec field;
};

struct ParseWarning {
  size_t line = 0;
  std::string message;
};

struct ParsedProgram {
  StraightLineProgram slp;
  std::vector<ParseWarning> warnings;
  // Output names assigned more than once.
  std::vector<std::string> redefined;
};

// Grammar: `SLOT = OPERAND (+ OPERAND)*`, `#` comments, blank lines ignored.
ParsedProgram parse_slp_text(const std::string& src, const ParseOptions& opts = {});
// Canonical slot token "t_{12}" for "t_12" or "t_{12}".
std::string canonical_slot(const std::string& token);
std::string slot_name(const std::string& prefix, uint64_t index);

// One line per named assignment; anonymous accumulators are folded into multi-operand sums.
// Constant products are written as `* alpha^{e}` and need the field.
std::string emit_slp_text(const StraightLineProgram& p, const GaloisField* field = nullptr);

}  // namespace cfft
