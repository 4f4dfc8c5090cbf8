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

#include "cfft/galois.hpp"
#include "cfft/reduction.hpp"
#include "cfft/slp.hpp"

namespace cfft {

// Narrow-sense-at-zero RS code: generator roots alpha^0 .. alpha^{n-k-1}.
struct CodeSpec {
  FieldSpec field;
  uint32_t n = 0;
  uint32_t k = 0;

  uint32_t redundancy() const { return n - k; }
  uint32_t t() const { return (n - k) / 2; }
};

// Throws LengthMismatch unless n = 2^m - 1, 0 < k < n and n - k even.
CodeSpec make_code(const FieldSpec& field, uint32_t n, uint32_t k);

using Poly = std::vector<FieldElement>;

Poly poly_mul(const Poly& a, const Poly& b, const GaloisField& f);
// Degree of a, -1 for the zero polynomial.
int poly_degree(const Poly& a);
Poly formal_derivative(const Poly& a);

struct EvenOddSplit {
  Poly even;  // a(x) = even(x^2) + x odd(x^2)
  Poly odd;
};
EvenOddSplit split_even_odd(const Poly& a);
Poly merge_even_odd(const EvenOddSplit& s);

Poly generator_poly(const CodeSpec& code);
// Systematic: parity in positions 0..n-k-1, message in the top k positions.
std::vector<FieldElement> encode(const std::vector<FieldElement>& msg, const CodeSpec& code);

struct ErrataState {
  Poly tau;  // tau(0) = 1
  Poly A;    // [S tau] mod x^{2t}
  std::vector<uint32_t> erasures;
  OpTally tally;
};

// Inversionless Berlekamp-Massey seeded with the erasure locator.
// Throws DecodeFailure when the locator is inconsistent with the syndromes.
ErrataState bma_inversionless(const std::vector<FieldElement>& S, const std::vector<uint32_t>& erasures,
                              const CodeSpec& code);
// A = [S tau] mod x^{2t}, with its operation count added to the state's tally.
void compute_evaluator(ErrataState& st, const std::vector<FieldElement>& S, const CodeSpec& code);

// S_0..S_{2t-1} extended to S_0..S_{n-1} by the tau recurrence.
std::vector<FieldElement> recursive_extend(const std::vector<FieldElement>& S, const Poly& tau,
                                           const CodeSpec& code, OpTally* tally = nullptr);

struct Erratum {
  uint32_t position = 0;
  FieldElement value;
  friend bool operator==(const Erratum&, const Erratum&) = default;
};

enum class ChienOption { One = 1, Two = 2 };

struct StageCost {
  std::string stage;
  CostReport cost;
};

// Plans and compiled programs shared by both decoding pipelines of one code.
class DecoderPlans {
 public:
  explicit DecoderPlans(const CodeSpec& code, bool optimize = true);

  const CodeSpec& code() const { return code_; }

  // Partial SCFFT, spectral support {0..2t-1}.
  const ReducedPlan& syndrome_plan() const { return syn_; }
  const PlanProgram& syndrome_program() const { return syn_prog_; }
  // Dual-partial DCFFTs over temporal supports.
  const PlanProgram& a_program() const { return a_prog_; }
  const PlanProgram& tau_even_program() const { return even_prog_; }
  const PlanProgram& odd_program(ChienOption opt) const {
    return opt == ChienOption::One ? odd1_prog_ : odd2_prog_;
  }
  const ReducedPlan& a_plan() const { return a_; }
  const ReducedPlan& tau_even_plan() const { return even_; }
  const ReducedPlan& odd_plan(ChienOption opt) const { return opt == ChienOption::One ? odd1_ : odd2_; }
  // Full SCFFT for the transform-domain inverse.
  const CfftPlan& full_plan() const { return full_; }
  const PlanProgram& full_program() const { return full_prog_; }

  std::vector<FieldElement> syndromes(const std::vector<FieldElement>& r) const;

  // Static operation counts of each table row.
  OpTally syndrome_cost() const;
  OpTally a_cost() const;
  OpTally tau_even_cost() const;
  OpTally odd_cost(ChienOption opt) const;
  OpTally misc_cost() const;
  OpTally full_cost() const;

 private:
  CodeSpec code_;
  ReducedPlan syn_, a_, even_, odd1_, odd2_;
  CfftPlan full_;
  PlanProgram syn_prog_, a_prog_, even_prog_, odd1_prog_, odd2_prog_, full_prog_;
};

std::vector<FieldElement> syndromes_horner(const std::vector<FieldElement>& r, const CodeSpec& code);

struct ChienForneyResult {
  std::vector<Erratum> errata;  // sorted by position, zero values dropped
  std::vector<uint32_t> roots;  // positions j with tau(alpha^{-j}) = 0
  // Evaluations at x = alpha^i, i = 0..n-1.
  std::vector<FieldElement> A_values;
  std::vector<FieldElement> tau_values;
  std::vector<FieldElement> odd_values;  // x tau_o(x^2) = x tau'(x)
};

// Throws ForneyZeroDerivative or CountMismatch.
ChienForneyResult chien_forney_combined(const ErrataState& st, const DecoderPlans& plans, ChienOption opt);

ChienOption select_option(const CostReport& option1, const CostReport& option2);

struct DecodeResult {
  bool success = false;
  std::string failure;
  std::vector<FieldElement> codeword;
  std::vector<Erratum> errata;
  std::vector<StageCost> stages;
  CostReport total;
};

DecodeResult decode_time_domain(const std::vector<FieldElement>& r, const std::vector<uint32_t>& erasures,
                                const DecoderPlans& plans, ChienOption opt);
DecodeResult decode_transform_domain(const std::vector<FieldElement>& r, const std::vector<uint32_t>& erasures,
                                     const DecoderPlans& plans);

}  // namespace cfft
