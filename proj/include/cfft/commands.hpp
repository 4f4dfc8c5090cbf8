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
#include <ostream>
#include <string>
#include <vector>

#include "cfft/fixture.hpp"
#include "cfft/reduction.hpp"
#include "cfft/report.hpp"
#include "cfft/rsdecode.hpp"
#include "cfft/serialize.hpp"

namespace cfft {

struct RunConfig {
  int m = 8;
  uint32_t prim_poly = 0;  // 0 = default for m
  uint32_t n = 0;          // 0 = 2^m - 1
  uint32_t k = 0;          // 0 = default for n
  std::optional<Variant> variant;
  std::vector<std::string> tasks;
  std::string option = "auto";  // 1 | 2 | auto
  uint64_t trials = 0;
  uint64_t seed = 1;
  std::string out;
  std::string fixture;
  std::string pipeline = "both";  // time | transform | both
  std::string input;              // file of hex received vectors, one per line
  std::vector<uint32_t> erasures;
  bool overload = false;
  std::string format = "json";  // json | text
  unsigned workers = 0;         // 0 = hardware concurrency
};

// Keys: field{m, prim_poly}, code{n, k}, variant, task (string or list), option, trials, seed,
// out, fixture, pipeline, input, erasures, overload, format, workers. Throws ConfigError.
RunConfig config_from_json(const std::string& text);
FieldSpec config_field(const RunConfig& cfg);
CodeSpec config_code(const RunConfig& cfg);
int option_number(const RunConfig& cfg);

// Single-plan tasks: syndromes, chien, forney_A, tau_even, tau_odd_opt1, tau_odd_opt2.
SupportSpec task_support(const CodeSpec& code, const std::string& task);
Variant task_variant(const RunConfig& cfg, const std::string& task);

Json cmd_build(const RunConfig& cfg);
Json cmd_reduce(const RunConfig& cfg);
Json cmd_cse(const RunConfig& cfg);
TableReport cmd_report(const RunConfig& cfg);
Json cmd_decode(const RunConfig& cfg);
FixtureVerdict cmd_verify_fixture(const RunConfig& cfg);
std::string cmd_emit_slp(const RunConfig& cfg);

struct TrialOptions {
  uint64_t trials = 0;
  uint64_t seed = 1;
  // Patterns with 2 nu + mu > n - k when set.
  bool overload = false;
  std::string pipeline = "both";
  ChienOption option = ChienOption::One;
  unsigned workers = 1;
};

struct TrialSummary {
  uint64_t trials = 0;
  uint64_t success = 0;
  uint64_t failure_flagged = 0;
  uint64_t miscorrections = 0;
  // Time and transform pipelines returned different results.
  uint64_t disagreements = 0;
};

TrialSummary run_decode_trials(const DecoderPlans& plans, const TrialOptions& opts);

// Full command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfft
