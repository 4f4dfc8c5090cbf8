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

#include "cfft/bilinear.hpp"
#include "cfft/galois.hpp"
#include "cfft/rsdecode.hpp"
#include "cfft/slp.hpp"

namespace cfft {

// A published (mult, add, div, total) cell.
struct PublishedCell {
  std::string table;   // "I", "II", "III"
  uint32_t n = 0;
  std::string key;     // task key, e.g. "syndromes", "tau_odd_opt2"
  std::string column;  // "ours-scfft", "ours-dcfft", "horner", "reference"
  std::string label;
  uint64_t mult = 0;
  uint64_t add = 0;
  uint64_t div = 0;
  uint64_t total = 0;
};

const std::vector<PublishedCell>& published_cells();
// First published cell for (n, key, column), if any.
std::optional<PublishedCell> find_published(uint32_t n, const std::string& key,
                                            const std::string& column = "ours-dcfft");

struct ReportRow {
  std::string key;
  std::string label;
  CostReport cost;
  std::optional<PublishedCell> target;
};

struct TableReport {
  std::string title;
  int m = 0;
  std::string prim_poly;
  uint32_t n = 0;
  uint32_t k = 0;
  std::vector<uint32_t> kernels;
  uint64_t cse_extractions = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
};

// Known task keys: syndromes, forney_A, tau_even, tau_odd_opt1, tau_odd_opt2, chien, full, decode.
const std::vector<std::string>& report_task_keys();

struct ReportOptions {
  std::vector<std::string> tasks;
  Variant syndrome_variant = Variant::SCFFT;
  // 0 = pick by total cost.
  int option = 0;
};

TableReport build_report(const CodeSpec& code, const ReportOptions& opts);
// Same, with precomputed decoder plans for the chien/full/decode rows.
TableReport build_report(const DecoderPlans& plans, const ReportOptions& opts);

// Signed difference measured - published, per component.
struct CostDelta {
  int64_t mult = 0;
  int64_t add = 0;
  int64_t div = 0;
  int64_t total = 0;
};
CostDelta delta(const ReportRow& row);

// Plain-text table, one line per row.
std::string render_table(const TableReport& report);

}  // namespace cfft
