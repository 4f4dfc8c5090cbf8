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

#include <string>
#include <vector>

#include <json.hpp>

#include "cfft/bilinear.hpp"
#include "cfft/cyclotomic.hpp"
#include "cfft/fixture.hpp"
#include "cfft/reduction.hpp"
#include "cfft/report.hpp"
#include "cfft/rsdecode.hpp"
#include "cfft/slp.hpp"

namespace cfft {

using Json = nlohmann::json;

Json to_json(const CosetStructure& cs);
Json to_json(const OpTally& t);
Json to_json(const CostReport& c);
// Constants as alpha exponents; matrices are summarized by shape and popcount.
Json to_json(const CfftPlan& plan);
Json to_json(const ReducedPlan& rp);
Json to_json(const PlanProgram& pp, int m);
Json to_json(const TableReport& rep);
Json to_json(const DecodeResult& res);
Json to_json(const FixtureVerdict& v);

// Whitespace- or comma-separated hex symbols; each must lie in the field.
std::vector<FieldElement> parse_hex_symbols(const std::string& text, const GaloisField& f);
std::string format_hex_symbols(const std::vector<FieldElement>& v, const GaloisField& f);

}  // namespace cfft
