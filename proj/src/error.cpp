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

#include "cfft/error.hpp"

namespace cfft {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::UnsupportedLength: return "UnsupportedLength";
    case ErrorCode::KernelMissing: return "KernelMissing";
    case ErrorCode::BasisExpansionFailed: return "BasisExpansionFailed";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RedefinitionError: return "RedefinitionError";
    case ErrorCode::UnboundSlot: return "UnboundSlot";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::ForneyZeroDerivative: return "ForneyZeroDerivative";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cfft
