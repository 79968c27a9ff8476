// Copyright 2026 The gcec Authors
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

#include "gcec/error.hpp"

namespace gcec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::UnknownIrrepIndex: return "UnknownIrrepIndex";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidKraus: return "InvalidKraus";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EmptyManifold: return "EmptyManifold";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gcec
