// Copyright 2026 The qcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcc/error.hpp"

namespace qcc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kInvalidIntegrals: return "InvalidIntegrals";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kEmptyActiveSpace: return "EmptyActiveSpace";
    case ErrorCode::kInconsistentSpace: return "InconsistentSpace";
    case ErrorCode::kBadTarget: return "BadTarget";
    case ErrorCode::kZeroOverlap: return "ZeroOverlap";
    case ErrorCode::kTooManyQubits: return "TooManyQubits";
    case ErrorCode::kNotAntiHermitian: return "NotAntiHermitian";
    case ErrorCode::kPartitionIncomplete: return "PartitionIncomplete";
    case ErrorCode::kUnsupportedGate: return "UnsupportedGate";
    case ErrorCode::kDegenerateSubspace: return "DegenerateSubspace";
    case ErrorCode::kSignInconsistent: return "SignInconsistent";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kAllShotsRejected: return "AllShotsRejected";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSymmetryViolation: return "SymmetryViolation";
  }
  return "Unknown";
}

}  // namespace qcc
