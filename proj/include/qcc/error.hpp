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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcc {

enum class ErrorCode {
  kInvalidArgument,
  kTooLarge,
  kDimensionMismatch,
  kNonHermitian,
  kInvalidIntegrals,
  kIndexOutOfRange,
  kNotSymmetric,
  kEmptyActiveSpace,
  kInconsistentSpace,
  kBadTarget,
  kZeroOverlap,
  kTooManyQubits,
  kNotAntiHermitian,
  kPartitionIncomplete,
  kUnsupportedGate,
  kDegenerateSubspace,
  kSignInconsistent,
  kInvalidProbability,
  kAllShotsRejected,
  kParseError,
  kSymmetryViolation,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure
/// class so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// FCIDUMP and other text-format failures carry the offending line (1-based,
/// 0 when the problem is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace qcc
