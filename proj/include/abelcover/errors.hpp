// Copyright 2026 The abelcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABELCOVER_ERRORS_HPP_
#define ABELCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace abelcover {

enum class ErrorKind {
  kShape,
  kSize,
  kParity,
  kNoSolution,
  kUnsupportedKind,
  kUnsupported,
  kIncompleteInput,
  kInconsistency,
  kInternalConsistency,
  kClassificationGap,
  kRegenerationFailure,
  kSurfaceMismatch,
  kMissingEntry,
  kUnknownId,
  kInput,
};

inline const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kSize: return "size";
    case ErrorKind::kParity: return "parity";
    case ErrorKind::kNoSolution: return "no-solution";
    case ErrorKind::kUnsupportedKind: return "unsupported-kind";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kIncompleteInput: return "incomplete-input";
    case ErrorKind::kInconsistency: return "inconsistency";
    case ErrorKind::kInternalConsistency: return "internal-consistency";
    case ErrorKind::kClassificationGap: return "classification-gap";
    case ErrorKind::kRegenerationFailure: return "regeneration-failure";
    case ErrorKind::kSurfaceMismatch: return "surface-mismatch";
    case ErrorKind::kMissingEntry: return "missing-entry";
    case ErrorKind::kUnknownId: return "unknown-id";
    case ErrorKind::kInput: return "input";
  }
  return "unknown";
}

// Errors caused by the document itself rather than by the mathematics it
// describes. The CLI maps these to exit status 2.
inline bool IsInputError(ErrorKind kind) {
  return kind == ErrorKind::kShape || kind == ErrorKind::kUnknownId ||
         kind == ErrorKind::kInput || kind == ErrorKind::kIncompleteInput ||
         kind == ErrorKind::kMissingEntry;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + " error: " +
                           message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace abelcover

#endif  // ABELCOVER_ERRORS_HPP_
