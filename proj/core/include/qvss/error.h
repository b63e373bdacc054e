// Copyright 2026 The QVSS Authors
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

#ifndef QVSS_ERROR_H_
#define QVSS_ERROR_H_

#include <stdexcept>
#include <string>

namespace qvss {

enum class ErrorKind {
  kSize,             // register or image dimension out of range
  kIndex,            // qubit index out of range
  kArgument,         // malformed argument (duplicates, length mismatch, ...)
  kStateCorruption,  // statevector lost normalization
  kFormat,           // unreadable or invalid file / byte stream
  kIntegrity,        // shares and session do not belong together
  kIncompleteShares, // fewer than n distinct participants
};

const char* ErrorKindName(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Throw(ErrorKind kind, const std::string& message);

}  // namespace qvss

#endif  // QVSS_ERROR_H_
