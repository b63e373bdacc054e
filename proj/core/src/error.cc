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

#include "qvss/error.h"

namespace qvss {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSize: return "size error";
    case ErrorKind::kIndex: return "index error";
    case ErrorKind::kArgument: return "argument error";
    case ErrorKind::kStateCorruption: return "state corruption";
    case ErrorKind::kFormat: return "format error";
    case ErrorKind::kIntegrity: return "integrity error";
    case ErrorKind::kIncompleteShares: return "incomplete shares";
  }
  return "error";
}

void Throw(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(ErrorKindName(kind)) + ": " + message);
}

}  // namespace qvss
