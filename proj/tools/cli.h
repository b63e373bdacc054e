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

#ifndef QVSS_TOOLS_CLI_H_
#define QVSS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qvss::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // command ran but its check failed (demo mismatch, ...)
  kExitUsage = 2,
  kExitFormat = 3,
  kExitIncomplete = 4,
};

/// Entry point shared by the qvss binary and the tests. args[0] is the
/// program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace qvss::cli

#endif  // QVSS_TOOLS_CLI_H_
