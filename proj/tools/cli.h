// Copyright 2026 The trss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRSS_TOOLS_CLI_H_
#define TRSS_TOOLS_CLI_H_

#include <ostream>

#include "trss/errors.h"

namespace trss::cli {

// Process exit statuses of the `trss` tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O and anything unclassified
  kUsage = 2,    // bad flags or parameters violating a scheme constraint
  kParse = 3,    // corrupt archive file
  kInsufficientShares = 4,
  kTimeMismatch = 5,
  kDuplicateShare = 6,
  kMissingPublicParams = 7,
  kEnumerationTooLarge = 8,
  kVerifyFailed = 9,
  kCapacityExceeded = 10,
};

int ExitCodeFor(ErrorCode code);

// Runs the tool with argv-style arguments; output goes to `out` / `err`.
// Reads the TRSS_SEED environment variable when --seed is absent.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trss::cli

#endif  // TRSS_TOOLS_CLI_H_
