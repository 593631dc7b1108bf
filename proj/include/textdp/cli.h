//
// Copyright 2026 The TextDP Authors.
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
//

#ifndef TEXTDP_CLI_H_
#define TEXTDP_CLI_H_

#include <ostream>

#include "absl/strings/string_view.h"

namespace textdp {

inline constexpr absl::string_view kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,
  kExitUsageError = 2,
};

// Entry point of the `textdp` tool. Subcommands: build-map, score, sanitize,
// sweep, audit. Never consults the environment.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace textdp

#endif  // TEXTDP_CLI_H_
