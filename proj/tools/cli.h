// Copyright 2026 The fairwe Authors.
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

#ifndef FAIRWE_TOOLS_CLI_H_
#define FAIRWE_TOOLS_CLI_H_

#include <iosfwd>

namespace fairwe::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kIoError = 2;
inline constexpr int kExampleMismatch = 3;

// Entry point of the `fairwe` tool. Human-readable summaries go to out,
// diagnostics to err; machine-readable results only to --out files.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace fairwe::cli

#endif  // FAIRWE_TOOLS_CLI_H_
