// Copyright 2026 The kended Authors
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

#ifndef KENDED_CLI_HPP_
#define KENDED_CLI_HPP_

#include <iosfwd>

namespace kended {

// Exit codes.
inline constexpr int kExitClean = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `kended` binary. Reports go to `out` (or --out),
// diagnostics to `err`; `--graph -` reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kended

#endif  // KENDED_CLI_HPP_
