// Copyright 2026 The prbg Authors
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


// Subcommand front end. Exit codes: 0 success, 1 property violation (a
// witness is written), 2 usage or input error, 3 internal error.

#ifndef PRBG_TOOLS_CLI_HPP
#define PRBG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace prbg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// `args` excludes the program name. Results go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prbg::cli

#endif  // PRBG_TOOLS_CLI_HPP
