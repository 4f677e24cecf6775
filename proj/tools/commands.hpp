// Copyright 2026 The noisecut Authors
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

#ifndef NOISECUT_TOOLS_COMMANDS_HPP_
#define NOISECUT_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace noisecut::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInfeasible = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceLimit = 3;
inline constexpr int kInternalError = 4;

// Runs the `noisecut` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace noisecut::cli

#endif  // NOISECUT_TOOLS_COMMANDS_HPP_
