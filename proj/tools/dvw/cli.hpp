// Copyright 2026 The dvworkbench Authors
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

#ifndef DVW_CLI_HPP
#define DVW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dvw {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name) and returns the exit
/// status: 0 when the property holds, 1 when it is refuted, 2 on bad input
/// or a violated precondition.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dvw

#endif  // DVW_CLI_HPP
