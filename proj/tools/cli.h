// Copyright 2026 The gf2cube Authors
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

#ifndef GF2CUBE_TOOLS_CLI_H_
#define GF2CUBE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2cube::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// Runs one gf2cube invocation. `args` excludes the program name. Returns
// 0 on success, 1 on usage or input errors (message on `err`), 2 when a
// verification found a mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf2cube::cli

#endif  // GF2CUBE_TOOLS_CLI_H_
