// Copyright 2026 The clgkit Authors.
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


#ifndef CLG_CLI_H_
#define CLG_CLI_H_

#include <string>
#include <vector>

namespace clg {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitValidation = 3,
};

// Runs the `clg` tool; argv[0] is the program name.
int Run(int argc, const char *const *argv);
int Run(const std::vector<std::string> &args);

}  // namespace clg

#endif  // CLG_CLI_H_
