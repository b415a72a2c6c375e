// Copyright 2026 The Caudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAUDIT_TESTS_SPAWN_HPP_
#define CAUDIT_TESTS_SPAWN_HPP_

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace caudit::test {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI binary with the given argument string, capturing stdout.
inline RunResult run_tool(const std::string& args) {
  const std::string command = std::string(CAUDIT_TOOL_PATH) + " " + args +
                              " 2>/dev/null";
  RunResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t n;
  while ((n = ::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string corpus(const std::string& file) {
  return std::string(CAUDIT_CORPUS_DIR) + "/" + file;
}

}  // namespace caudit::test

#endif  // CAUDIT_TESTS_SPAWN_HPP_
