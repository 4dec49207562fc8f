// Copyright 2026 The quasik Authors
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

#pragma once

// The quasik command line front end, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "quasik/io.hpp"

namespace quasik::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

struct Report {
  std::string command;
  std::string input;
  std::string status;  // "pass", "fail" or "error"
  Json payload = Json::object();
  std::string human_text;

  Json to_json() const;
};

/// Runs one invocation; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quasik::cli
