// Copyright 2026 The qdiscrim Authors
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

#pragma once

/// @file cli.hpp
/// Command-line front end. Commands read JSON files in the schemas of io.hpp
/// and print JSON (or CSV trial dumps) to the output stream.
///
/// Exit codes: 0 success, 2 domain-invalid input, 3 I/O or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace qdiscrim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitParse = 3;

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdiscrim
