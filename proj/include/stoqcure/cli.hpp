// Copyright 2026 The stoqcure Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace stoqcure::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

/// Runs one command line (without the program name). JSON goes to out,
/// diagnostics and the --human summary go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace stoqcure::cli
