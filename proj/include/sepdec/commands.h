// Copyright 2026 The sepdec Authors
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

#ifndef SEPDEC_COMMANDS_H
#define SEPDEC_COMMANDS_H

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sepdec/matcore.h"

namespace sepdec {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRejected = 2;

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string &name);

/// Defaults, then SEPDEC_TOL_<FIELD> environment overrides. Throws
/// InvalidArgument on unparseable or out-of-range values.
Tolerances tolerances_from_env(const EnvLookup &env);

/// Entry point of the sepdec command line tool. args excludes the program
/// name. Returns the process exit code.
int run_cli(
    const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const EnvLookup &env = process_env);

}  // namespace sepdec

#endif
