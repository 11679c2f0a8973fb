/*
   Copyright 2026 The genjac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "genjac/jacobi.hpp"

namespace genjac {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 when a check fails, 2 on argument errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One "alpha beta" pair per line; blank lines and '#' comments are skipped.
std::vector<JacobiParams> parse_grid(const std::string& text);

}  // namespace genjac
