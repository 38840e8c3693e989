/* Copyright 2026 The Milnor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef MILNOR_CLI_HPP
#define MILNOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::cli {

enum ExitCode : int { ok = 0, property_failure = 1, usage_error = 2 };

// Runs one command, e.g. {"mu", "-n", "3", "[t1,t2]"}; args excludes the
// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace milnor::cli

#endif // MILNOR_CLI_HPP
