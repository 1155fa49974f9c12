// Copyright 2026 The cfp Authors
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

#ifndef CFP_TOOLS_CLI_H_
#define CFP_TOOLS_CLI_H_

#include <iosfwd>

namespace cfp {

// Runs the command line `argv` (argv[0] is the program name). Returns the
// process exit status: 0 success, 1 negative verdict, 2 budget exhausted,
// 3 bad input; CLI usage errors use the parser's codes.
int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace cfp

#endif  // CFP_TOOLS_CLI_H_
