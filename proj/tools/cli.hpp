/*
   Copyright 2026 The slowseq Authors

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

#ifndef SLOWSEQ_TOOLS_CLI_HPP_
#define SLOWSEQ_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace slowseq::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitDied = 2,
    kExitUsage = 3,
};

// Runs the slowseq command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slowseq::cli

#endif  // SLOWSEQ_TOOLS_CLI_HPP_
