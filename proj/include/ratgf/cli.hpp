/*
   Copyright 2026 The ratgf Authors

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


#ifndef RATGF_CLI_HPP
#define RATGF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ratgf::cli {

/*
 * Runs one command line (args[0] is the program name). Results go to out,
 * diagnostics to err. Returns 0 on success, 1 when the computation fails
 * (no fit, budget, structural errors) and 2 on usage errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratgf::cli

#endif  // RATGF_CLI_HPP
