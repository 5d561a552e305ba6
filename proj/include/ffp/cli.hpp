/*
   Copyright 2026 The ffperiod Authors

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

#ifndef FFP_CLI_HPP
#define FFP_CLI_HPP

#include <ostream>

namespace ffp {

/// Exit codes: 0 all claims verified, 1 a claim failed, 2 bad usage or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffp

#endif  // FFP_CLI_HPP
