// Copyright 2026 The GibbsGame Authors
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


// Command-line front end. `run` is separate from main() so tests can drive
// it in-process.

#ifndef GIBBSGAME_TOOLS_CLI_HPP_
#define GIBBSGAME_TOOLS_CLI_HPP_

#include <ostream>

namespace gibbsgame::cli {

// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 precondition,
// 4 resource cap.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gibbsgame::cli

#endif  // GIBBSGAME_TOOLS_CLI_HPP_
