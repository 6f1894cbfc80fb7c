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

#include "gibbsgame/errors.hpp"

#include <sstream>

namespace gibbsgame {

NotGibbsError::NotGibbsError(JointAction witness, double residual)
    : PreconditionError("potential is not a Gibbs potential for the graph: "
                        "residual " +
                        std::to_string(residual) + " at " +
                        format_joint_action(witness)),
      witness_(std::move(witness)),
      residual_(residual) {}

CycleError::CycleError(JointAction repeated, std::size_t step)
    : PreconditionError("best-response play cycles: state " +
                        format_joint_action(repeated) + " repeats at step " +
                        std::to_string(step)),
      repeated_(std::move(repeated)),
      step_(step) {}

std::string format_joint_action(const JointAction& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out << ',';
    out << x[k];
  }
  out << ')';
  return out.str();
}

}  // namespace gibbsgame
