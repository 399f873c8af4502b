// Copyright 2026 The wadet Authors
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

#include "support.hpp"

namespace wadet::testing {

WeightedAutomaton one_state_loop(Weight wa, bool with_b, Weight wb) {
  AutomatonBuilder b({"a", "b"});
  b.add_state("q", true, true);
  b.add_transition("q", "a", wa, "q");
  if (with_b) b.add_transition("q", "b", wb, "q");
  return b.build();
}

}  // namespace wadet::testing
