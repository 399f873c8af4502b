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

#ifndef WADET_ERRORS_HPP_
#define WADET_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wadet {

// Malformed input: unknown symbol, bad file, invalid structure.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A resource ceiling was hit during exploration.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_states = 1000000;
  std::size_t max_arena = 10000000;
};

}  // namespace wadet

#endif  // WADET_ERRORS_HPP_
