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

#ifndef WADET_WEIGHT_HPP_
#define WADET_WEIGHT_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wadet {

using Weight = std::int64_t;

// Raised by every checked arithmetic helper on signed overflow.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Weight checked_add(Weight a, Weight b);
Weight checked_sub(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

// An integer or bottom (-inf, "no accepting run").
class ExtendedWeight {
 public:
  ExtendedWeight() = default;  // bottom
  ExtendedWeight(Weight w) : value_(w) {}  // NOLINT(runtime/explicit)

  static ExtendedWeight bottom() { return ExtendedWeight(); }

  bool is_bottom() const { return !value_.has_value(); }
  Weight value() const;
  const std::optional<Weight>& raw() const { return value_; }

  friend ExtendedWeight operator+(const ExtendedWeight& a,
                                  const ExtendedWeight& b);
  friend bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
    return a.value_ == b.value_;
  }
  // Total order with bottom below every integer.
  friend bool operator<(const ExtendedWeight& a, const ExtendedWeight& b);

  std::string to_string() const;

 private:
  std::optional<Weight> value_;
};

ExtendedWeight max(const ExtendedWeight& a, const ExtendedWeight& b);

}  // namespace wadet

#endif  // WADET_WEIGHT_HPP_
