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

#include "wadet/weight.hpp"

namespace wadet {

Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("weight overflow in addition");
  return r;
}

Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("weight overflow in subtraction");
  return r;
}

Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("weight overflow in multiplication");
  return r;
}

Weight ExtendedWeight::value() const {
  if (!value_) throw std::logic_error("value() on bottom");
  return *value_;
}

ExtendedWeight operator+(const ExtendedWeight& a, const ExtendedWeight& b) {
  if (a.is_bottom() || b.is_bottom()) return ExtendedWeight::bottom();
  return ExtendedWeight(checked_add(*a.value_, *b.value_));
}

bool operator<(const ExtendedWeight& a, const ExtendedWeight& b) {
  if (b.is_bottom()) return false;
  if (a.is_bottom()) return true;
  return *a.value_ < *b.value_;
}

ExtendedWeight max(const ExtendedWeight& a, const ExtendedWeight& b) {
  return a < b ? b : a;
}

std::string ExtendedWeight::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("undefined");
}

}  // namespace wadet
