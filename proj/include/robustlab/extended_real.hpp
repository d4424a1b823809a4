// Copyright 2026 The robustlab Authors
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

#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace robustlab {

/// A non-negative real or an explicit "unbounded" marker. Robustness values
/// are +inf whenever no admissible mixture exists; that case is a state of
/// this type rather than a sentinel double.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(v, true); }
  static ExtendedReal unbounded() { return ExtendedReal(0.0, false); }

  bool is_finite() const noexcept { return finite_; }
  bool is_unbounded() const noexcept { return !finite_; }

  /// Throws std::logic_error on an unbounded value.
  double value() const {
    if (!finite_) throw std::logic_error("ExtendedReal: value() on unbounded");
    return value_;
  }

  /// +inf for the unbounded case; handy for min/max arithmetic.
  double as_double() const noexcept {
    return finite_ ? value_ : std::numeric_limits<double>::infinity();
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("inf");
  }

  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

 private:
  ExtendedReal(double v, bool f) : value_(v), finite_(f) {}
  double value_;
  bool finite_;
};

}  // namespace robustlab
