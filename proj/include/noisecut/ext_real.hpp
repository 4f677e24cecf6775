// Copyright 2026 The noisecut Authors
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

#ifndef NOISECUT_EXT_REAL_HPP_
#define NOISECUT_EXT_REAL_HPP_

#include <cassert>
#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

namespace noisecut {

// Non-negative real extended with a +infinity sentinel. Addition saturates at
// infinity; finite values never overflow into it.
class ExtReal {
 public:
  constexpr ExtReal() = default;  // zero
  constexpr explicit ExtReal(double value) : value_(value) {
    assert(std::isfinite(value));
  }

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const { return !is_infinite(); }

  // Only meaningful on finite values.
  constexpr double value() const {
    assert(is_finite());
    return value_;
  }

  friend constexpr ExtReal operator+(ExtReal a, double b) {
    if (a.is_infinite()) return a;
    return ExtReal(a.value_ + b);
  }
  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtReal(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtReal a, ExtReal b) = default;
  friend constexpr auto operator<=>(ExtReal a, ExtReal b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator<(ExtReal a, double b) {
    return a.value_ < b;
  }
  friend constexpr bool operator>=(ExtReal a, double b) {
    return a.value_ >= b;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtReal r) {
    if (r.is_infinite()) return os << "inf";
    return os << r.value_;
  }

 private:
  double value_ = 0.0;
};

inline constexpr ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

}  // namespace noisecut

#endif  // NOISECUT_EXT_REAL_HPP_
