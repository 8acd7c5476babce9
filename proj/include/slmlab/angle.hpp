// Copyright 2026 The slmlab Authors
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

#include <cmath>
#include <numbers>

namespace slmlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi).
inline double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding at the seam
  return r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double angle_distance(double a, double b) {
  double d = std::abs(reduce_angle(a) - reduce_angle(b));
  return std::min(d, kTwoPi - d);
}

}  // namespace slmlab
