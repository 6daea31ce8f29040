// Copyright 2026 The dppl Authors
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

#ifndef DPPL_GEOMETRY_HPP
#define DPPL_GEOMETRY_HPP

#include <cmath>

namespace dppl {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Vec2& a, const Vec2& b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace dppl

#endif  // DPPL_GEOMETRY_HPP
