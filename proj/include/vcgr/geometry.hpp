// Copyright 2026 The vcgr Authors.
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

#ifndef VCGR_GEOMETRY_HPP_
#define VCGR_GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <optional>

namespace vcgr {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance_sq(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) { return std::sqrt(distance_sq(a, b)); }

inline Point midpoint(Point a, Point b) {
  return Point{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
}

// Polar angle of `to` as seen from `from`, in [0, 2*pi), y up.
inline double bearing(Point from, Point to) {
  double a = std::atan2(to.y - from.y, to.x - from.x);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

// Counterclockwise angular distance from angle `from` to angle `to`, in [0, 2*pi).
inline double ccw_delta(double from, double to) {
  double d = to - from;
  while (d < 0) d += 2.0 * std::numbers::pi;
  while (d >= 2.0 * std::numbers::pi) d -= 2.0 * std::numbers::pi;
  return d;
}

namespace detail {

// Parametric solve for ab x cd; t along ab, u along cd. Parallel or collinear
// pairs report no solution.
inline bool segment_params(Point a, Point b, Point c, Point d, double& t, double& u) {
  const double rx = b.x - a.x, ry = b.y - a.y;
  const double sx = d.x - c.x, sy = d.y - c.y;
  const double denom = rx * sy - ry * sx;
  if (denom == 0.0) return false;
  const double qx = c.x - a.x, qy = c.y - a.y;
  t = (qx * sy - qy * sx) / denom;
  u = (qx * ry - qy * rx) / denom;
  return true;
}

}  // namespace detail

// Intersection point of closed segments ab and cd; parallel or collinear
// overlaps yield nullopt.
inline std::optional<Point> segment_intersection(Point a, Point b, Point c, Point d) {
  double t = 0.0, u = 0.0;
  if (!detail::segment_params(a, b, c, d, t, u)) return std::nullopt;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Crossing strictly interior to both segments; touches at an endpoint of
// either segment do not count.
inline std::optional<Point> proper_intersection(Point a, Point b, Point c, Point d) {
  double t = 0.0, u = 0.0;
  if (!detail::segment_params(a, b, c, d, t, u)) return std::nullopt;
  if (t <= 0.0 || t >= 1.0 || u <= 0.0 || u >= 1.0) return std::nullopt;
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace vcgr

#endif  // VCGR_GEOMETRY_HPP_
