#pragma once

#include <cmath>

namespace swarmloc {

/// Planar position in meters (x east, y north).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
};

inline double norm(const Point& p) { return std::hypot(p.x, p.y); }

/// Euclidean distance in meters.
inline double distance(const Point& a, const Point& b) { return norm(a - b); }

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

}  // namespace swarmloc
