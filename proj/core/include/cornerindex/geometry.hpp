#pragma once

#include <cmath>
#include <optional>

namespace cornerindex {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Twice the signed area of (a, b, c); positive when counterclockwise.
constexpr double orient2d(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

inline Point2 midpoint(Point2 a, Point2 b) { return 0.5 * (a + b); }

/// Euclidean distance from p to the closed segment [a, b].
double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Euclidean distance from p to the closed triangle (a, b, c); zero inside.
double point_triangle_distance(Point2 p, Point2 a, Point2 b, Point2 c);

/// True when the open segments (a, b) and (c, d) cross at a single interior point.
bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d, double tol = 0.0);

/// True when the closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, double tol = 0.0);

/// Strictly inside triangle (a, b, c), with a margin `tol` (either orientation).
bool point_strictly_in_triangle(Point2 p, Point2 a, Point2 b, Point2 c, double tol = 0.0);

}  // namespace cornerindex
