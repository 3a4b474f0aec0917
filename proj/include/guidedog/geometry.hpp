#pragma once

#include <cmath>

namespace guidedog {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Euclidean distance between two points, in meters.
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

/// Unit vector along v; `fallback` when v is (numerically) zero.
Vec2 unit_or(Vec2 v, Vec2 fallback);

/// Minimum distance from point p to the closed segment [a, b].
double segment_point_distance(Vec2 a, Vec2 b, Vec2 p);

/// Normalizes an angle into [-pi, pi).
double normalize_angle(double radians);

}  // namespace guidedog
