#include "guidedog/geometry.hpp"

namespace guidedog {

Vec2 unit_or(Vec2 v, Vec2 fallback) {
    const double n = norm(v);
    if (n < 1e-12) return fallback;
    return {v.x / n, v.y / n};
}

double segment_point_distance(Vec2 a, Vec2 b, Vec2 p) {
    const Vec2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 < 1e-24) return distance(a, p);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return distance({a.x + t * ab.x, a.y + t * ab.y}, p);
}

double normalize_angle(double radians) {
    const double two_pi = 2.0 * M_PI;
    double a = std::fmod(radians + M_PI, two_pi);
    if (a < 0.0) a += two_pi;
    return a - M_PI;
}

}  // namespace guidedog
