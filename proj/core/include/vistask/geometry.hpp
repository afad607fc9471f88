#pragma once

#include <cmath>
#include <stdexcept>

namespace vistask {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Distance from p to the segment [a, b]; handles the degenerate a == b case.
inline double segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return distance(p, a + t * ab);
}

// Cubic Bezier point: (1-t)^3 p0 + 3(1-t)^2 t c1 + 3(1-t) t^2 c2 + t^3 p3.
inline Point eval_cubic_bezier(Point p0, Point c1, Point c2, Point p3, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("eval_cubic_bezier: t outside [0,1]");
    const double u = 1.0 - t;
    const double b0 = u * u * u;
    const double b1 = 3.0 * u * u * t;
    const double b2 = 3.0 * u * t * t;
    const double b3 = t * t * t;
    return b0 * p0 + b1 * c1 + b2 * c2 + b3 * p3;
}

// First derivative: 3(1-t)^2 (c1-p0) + 6(1-t)t (c2-c1) + 3t^2 (p3-c2).
inline Point bezier_derivative(Point p0, Point c1, Point c2, Point p3, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("bezier_derivative: t outside [0,1]");
    const double u = 1.0 - t;
    return 3.0 * u * u * (c1 - p0) + 6.0 * u * t * (c2 - c1) + 3.0 * t * t * (p3 - c2);
}

}  // namespace vistask
