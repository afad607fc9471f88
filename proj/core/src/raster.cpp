#include "vistask/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vistask {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Clamp a real bounding range to valid pixel indices. Clamping happens in
// double before the int cast so that huge finite inputs never overflow.
struct PixelRange {
    int lo = 0, hi = -1;  // empty by default
};

PixelRange clip_range(double lo, double hi, int limit) {
    if (!(lo <= hi)) return {};  // also rejects NaN
    lo = std::ceil(lo);
    hi = std::floor(hi);
    if (hi < 0.0 || lo > static_cast<double>(limit - 1)) return {};
    if (lo < 0.0) lo = 0.0;
    if (hi > static_cast<double>(limit - 1)) hi = static_cast<double>(limit - 1);
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

struct Interval {
    double lo = 1.0, hi = 0.0;  // empty
    bool empty() const { return !(lo <= hi); }
    void merge(double a, double b) {
        if (!(a <= b)) return;
        if (empty()) { lo = a; hi = b; }
        else { lo = std::min(lo, a); hi = std::max(hi, b); }
    }
};

inline double sq(double v) { return v * v; }

// Squared distance from p to segment [a, b]; the coverage predicate for
// segments and strokes, shared by every path below.
inline double segment_dist2(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point q = a + t * ab;
    return dot(p - q, p - q);
}

}  // namespace

void draw_disc(Canvas& canvas, Point center, double radius, Color color) {
    if (radius < 0.0) throw std::invalid_argument("draw_disc: negative radius");
    const double r2 = radius * radius;
    const PixelRange ys = clip_range(center.y - radius, center.y + radius, canvas.height());
    for (int y = ys.lo; y <= ys.hi; ++y) {
        const double dy2 = sq(y - center.y);
        if (dy2 > r2) continue;
        // conservative chord, exact squared test per pixel
        const double half = std::sqrt(r2 - dy2) + 1.0;
        const PixelRange xs = clip_range(center.x - half, center.x + half, canvas.width());
        for (int x = xs.lo; x <= xs.hi; ++x)
            if (sq(x - center.x) + dy2 <= r2) canvas.at(x, y) = color;
    }
}

void draw_segment(Canvas& canvas, Point a, Point b, double width, Color color) {
    if (!(width > 0.0)) throw std::invalid_argument("draw_segment: width must be positive");
    const double half = width / 2.0;
    const double half2 = half * half;
    const PixelRange ys = clip_range(std::min(a.y, b.y) - half,
                                     std::max(a.y, b.y) + half, canvas.height());

    const Point ab = b - a;
    const double len = norm(ab);
    const Point d = len > 0.0 ? Point{ab.x / len, ab.y / len} : Point{0.0, 0.0};
    const Point n{-d.y, d.x};

    for (int y = ys.lo; y <= ys.hi; ++y) {
        const double fy = y;
        // The capsule is convex, so its row slice is one interval; build a
        // conservative hull from the two end caps and the oriented band,
        // then decide each pixel with the exact predicate.
        Interval iv;
        const double da = half2 - sq(fy - a.y);
        if (da >= 0.0) iv.merge(a.x - std::sqrt(da), a.x + std::sqrt(da));
        const double db = half2 - sq(fy - b.y);
        if (db >= 0.0) iv.merge(b.x - std::sqrt(db), b.x + std::sqrt(db));
        if (len > 0.0) {
            Interval band{-1e300, 1e300};
            bool ok = true;
            const double py = fy - a.y;
            if (std::abs(n.x) > 1e-12) {
                double u0 = a.x + (-half - py * n.y) / n.x;
                double u1 = a.x + (half - py * n.y) / n.x;
                if (u0 > u1) std::swap(u0, u1);
                band.lo = std::max(band.lo, u0);
                band.hi = std::min(band.hi, u1);
            } else if (std::abs(py * n.y) > half) {
                ok = false;
            }
            if (ok && std::abs(d.x) > 1e-12) {
                double u0 = a.x + (0.0 - py * d.y) / d.x;
                double u1 = a.x + (len - py * d.y) / d.x;
                if (u0 > u1) std::swap(u0, u1);
                band.lo = std::max(band.lo, u0);
                band.hi = std::min(band.hi, u1);
            } else if (ok && std::abs(d.x) <= 1e-12) {
                const double t = py * d.y;
                if (t < 0.0 || t > len) ok = false;
            }
            if (ok && !band.empty()) iv.merge(band.lo, band.hi);
        }
        if (iv.empty()) continue;
        const PixelRange xs = clip_range(iv.lo - 1.5, iv.hi + 1.5, canvas.width());
        for (int x = xs.lo; x <= xs.hi; ++x)
            if (segment_dist2({static_cast<double>(x), fy}, a, b) <= half2)
                canvas.at(x, y) = color;
    }
}

namespace {

// Flat when both control points are within tol of the chord segment. Using
// the segment (not the infinite line) keeps collinear-but-overshooting
// control points subdividing.
bool flat_enough(Point p0, Point c1, Point c2, Point p3, double tol) {
    const double t2 = tol * tol;
    return segment_dist2(c1, p0, p3) <= t2 && segment_dist2(c2, p0, p3) <= t2;
}

void flatten(Point p0, Point c1, Point c2, Point p3, double tol, int depth,
             std::vector<Point>& out) {
    if (depth >= 32 || flat_enough(p0, c1, c2, p3, tol)) {
        out.push_back(p3);
        return;
    }
    // de Casteljau split at t = 1/2
    const Point m01 = 0.5 * (p0 + c1);
    const Point m12 = 0.5 * (c1 + c2);
    const Point m23 = 0.5 * (c2 + p3);
    const Point m012 = 0.5 * (m01 + m12);
    const Point m123 = 0.5 * (m12 + m23);
    const Point mid = 0.5 * (m012 + m123);
    flatten(p0, m01, m012, mid, tol, depth + 1, out);
    flatten(mid, m123, m23, p3, tol, depth + 1, out);
}

}  // namespace

void draw_cubic_bezier(Canvas& canvas, Point p0, Point c1, Point c2, Point p3,
                       double width, Color color) {
    if (!(width > 0.0))
        throw std::invalid_argument("draw_cubic_bezier: width must be positive");
    std::vector<Point> pts;
    pts.push_back(p0);
    flatten(p0, c1, c2, p3, kBezierFlattenTolerance, 0, pts);
    for (std::size_t i = 1; i < pts.size(); ++i)
        draw_segment(canvas, pts[i - 1], pts[i], width, color);
}

void draw_annulus_arc(Canvas& canvas, Point center, double r_inner, double r_outer,
                      double angle0, double angle1, Color color) {
    if (r_inner < 0.0 || r_outer < r_inner)
        throw std::invalid_argument("draw_annulus_arc: need 0 <= r_inner <= r_outer");
    const double extent = angle1 - angle0;
    if (!(extent > 0.0)) return;
    const bool full = extent >= kTwoPi;
    const double ro2 = sq(r_outer), ri2 = sq(r_inner);
    const PixelRange ys = clip_range(center.y - r_outer, center.y + r_outer, canvas.height());
    for (int y = ys.lo; y <= ys.hi; ++y) {
        const double dy = y - center.y;
        const double span = ro2 - dy * dy;
        if (span < 0.0) continue;
        const double halfw = std::sqrt(span) + 1.0;
        const PixelRange xs = clip_range(center.x - halfw, center.x + halfw, canvas.width());
        for (int x = xs.lo; x <= xs.hi; ++x) {
            const double dx = x - center.x;
            const double r2 = dx * dx + dy * dy;
            if (r2 < ri2 || r2 >= ro2) continue;
            if (!full) {
                double rel = std::fmod(std::atan2(dy, dx) - angle0, kTwoPi);
                if (rel < 0.0) rel += kTwoPi;
                if (rel >= extent) continue;
            }
            canvas.at(x, y) = color;
        }
    }
}

void draw_radial_wall(Canvas& canvas, Point center, double r_inner, double r_outer,
                      double angle, double width, Color color) {
    if (r_inner < 0.0 || r_outer < r_inner)
        throw std::invalid_argument("draw_radial_wall: need 0 <= r_inner <= r_outer");
    const Point dir{std::cos(angle), std::sin(angle)};
    draw_segment(canvas, center + r_inner * dir, center + r_outer * dir, width, color);
}

void fill_rect(Canvas& canvas, double x0, double y0, double x1, double y1, Color color) {
    if (!(x1 > x0) || !(y1 > y0)) return;
    const PixelRange ys = clip_range(y0, std::nexttoward(y1, y0), canvas.height());
    const PixelRange xs = clip_range(x0, std::nexttoward(x1, x0), canvas.width());
    for (int y = ys.lo; y <= ys.hi; ++y)
        for (int x = xs.lo; x <= xs.hi; ++x) canvas.at(x, y) = color;
}

}  // namespace vistask
