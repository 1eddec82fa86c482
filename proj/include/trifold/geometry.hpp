#pragma once

// Planar primitives shared by the boundary assembly and the univalence
// oracle: orientation tests, segment crossing with a conservative touching
// tolerance, point-in-polygon, and distance queries on closed polylines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace trifold {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

inline double segment_segment_distance(const Point& a, const Point& b,
                                        const Point& c, const Point& d) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return 0.0;  // proper crossing
    return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                    std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

// Crossing test used by the injectivity oracle. Proper sign crossings count,
// and so does any touching closer than `touch_tol` (conservative: near the
// domain boundary we prefer to declare a crossing).
inline bool segments_cross(const Point& a, const Point& b,
                           const Point& c, const Point& d,
                           double touch_tol = 1e-12) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return segment_segment_distance(a, b, c, d) <= touch_tol;
}

// Self-intersection of the closed polyline pts[0..n-1] (edge i runs from
// pts[i] to pts[(i+1) % n]).  Adjacent edges share a vertex and are skipped.
inline bool polyline_self_intersects(std::span<const Point> pts, double touch_tol = 1e-12) {
    const std::size_t n = pts.size();
    if (n < 4) return false;
    std::vector<double> lox(n), hix(n), loy(n), hiy(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        lox[i] = std::min(a.x, b.x) - touch_tol;
        hix[i] = std::max(a.x, b.x) + touch_tol;
        loy[i] = std::min(a.y, b.y) - touch_tol;
        hiy[i] = std::max(a.y, b.y) + touch_tol;
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const std::size_t jend = (i == 0) ? n - 1 : n;
        for (std::size_t j = i + 2; j < jend; ++j) {
            if (hix[i] < lox[j] || lox[i] > hix[j] || hiy[i] < loy[j] || loy[i] > hiy[j])
                continue;
            if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n], touch_tol))
                return true;
        }
    }
    return false;
}

// Minimum distance between non-adjacent edges of a closed polyline.
// Zero means the curve touches or crosses itself.
inline double polyline_min_self_distance(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    if (n < 4) return best;
    std::vector<double> lox(n), hix(n), loy(n), hiy(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        lox[i] = std::min(a.x, b.x);
        hix[i] = std::max(a.x, b.x);
        loy[i] = std::min(a.y, b.y);
        hiy[i] = std::max(a.y, b.y);
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const std::size_t jend = (i == 0) ? n - 1 : n;
        for (std::size_t j = i + 2; j < jend; ++j) {
            const double gx = std::max({lox[j] - hix[i], lox[i] - hix[j], 0.0});
            const double gy = std::max({loy[j] - hiy[i], loy[i] - hiy[j], 0.0});
            if (gx * gx + gy * gy >= best * best) continue;  // bbox gap already too far
            best = std::min(best, segment_segment_distance(pts[i], pts[(i + 1) % n],
                                                           pts[j], pts[(j + 1) % n]));
        }
    }
    return best;
}

// Even-odd ray casting with the half-open rule, so points exactly on a
// horizontal edge are classified deterministically.
inline bool point_in_polygon(std::span<const Point> poly, double x, double y) {
    const std::size_t n = poly.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if ((a.y <= y) != (b.y <= y)) {
            const double xc = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x < xc) inside = !inside;
        }
    }
    return inside;
}

inline double distance_to_polyline(std::span<const Point> poly, double x, double y) {
    const std::size_t n = poly.size();
    double best = std::numeric_limits<double>::infinity();
    const Point p{x, y};
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % n]));
    return best;
}

inline double polygon_signed_area(std::span<const Point> poly) {
    double a = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

}  // namespace trifold
