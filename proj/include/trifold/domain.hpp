#pragma once

// The univalence domain U_T of z + a z^{1+T} + b z^{1+2T} in the (a, b)
// plane: five parametric boundary arcs (general (k, m) form and the
// specialized T-fold form), assembly into a closed polyline, and
// point-in-domain queries.

#include <cmath>
#include <numeric>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trifold/geometry.hpp"
#include "trifold/suffridge.hpp"

namespace trifold {

enum class SegmentKind { Gamma1, Gamma2Plus, Gamma2Minus, Gamma3Plus, Gamma3Minus };

inline const char* segment_name(SegmentKind k) {
    switch (k) {
        case SegmentKind::Gamma1: return "gamma1";
        case SegmentKind::Gamma2Plus: return "gamma2+";
        case SegmentKind::Gamma2Minus: return "gamma2-";
        case SegmentKind::Gamma3Plus: return "gamma3+";
        case SegmentKind::Gamma3Minus: return "gamma3-";
    }
    return "?";
}

// --- numerators/denominator of the curved arc, in the raw parameter t ---

struct CurveParts {
    double x_num = 0.0;  // 2T sin((2+2T)t) - (2+2T) sin(2Tt)
    double y_num = 0.0;  // T sin((2+T)t)  - (2+T) sin(Tt)
    double denom = 0.0;  // T sin((2+3T)t) - (2+3T) sin(Tt)
};

inline CurveParts gamma3_parts(int fold_order, double t) {
    const double T = fold_order;
    return {2.0 * T * std::sin((2.0 + 2.0 * T) * t) - (2.0 + 2.0 * T) * std::sin(2.0 * T * t),
            T * std::sin((2.0 + T) * t) - (2.0 + T) * std::sin(T * t),
            T * std::sin((2.0 + 3.0 * T) * t) - (2.0 + 3.0 * T) * std::sin(T * t)};
}

// Both ratios are 0/0 at t = 0; below this threshold the third-order series
// limits are returned instead (the cancellation destroys precision there).
inline double gamma3_limit_threshold(int fold_order) {
    return 1e-4 / (2.0 + 2.0 * fold_order);
}

inline double gamma3_x(int fold_order, double t) {
    const double T = fold_order;
    if (std::abs(t) < gamma3_limit_threshold(fold_order)) return 4.0 / (2.0 + 3.0 * T);
    const CurveParts p = gamma3_parts(fold_order, t);
    return p.x_num / p.denom;
}

inline double gamma3_y(int fold_order, double t) {
    const double T = fold_order;
    if (std::abs(t) < gamma3_limit_threshold(fold_order))
        return (T + 2.0) / ((2.0 + 3.0 * T) * (1.0 + 2.0 * T));
    const CurveParts p = gamma3_parts(fold_order, t);
    return p.y_num / p.denom;
}

inline Point gamma3_point(int fold_order, double t) {
    return {gamma3_x(fold_order, t), gamma3_y(fold_order, t)};
}

inline Point gamma2_point(int fold_order, int sign, double t) {
    const double T = fold_order;
    return {sign * t, ((1.0 + T) * t - 1.0) / (1.0 + 2.0 * T)};
}

inline Point gamma1_point(int fold_order, double t) {
    return {t, 1.0 / (1.0 + 2.0 * fold_order)};
}

// --- general (k, m) trinomial curves of z + a z^k + b z^m ---

// Curved boundary arc for general exponents, s in {0, 1}; sign factors come
// from the reduced fraction (k-1)/(m-k) = p/q.  Throws when t is too close
// to a pole of the parametrization.
inline Point general_gamma3(int k, int m, int s, double t) {
    if (k < 2 || m <= k) throw std::invalid_argument("need 2 <= k < m");
    if (s != 0 && s != 1) throw std::invalid_argument("s must be 0 or 1");
    const int g = std::gcd(k - 1, m - k);
    const long long p = (k - 1) / g;
    const long long q = (m - k) / g;
    const double ck = std::cos(k * t), cm = std::cos(m * t), ct = std::cos(t);
    if (std::abs(ck) < 1e-12 || std::abs(cm) < 1e-12 || std::abs(ct) < 1e-12)
        throw std::domain_error("parameter too close to a pole of tan");
    const double tk = std::tan(k * t), tm = std::tan(m * t), tt = std::tan(t);
    const double den = k * tm - m * tk;
    if (std::abs(den) < 1e-12) throw std::domain_error("parameter too close to a pole");
    const double sx = ((p * s + 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^(ps+1)
    const double sy = (((p + q) * s) % 2 == 0) ? 1.0 : -1.0; // (-1)^((p+q)s)
    return {sx * (ct / ck) * (tm - m * tt) / den,
            sy * (ct / cm) * (tk - k * tt) / den};
}

// General straight boundary line k x + (-1)^{qs} m y = (-1)^{ps+1},
// reported as a point at line parameter x = t.
inline Point general_gamma2(int k, int m, int s, double t) {
    if (k < 2 || m <= k) throw std::invalid_argument("need 2 <= k < m");
    const int g = std::gcd(k - 1, m - k);
    const long long p = (k - 1) / g;
    const long long q = (m - k) / g;
    const double ys = ((q * s) % 2 == 0) ? 1.0 : -1.0;
    const double rhs = ((p * s + 1) % 2 == 0) ? 1.0 : -1.0;
    return {t, (rhs - k * t) / (ys * m)};
}

// One parametric boundary arc with its exact parameter interval.
struct CurveSegment {
    SegmentKind kind = SegmentKind::Gamma1;
    int fold_order = 1;
    double t_min = 0.0;
    double t_max = 0.0;

    Point point(double t) const {
        switch (kind) {
            case SegmentKind::Gamma1: return gamma1_point(fold_order, t);
            case SegmentKind::Gamma2Plus: return gamma2_point(fold_order, +1, t);
            case SegmentKind::Gamma2Minus: return gamma2_point(fold_order, -1, t);
            case SegmentKind::Gamma3Plus: return gamma3_point(fold_order, t);
            case SegmentKind::Gamma3Minus: {
                const Point p = gamma3_point(fold_order, t);
                return {-p.x, p.y};
            }
        }
        return {};
    }
};

inline CurveSegment curve_segment(int fold_order, SegmentKind kind) {
    const double a0 = corner_point(fold_order).a;
    switch (kind) {
        case SegmentKind::Gamma1: return {kind, fold_order, -a0, a0};
        case SegmentKind::Gamma2Plus:
        case SegmentKind::Gamma2Minus:
            return {kind, fold_order, 0.0, 4.0 / (2.0 + 3.0 * fold_order)};
        case SegmentKind::Gamma3Plus:
        case SegmentKind::Gamma3Minus:
            return {kind, fold_order, 0.0, std::numbers::pi / (2.0 + 2.0 * fold_order)};
    }
    return {};
}

// --- boundary assembly ---

struct BoundarySample {
    SegmentKind kind;
    double t;
    Point p;
};

struct DomainBoundary {
    int fold_order = 1;
    std::vector<BoundarySample> samples;  // 5 * samples_per_segment rows
    std::vector<Point> polygon;           // consecutive duplicates removed, open loop
};

// Counterclockwise assembly: Gamma2- down to the bottom vertex, Gamma2+ up
// the right, Gamma3+ to the corner, Gamma1 across the top, Gamma3- back to
// the start.  Junction points appear once per adjoining segment.
inline DomainBoundary boundary_polyline(int fold_order, int samples_per_segment) {
    if (samples_per_segment < 2) throw std::invalid_argument("need at least 2 samples per segment");
    const int m = samples_per_segment;

    DomainBoundary bd;
    bd.fold_order = fold_order;
    bd.samples.reserve(static_cast<std::size_t>(5) * m);

    // (segment, traverse from t_max down?) in counterclockwise order
    const std::pair<SegmentKind, bool> order[5] = {
        {SegmentKind::Gamma2Minus, true}, {SegmentKind::Gamma2Plus, false},
        {SegmentKind::Gamma3Plus, false}, {SegmentKind::Gamma1, true},
        {SegmentKind::Gamma3Minus, true}};
    for (const auto& [kind, reversed] : order) {
        const CurveSegment seg = curve_segment(fold_order, kind);
        for (int i = 0; i < m; ++i) {
            const double u = static_cast<double>(reversed ? m - 1 - i : i) / (m - 1);
            const double t = seg.t_min + u * (seg.t_max - seg.t_min);
            bd.samples.push_back({kind, t, seg.point(t)});
        }
    }

    bd.polygon.reserve(bd.samples.size());
    for (const BoundarySample& s : bd.samples) {
        if (!bd.polygon.empty() && dist(bd.polygon.back(), s.p) < 1e-12) continue;
        bd.polygon.push_back(s.p);
    }
    while (bd.polygon.size() > 1 && dist(bd.polygon.front(), bd.polygon.back()) < 1e-12)
        bd.polygon.pop_back();
    return bd;
}

inline bool contains(const DomainBoundary& bd, double a, double b) {
    return point_in_polygon(bd.polygon, a, b);
}

inline bool contains(int fold_order, double a, double b, int samples_per_segment = 256) {
    return contains(boundary_polyline(fold_order, samples_per_segment), a, b);
}

// --- the curved arc after the substitution tau = (1+T) t, alpha = 1/(1+T) ---
//
// x(tau) = scaled_x_num/scaled_denom and y(tau) = scaled_y_num/scaled_denom
// reproduce gamma3_x, gamma3_y exactly; the closed-form derivatives below
// are what the monotonicity verification differentiates against.

inline double scaled_x_num(double tau, double alpha) {
    return (2.0 * std::sin(2.0 * (1.0 - alpha) * tau) - 2.0 * (1.0 - alpha) * std::sin(2.0 * tau)) / alpha;
}

inline double scaled_y_num(double tau, double alpha) {
    return ((1.0 + alpha) * std::sin((1.0 - alpha) * tau) - (1.0 - alpha) * std::sin((1.0 + alpha) * tau)) / alpha;
}

inline double scaled_denom(double tau, double alpha) {
    return ((3.0 - alpha) * std::sin((1.0 - alpha) * tau) - (1.0 - alpha) * std::sin((3.0 - alpha) * tau)) / alpha;
}

inline double scaled_x_num_deriv(double tau, double alpha) {
    return 8.0 * (1.0 - alpha) / alpha * std::sin(alpha * tau) * std::sin((2.0 - alpha) * tau);
}

inline double scaled_y_num_deriv(double tau, double alpha) {
    return 2.0 * (1.0 - alpha) * (1.0 + alpha) / alpha * std::sin(alpha * tau) * std::sin(tau);
}

inline double scaled_denom_deriv(double tau, double alpha) {
    return 2.0 * (3.0 - alpha) * (1.0 - alpha) / alpha * std::sin((2.0 - alpha) * tau) * std::sin(tau);
}

}  // namespace trifold
