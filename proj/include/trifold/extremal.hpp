#pragma once

// The three objectives over the univalence domain, their closed-form extrema
// (attained at the corner), the monotonicity verification along the curved
// arc, and an independent grid-search oracle over the domain interior.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trifold/domain.hpp"
#include "trifold/geometry.hpp"
#include "trifold/suffridge.hpp"

namespace trifold {

struct Objectives {
    double l1 = 0.0;  // x
    double l2 = 0.0;  // 1 + x + y
    double l3 = 0.0;  // (1 - x + y)/(1 + x + y)
};

inline Objectives objectives(double a, double b) {
    const double denom = 1.0 + a + b;
    if (denom == 0.0) throw std::domain_error("l3 undefined: 1 + a + b = 0");
    return {a, denom, (1.0 - a + b) / denom};
}

struct ClosedFormExtrema {
    double max_l1 = 0.0;  // a0
    double max_l2 = 0.0;  // 1 + a0 + b0
    double min_l3 = 0.0;  // ((1 - s)/cos)^2 with s = sin(pi/(2+2T))
};

inline ClosedFormExtrema closed_form_extrema(int fold_order) {
    const CornerPoint c = corner_point(fold_order);
    const double s = std::sin(std::numbers::pi / (2.0 + 2.0 * fold_order));
    const double co = std::cos(std::numbers::pi / (2.0 + 2.0 * fold_order));
    const double r = (1.0 - s) / co;
    return {c.a, 1.0 + c.a + c.b, r * r};
}

// --- monotonicity along the curved arc, in the scaled parameter ---

struct MonotonicityCheck {
    int fold_order = 1;
    int samples = 0;
    int x_violations = 0;      // x(tau) must strictly increase
    int y_violations = 0;      // y(tau) must strictly increase
    int ratio_violations = 0;  // (1 + y)/x must strictly decrease
    double min_x_step = std::numeric_limits<double>::infinity();
    double min_y_step = std::numeric_limits<double>::infinity();
    double max_ratio_step = -std::numeric_limits<double>::infinity();

    bool passed() const { return x_violations == 0 && y_violations == 0 && ratio_violations == 0; }
};

inline MonotonicityCheck monotonicity_check(int fold_order, int samples) {
    if (samples < 100) throw std::invalid_argument("need at least 100 samples");
    MonotonicityCheck mc;
    mc.fold_order = fold_order;
    mc.samples = samples;
    const double alpha = 1.0 / (1.0 + fold_order);
    double px = 0.0, py = 0.0, pr = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double tau = (std::numbers::pi / 2.0) * i / (samples + 1);
        const double den = scaled_denom(tau, alpha);
        const double x = scaled_x_num(tau, alpha) / den;
        const double y = scaled_y_num(tau, alpha) / den;
        const double ratio = (1.0 + y) / x;
        if (i > 1) {
            const double dx = x - px, dy = y - py, dr = ratio - pr;
            if (dx <= 0.0) ++mc.x_violations;
            if (dy <= 0.0) ++mc.y_violations;
            if (dr >= 0.0) ++mc.ratio_violations;
            mc.min_x_step = std::min(mc.min_x_step, dx);
            mc.min_y_step = std::min(mc.min_y_step, dy);
            mc.max_ratio_step = std::max(mc.max_ratio_step, dr);
        }
        px = x;
        py = y;
        pr = ratio;
    }
    return mc;
}

// --- independent grid oracle ---

struct GridExtremum {
    double value = 0.0;
    Point at;
};

struct GridSearchResult {
    int fold_order = 1;
    int resolution = 0;
    double cell_dx = 0.0, cell_dy = 0.0, cell_diagonal = 0.0;
    // extrema over every cell center the polygon contains
    GridExtremum max_l1{-std::numeric_limits<double>::infinity(), {}};
    GridExtremum max_l2{-std::numeric_limits<double>::infinity(), {}};
    GridExtremum min_l3{std::numeric_limits<double>::infinity(), {}};
    // extrema over cells at least one cell diagonal away from the polyline
    GridExtremum interior_max_l1{-std::numeric_limits<double>::infinity(), {}};
    GridExtremum interior_max_l2{-std::numeric_limits<double>::infinity(), {}};
    GridExtremum interior_min_l3{std::numeric_limits<double>::infinity(), {}};
    std::vector<Point> near_boundary;  // contained cells hugging the polyline
    long long contained_cells = 0;
};

// Scans cell centers of a resolution x resolution grid over the bounding box.
// Ties resolve to the last scanned cell (column-major, y ascending), so a
// column of equal objective values reports its topmost cell.  Cells within
// one diagonal of the polyline are kept out of the interior extrema; the
// contains() verdict is not trustworthy right at the boundary.
inline GridSearchResult grid_search_extrema(int fold_order, int resolution,
                                            int polyline_samples = 256) {
    if (resolution < 50) throw std::invalid_argument("resolution must be >= 50");
    const DomainBoundary bd = boundary_polyline(fold_order, polyline_samples);

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Point& p : bd.polygon) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    GridSearchResult res;
    res.fold_order = fold_order;
    res.resolution = resolution;
    res.cell_dx = (xmax - xmin) / resolution;
    res.cell_dy = (ymax - ymin) / resolution;
    res.cell_diagonal = std::hypot(res.cell_dx, res.cell_dy);

    for (int i = 0; i < resolution; ++i) {
        const double x = xmin + (i + 0.5) * res.cell_dx;
        for (int j = 0; j < resolution; ++j) {
            const double y = ymin + (j + 0.5) * res.cell_dy;
            if (!point_in_polygon(bd.polygon, x, y)) continue;
            ++res.contained_cells;
            const double l1 = x;
            const double l2 = 1.0 + x + y;
            const double l3 = (1.0 - x + y) / l2;
            if (l1 >= res.max_l1.value) res.max_l1 = {l1, {x, y}};
            if (l2 >= res.max_l2.value) res.max_l2 = {l2, {x, y}};
            if (l3 <= res.min_l3.value) res.min_l3 = {l3, {x, y}};
            const double d = distance_to_polyline(bd.polygon, x, y);
            if (d < res.cell_diagonal) {
                res.near_boundary.push_back({x, y});
            } else {
                if (l1 >= res.interior_max_l1.value) res.interior_max_l1 = {l1, {x, y}};
                if (l2 >= res.interior_max_l2.value) res.interior_max_l2 = {l2, {x, y}};
                if (l3 <= res.interior_min_l3.value) res.interior_min_l3 = {l3, {x, y}};
            }
        }
    }
    return res;
}

struct ExtremalReport {
    int fold_order = 1;
    ClosedFormExtrema closed_form;
    GridSearchResult oracle;
    MonotonicityCheck monotonicity;
};

inline ExtremalReport extremal_report(int fold_order, int resolution = 300,
                                      int monotonicity_samples = 1000) {
    return {fold_order, closed_form_extrema(fold_order),
            grid_search_extrema(fold_order, resolution),
            monotonicity_check(fold_order, monotonicity_samples)};
}

}  // namespace trifold
