#pragma once

// Numerical univalence certification for the trinomial z + a z^{1+T} + b z^{1+2T}.
//
// Stage 1 rejects when a derivative zero lies inside the test circle (no
// locally injective extension is possible).  Stage 2 samples the image of the
// circle |z| = r and looks for a self-intersection of the closed image curve:
// an analytic function injective on a circle is injective inside it, so a
// crossing-free image certifies univalence on the open sub-disk.  The open
// unit disk verdict climbs the fixed radius ladder {0.9, 0.99, 0.999}.

#include <array>
#include <stdexcept>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "trifold/geometry.hpp"
#include "trifold/polynomial.hpp"

namespace trifold {

enum class Verdict { Univalent, NotUnivalent, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Univalent: return "univalent";
        case Verdict::NotUnivalent: return "not_univalent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct UnivalenceReport {
    Verdict verdict = Verdict::Inconclusive;
    double min_derivative_root_modulus = std::numeric_limits<double>::infinity();
    double min_boundary_self_distance = std::numeric_limits<double>::infinity();
    double test_radius = 0.0;
    int boundary_samples = 0;
};

inline constexpr std::array<double, 3> kRadiusLadder{0.9, 0.99, 0.999};

inline std::vector<Point> circle_image(int fold_order, double a, double b, double r, int samples) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    const SymmetricPolynomial p = SymmetricPolynomial::trinomial(fold_order, a, b);
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        const Complex w = p(std::polar(r, theta));
        pts.push_back({w.real(), w.imag()});
    }
    return pts;
}

// Single-radius test.  `with_evidence` additionally measures the minimum
// self-distance of the image curve (quadratic scan; skipped by grid sweeps).
inline UnivalenceReport univalence_report_at_radius(int fold_order, double a, double b,
                                                    double r, int samples,
                                                    bool with_evidence = true) {
    if (r <= 0.0 || r > 1.0) throw std::invalid_argument("test radius must be in (0, 1]");
    if (samples < 64) throw std::invalid_argument("need at least 64 boundary samples");
    UnivalenceReport rep;
    rep.test_radius = r;
    rep.boundary_samples = samples;

    for (const PolarRoot& root : trinomial_derivative_roots(fold_order, a, b))
        rep.min_derivative_root_modulus = std::min(rep.min_derivative_root_modulus, root.modulus);
    if (rep.min_derivative_root_modulus < r - 1e-9) {
        rep.verdict = Verdict::NotUnivalent;  // witness: critical point inside the circle
        return rep;
    }

    const std::vector<Point> image = circle_image(fold_order, a, b, r, samples);
    if (polyline_self_intersects(image)) {
        rep.verdict = Verdict::NotUnivalent;
        rep.min_boundary_self_distance = 0.0;
        return rep;
    }
    if (with_evidence) rep.min_boundary_self_distance = polyline_min_self_distance(image);
    rep.verdict = Verdict::Univalent;
    return rep;
}

// Open-unit-disk verdict via the radius ladder.  A witness at any radius is a
// witness for the disk; a witness at a small radius that vanishes at a larger
// one contradicts monotonicity and is reported as inconclusive.
inline UnivalenceReport is_univalent_trinomial(int fold_order, double a, double b,
                                               int samples = 1024) {
    UnivalenceReport finest;
    bool failed_below = false;
    for (double r : kRadiusLadder) {
        finest = univalence_report_at_radius(fold_order, a, b, r, samples);
        if (finest.verdict == Verdict::NotUnivalent && r < kRadiusLadder.back())
            failed_below = true;
    }
    if (finest.verdict == Verdict::Univalent && failed_below)
        finest.verdict = Verdict::Inconclusive;
    return finest;
}

}  // namespace trifold
