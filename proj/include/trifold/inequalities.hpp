#pragma once

// The two trigonometric inequality kernels behind the corner-extremality
// theorem and their grid verification.
//
//   kernel_series_weight(x, k)  =  -(1-x)^2 3^{2k} + (1+x)(3-2x)^{2k}
//                                  - (1+x)(3-x) + (3-x)(1-2x)^{2k}
//   monotone_kernel(tau, alpha) =  (1+a)cos((3-2a)t) + (3-a)cos((1-2a)t)
//                                  - (1-a)^2 cos(3t) - (1+a)(3-a)cos(t)
//
// The two are linked by the cosine series
//   monotone_kernel = sum_{k>=3} (-1)^k kernel_series_weight(alpha,k) tau^{2k}/(2k)!
// (weights at k = 0, 1, 2 vanish identically), which is also how the kernel
// is evaluated at small tau: the four-cosine form cancels to ~tau^6 and
// drops below double rounding noise long before tau reaches the grid edge.

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifold {

inline double pow_int(double base, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// H(x, k); k is capped at 60 to keep 3^{2k} inside double range.
inline double kernel_series_weight(double x, int k) {
    if (k < 0 || k > 60) throw std::invalid_argument("series weight index must be in [0, 60]");
    const double p9 = pow_int(9.0, k);
    const double p32 = pow_int((3.0 - 2.0 * x) * (3.0 - 2.0 * x), k);
    const double p12 = pow_int((1.0 - 2.0 * x) * (1.0 - 2.0 * x), k);
    return -(1.0 - x) * (1.0 - x) * p9 + (1.0 + x) * p32 - (1.0 + x) * (3.0 - x) +
           (3.0 - x) * p12;
}

namespace detail {

inline double monotone_kernel_series(double tau, double alpha) {
    // terms from k = 3 upward; factor_{k+1} = factor_k * tau^2/((2k+1)(2k+2))
    const double t2 = tau * tau;
    double factor = t2 * t2 * t2 / 720.0;
    double sum = 0.0;
    for (int k = 3; k <= 40; ++k) {
        const double term = (k % 2 == 0 ? 1.0 : -1.0) * kernel_series_weight(alpha, k) * factor;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        factor *= t2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
    return sum;
}

}  // namespace detail

// G(tau, alpha); series evaluation below tau = 0.2, direct four-cosine form above.
inline double monotone_kernel(double tau, double alpha) {
    if (std::abs(tau) < 0.2) return detail::monotone_kernel_series(tau, alpha);
    return (1.0 + alpha) * std::cos((3.0 - 2.0 * alpha) * tau) +
           (3.0 - alpha) * std::cos((1.0 - 2.0 * alpha) * tau) -
           (1.0 - alpha) * (1.0 - alpha) * std::cos(3.0 * tau) -
           (1.0 + alpha) * (3.0 - alpha) * std::cos(tau);
}

struct LemmaViolation {
    std::string check;  // which inequality failed
    double p1 = 0.0;    // x or tau
    double p2 = 0.0;    // k or alpha
    double lhs = 0.0;
    double rhs = 0.0;
};

struct LemmaReport {
    double p1_min = 0.0, p1_max = 0.0;
    double p2_min = 0.0, p2_max = 0.0;
    int k_min = 0, k_max = 0;
    long long points_checked = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::vector<LemmaViolation> violations;

    bool passed() const { return violations.empty(); }
};

inline std::vector<double> default_x_grid() {
    std::vector<double> xs;
    for (int i = 1; i <= 50; ++i) xs.push_back(i * 0.01);
    return xs;
}

inline std::vector<double> default_tau_grid() {
    std::vector<double> ts;
    const double step = std::numbers::pi / 1000.0;
    for (double t = step; t < std::numbers::pi / 2.0 - 1e-12; t += step) ts.push_back(t);
    return ts;
}

inline std::vector<double> default_alpha_grid() { return default_x_grid(); }

// Negativity H(x,k) < 0 and the two weight-decay inequalities
//   |H(x,k)| > |H(x,k+1)| / ((2k+1)(2k+2))   and the stronger
//   |H(x,k)| > |H(x,k+1)| / (3k^2)
// over x in the grid, k = 3..k_max.
inline LemmaReport verify_lemma1(std::span<const double> x_grid, int k_max) {
    LemmaReport rep;
    if (x_grid.empty() || k_max < 3) throw std::invalid_argument("need a grid and k_max >= 3");
    if (k_max > 59) throw std::invalid_argument("k_max must be <= 59 (weights need index k+1)");
    rep.p1_min = x_grid.front();
    rep.p1_max = x_grid.back();
    rep.k_min = 3;
    rep.k_max = k_max;
    for (double x : x_grid) {
        double hk = kernel_series_weight(x, 3);
        for (int k = 3; k <= k_max; ++k) {
            const double hk1 = kernel_series_weight(x, k + 1);
            ++rep.points_checked;
            if (hk >= 0.0)
                rep.violations.push_back({"negativity", x, static_cast<double>(k), hk, 0.0});
            rep.min_margin = std::min(rep.min_margin, -hk);
            const double lhs = std::abs(hk);
            const double rhs = std::abs(hk1) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
            if (lhs <= rhs)
                rep.violations.push_back({"weight_decay", x, static_cast<double>(k), lhs, rhs});
            rep.min_margin = std::min(rep.min_margin, lhs - rhs);
            const double rhs_strong = std::abs(hk1) / (3.0 * k * k);
            if (lhs <= rhs_strong)
                rep.violations.push_back({"weight_decay_strong", x, static_cast<double>(k), lhs, rhs_strong});
            hk = hk1;
        }
    }
    return rep;
}

// Positivity G(tau, alpha) > 0 and the two-term alternating-series lower
// bound G > (|H(alpha,4)|/8!) tau^6 (14/(5-4alpha+2alpha^2) - tau^2), which
// equals |H(alpha,3)| tau^6/6! - |H(alpha,4)| tau^8/8! exactly.
inline LemmaReport verify_lemma2(std::span<const double> tau_grid,
                                 std::span<const double> alpha_grid) {
    LemmaReport rep;
    if (tau_grid.empty() || alpha_grid.empty()) throw std::invalid_argument("empty grid");
    rep.p1_min = tau_grid.front();
    rep.p1_max = tau_grid.back();
    rep.p2_min = alpha_grid.front();
    rep.p2_max = alpha_grid.back();
    constexpr double kFact8 = 40320.0;
    for (double alpha : alpha_grid) {
        const double h4 = std::abs(kernel_series_weight(alpha, 4));
        for (double tau : tau_grid) {
            ++rep.points_checked;
            const double g = monotone_kernel(tau, alpha);
            if (g <= 0.0)
                rep.violations.push_back({"positivity", tau, alpha, g, 0.0});
            rep.min_margin = std::min(rep.min_margin, g);
            const double t2 = tau * tau;
            const double bound =
                h4 / kFact8 * t2 * t2 * t2 *
                (14.0 / (5.0 - 4.0 * alpha + 2.0 * alpha * alpha) - t2);
            if (g <= bound)
                rep.violations.push_back({"leibniz_bound", tau, alpha, g, bound});
            rep.min_margin = std::min(rep.min_margin, g - bound);
        }
    }
    return rep;
}

}  // namespace trifold
