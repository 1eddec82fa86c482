#pragma once

// Large-n behaviour of the T-symmetric family: the covering ratio
// |S(e^{i pi/T})| / S(1) decays like c_T n^{-2/T} and the maximum modulus
// S(1) grows like n^{2/T}/(c_T 2^{2/T}); the samples below normalize both
// so they approach 1.

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "trifold/gammafn.hpp"
#include "trifold/polynomial.hpp"
#include "trifold/suffridge.hpp"

namespace trifold {

// c_T = pi^{2/T - 1} * Gamma(1/T + 1/2)^2
inline double covering_constant(int fold_order) {
    if (fold_order < 1) throw std::invalid_argument("fold order must be >= 1");
    const double g = lanczos_gamma(1.0 / fold_order + 0.5);
    return std::pow(std::numbers::pi, 2.0 / fold_order - 1.0) * g * g;
}

struct AsymptoticSample {
    int fold_order = 1;
    int term_count = 0;
    double ratio_cover = 0.0;       // |S(e^{i pi/T})| / S(1)
    double max_mod = 0.0;           // S(1)
    double normalized_cover = 0.0;  // ratio_cover * n^{2/T} / c_T
    double normalized_max = 0.0;    // max_mod * c_T * 2^{2/T} / n^{2/T}
};

inline AsymptoticSample asymptotic_sample(int fold_order, int term_count) {
    const SymmetricPolynomial p = t_symmetric_polynomial(fold_order, term_count);
    const double c = covering_constant(fold_order);
    const double max_mod = p(Complex{1.0, 0.0}).real();
    const double cover = std::abs(p(std::polar(1.0, std::numbers::pi / fold_order)));
    const double ratio = cover / max_mod;
    const double growth = std::pow(static_cast<double>(term_count), 2.0 / fold_order);
    return {fold_order,
            term_count,
            ratio,
            max_mod,
            ratio * growth / c,
            max_mod * c * std::pow(2.0, 2.0 / fold_order) / growth};
}

inline std::vector<AsymptoticSample> asymptotic_trend(int fold_order,
                                                      std::span<const int> term_counts) {
    std::vector<AsymptoticSample> out;
    out.reserve(term_counts.size());
    int prev = 0;
    for (int n : term_counts) {
        if (n < 3 || n <= prev) throw std::invalid_argument("term counts must be increasing and >= 3");
        prev = n;
        out.push_back(asymptotic_sample(fold_order, n));
    }
    return out;
}

}  // namespace trifold
