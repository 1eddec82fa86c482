#pragma once

// The classical Suffridge coefficients sigma_{j,k}, the T-symmetric family
// built from products of sine ratios, and the corner point of the univalence
// domain that the n = 3 member of the family lands on.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trifold/polynomial.hpp"

namespace trifold {

// sin(pi * num / den) with the reduction done on the integers, so reflection
// symmetry is exact and arguments land in [0, pi/2] before std::sin runs.
inline double sin_pi_ratio(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    long long m = num % (2 * den);
    if (m < 0) m += 2 * den;
    double sign = 1.0;
    if (m >= den) {
        m -= den;
        sign = -1.0;
    }
    if (2 * m > den) m = den - m;
    return sign * std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(den));
}

// sigma_1..sigma_N of the degree-N Suffridge polynomial with family index k:
// sigma_{j,k} = (1 - (j-1)/N) sin(pi k j/(N+1)) / sin(pi k/(N+1)).
inline std::vector<double> suffridge_coefficients(int degree, int family_index) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (family_index < 1 || family_index > degree)
        throw std::invalid_argument("family index must satisfy 1 <= k <= N");
    std::vector<double> sigma;
    sigma.reserve(static_cast<std::size_t>(degree));
    sigma.push_back(1.0);
    const long long den = degree + 1;
    const double s1 = sin_pi_ratio(family_index, den);
    for (int j = 2; j <= degree; ++j) {
        const double taper = 1.0 - static_cast<double>(j - 1) / degree;
        sigma.push_back(taper * sin_pi_ratio(static_cast<long long>(family_index) * j, den) / s1);
    }
    return sigma;
}

// The T-symmetric family: coefficient of z^{1+(j-1)T} is
//   (1 - (j-1)T/N) * prod_{k=1}^{j-1} sin(pi(2+T(k-1))/D) / sin(pi T k/D)
// with N = 1+(n-1)T and D = N+1.  The product is accumulated left to right;
// every sine argument stays inside (0, pi) so the ratios are positive.
inline SymmetricPolynomial t_symmetric_polynomial(int fold_order, int term_count) {
    if (fold_order < 1) throw std::invalid_argument("fold order must be >= 1");
    if (term_count < 1) throw std::invalid_argument("term count must be >= 1");
    const long long T = fold_order;
    const long long n = term_count;
    const long long N = 1 + (n - 1) * T;
    const long long D = N + 1;  // = 2 + T(n-1)
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    coeffs.push_back(1.0);
    double prod = 1.0;
    for (long long j = 2; j <= n; ++j) {
        const long long k = j - 1;
        prod *= sin_pi_ratio(2 + T * (k - 1), D) / sin_pi_ratio(T * k, D);
        const double taper = 1.0 - static_cast<double>((j - 1) * T) / static_cast<double>(N);
        coeffs.push_back(taper * prod);
    }
    return SymmetricPolynomial(fold_order, std::move(coeffs));
}

struct CornerPoint {
    int fold_order = 1;
    double a = 0.0;  // 2(1+T)/(1+2T) * sin(pi/(2+2T))
    double b = 0.0;  // 1/(1+2T)
};

inline CornerPoint corner_point(int fold_order) {
    if (fold_order < 1) throw std::invalid_argument("fold order must be >= 1");
    const double T = fold_order;
    return {fold_order,
            2.0 * (1.0 + T) / (1.0 + 2.0 * T) * sin_pi_ratio(1, 2 + 2 * fold_order),
            1.0 / (1.0 + 2.0 * T)};
}

}  // namespace trifold
