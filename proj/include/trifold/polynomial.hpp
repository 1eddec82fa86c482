#pragma once

// Real-coefficient polynomials with T-fold rotational symmetry,
//   F(z) = z + a_2 z^{1+T} + ... + a_n z^{1+(n-1)T},
// their evaluation and differentiation, and the closed-form zeros of a
// trinomial derivative (a quadratic in w = z^T).

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace trifold {

using Complex = std::complex<double>;

inline Complex ipow(Complex z, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

class SymmetricPolynomial {
public:
    // coeffs holds a_1..a_n indexed by the symmetric index j; a_1 must be 1.
    SymmetricPolynomial(int fold_order, std::vector<double> coeffs)
        : fold_order_(fold_order), coeffs_(std::move(coeffs)) {
        if (fold_order_ < 1) throw std::invalid_argument("fold order must be >= 1");
        if (coeffs_.empty() || coeffs_.front() != 1.0)
            throw std::invalid_argument("first coefficient must be exactly 1");
    }

    static SymmetricPolynomial trinomial(int fold_order, double a, double b) {
        return SymmetricPolynomial(fold_order, {1.0, a, b});
    }

    int fold_order() const { return fold_order_; }
    int term_count() const { return static_cast<int>(coeffs_.size()); }
    int degree() const { return 1 + (term_count() - 1) * fold_order_; }
    int exponent(int j) const { return 1 + (j - 1) * fold_order_; }
    double coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j) - 1); }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Horner in w = z^T; exponents are 1 (mod T) so F(z) = z * P(z^T).
    Complex operator()(Complex z) const {
        const Complex w = ipow(z, fold_order_);
        Complex acc{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * w + *it;
        return z * acc;
    }

private:
    int fold_order_;
    std::vector<double> coeffs_;
};

// Dense real polynomial indexed by exponent; the shape derivatives take.
class DensePolynomial {
public:
    explicit DensePolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int exponent) const {
        if (exponent < 0 || exponent > degree()) return 0.0;
        return coeffs_[static_cast<std::size_t>(exponent)];
    }
    const std::vector<double>& coeffs() const { return coeffs_; }

    Complex operator()(Complex z) const {
        Complex acc{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

private:
    std::vector<double> coeffs_;  // coeffs_[e] multiplies z^e
};

inline DensePolynomial derivative(const SymmetricPolynomial& p) {
    std::vector<double> d(static_cast<std::size_t>(p.degree()), 0.0);
    for (int j = 1; j <= p.term_count(); ++j) {
        const int e = p.exponent(j);
        d[static_cast<std::size_t>(e - 1)] = e * p.coeff(j);
    }
    return DensePolynomial(std::move(d));
}

struct PolarRoot {
    double modulus = 0.0;
    double argument = 0.0;  // principal argument in [0, 2*pi)
};

namespace detail {

inline void append_fold_roots(std::vector<PolarRoot>& out, Complex w, int fold_order) {
    const double rho = std::pow(std::abs(w), 1.0 / fold_order);
    double phi = std::arg(w);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (phi < 0.0) phi += two_pi;
    for (int l = 0; l < fold_order; ++l) {
        double theta = (phi + two_pi * l) / fold_order;
        theta = std::fmod(theta, two_pi);
        if (theta < 0.0) theta += two_pi;
        out.push_back({rho, theta});
    }
}

}  // namespace detail

// Zeros of F'(z) = 1 + a(1+T) z^T + b(1+2T) z^{2T}: solve the quadratic in
// w = z^T and fan out every T-th root of each solution.  The quadratic uses
// the cancellation-free form (larger root first, companion from the product),
// which matters because the extremal family sits exactly at the transition
// where the linear coefficient approaches the discriminant boundary.
inline std::vector<PolarRoot> trinomial_derivative_roots(int fold_order, double a, double b) {
    if (fold_order < 1) throw std::invalid_argument("fold order must be >= 1");
    const double qa = b * (1 + 2 * fold_order);
    const double qb = a * (1 + fold_order);
    std::vector<PolarRoot> roots;
    if (qa == 0.0 && qb == 0.0) return roots;  // derivative identically 1

    if (qa == 0.0) {  // linear: qb*w + 1 = 0
        detail::append_fold_roots(roots, Complex{-1.0 / qb, 0.0}, fold_order);
        return roots;
    }

    const double disc = qb * qb - 4.0 * qa;
    if (disc >= 0.0) {
        // q != 0 always: the constant term is 1, so no root sits at w = 0
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (qb + std::copysign(sq, qb == 0.0 ? 1.0 : qb));
        detail::append_fold_roots(roots, Complex{q / qa, 0.0}, fold_order);
        detail::append_fold_roots(roots, Complex{1.0 / q, 0.0}, fold_order);
    } else {
        const double re = -qb / (2.0 * qa);
        const double im = std::sqrt(-disc) / (2.0 * qa);
        detail::append_fold_roots(roots, Complex{re, im}, fold_order);
        detail::append_fold_roots(roots, Complex{re, -im}, fold_order);
    }
    return roots;
}

}  // namespace trifold
