#include "trifold/suffridge.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "trifold/polynomial.hpp"

using namespace trifold;

TEST_CASE("classical coefficients at small degree", "[suffridge]") {
    const auto s31 = suffridge_coefficients(3, 1);
    REQUIRE(s31.size() == 3);
    CHECK(s31[0] == 1.0);
    CHECK(s31[1] == Catch::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
    CHECK(s31[2] == Catch::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(suffridge_coefficients(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(suffridge_coefficients(3, 4), std::invalid_argument);
}

TEST_CASE("leading coefficient has modulus 1/N and alternating sign", "[suffridge]") {
    // The sine-ratio formula makes sigma_{N,k} = (-1)^{k+1}/N: the k = 1
    // member (all-positive coefficients) has leading +1/N.
    for (int N = 2; N <= 30; ++N) {
        for (int k = 1; k <= N; ++k) {
            const auto sigma = suffridge_coefficients(N, k);
            const double expected = ((k + 1) % 2 == 0 ? 1.0 : -1.0) / N;
            CHECK(sigma.back() == Catch::Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("k = n member of degree 2n-1 is an odd polynomial", "[suffridge]") {
    for (int n = 2; n <= 8; ++n) {
        const int N = 2 * n - 1;
        const auto sigma = suffridge_coefficients(N, n);
        for (int j = 2; j <= N; j += 2) CHECK(std::abs(sigma[j - 1]) < 1e-12);
    }
}

TEST_CASE("T = 1 family reduces to the classical k = 1 polynomials", "[suffridge]") {
    for (int n = 2; n <= 10; ++n) {
        const SymmetricPolynomial p = t_symmetric_polynomial(1, n);
        const auto sigma = suffridge_coefficients(n, 1);
        REQUIRE(p.term_count() == n);
        for (int j = 1; j <= n; ++j)
            CHECK(p.coeff(j) == Catch::Approx(sigma[j - 1]).margin(1e-12));
    }
}

TEST_CASE("leading coefficient equals 1/(1+(n-1)T)", "[suffridge]") {
    for (int T = 1; T <= 10; ++T) {
        for (int n = 2; n <= 50; ++n) {
            const SymmetricPolynomial p = t_symmetric_polynomial(T, n);
            const double lead = p.coeff(n);
            const double expected = 1.0 / (1.0 + (n - 1.0) * T);
            CHECK(std::abs(lead - expected) <= 1e-14 * expected * (1.0 + (n - 1.0) * T));
            CHECK(std::abs(lead - expected) <= 1e-14);
        }
    }
}

TEST_CASE("T = 2 family matches -i S_{n,2n-1}(iz)", "[suffridge]") {
    // i^{j'-1} at the odd exponents j' = 2j-1 contributes (-1)^{j-1}.
    for (int n = 2; n <= 8; ++n) {
        const int N = 2 * n - 1;
        const SymmetricPolynomial p = t_symmetric_polynomial(2, n);
        const auto sigma = suffridge_coefficients(N, n);
        for (int j = 1; j <= n; ++j) {
            const double expected = sigma[2 * j - 2] * ((j % 2 == 1) ? 1.0 : -1.0);
            CHECK(p.coeff(j) == Catch::Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("corner point closed forms", "[suffridge]") {
    const CornerPoint c1 = corner_point(1);
    CHECK(c1.a == Catch::Approx(0.9428090415820634).epsilon(1e-14));
    CHECK(c1.b == Catch::Approx(1.0 / 3.0).epsilon(1e-15));

    const CornerPoint c2 = corner_point(2);
    CHECK(c2.a == Catch::Approx(0.6).epsilon(1e-14));
    CHECK(c2.b == Catch::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("corner point is the n = 3 member of the family", "[suffridge]") {
    for (int T = 1; T <= 10; ++T) {
        const SymmetricPolynomial p = t_symmetric_polynomial(T, 3);
        const CornerPoint c = corner_point(T);
        CHECK(p.coeff(2) == Catch::Approx(c.a).epsilon(1e-13));
        CHECK(p.coeff(3) == Catch::Approx(c.b).epsilon(1e-13));
    }
}

TEST_CASE("derivative zeros of the n = 3 member sit on the unit circle", "[suffridge]") {
    for (int T = 1; T <= 10; ++T) {
        const CornerPoint c = corner_point(T);
        const auto roots = trinomial_derivative_roots(T, c.a, c.b);
        REQUIRE(roots.size() == static_cast<std::size_t>(2 * T));
        for (const PolarRoot& r : roots) CHECK(std::abs(r.modulus - 1.0) < 1e-10);
    }
}

TEST_CASE("exact sine-ratio reduction", "[suffridge]") {
    CHECK(sin_pi_ratio(1, 2) == 1.0);
    CHECK(sin_pi_ratio(1, 6) == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(sin_pi_ratio(5, 6) == Catch::Approx(0.5).epsilon(1e-15));  // reflection is exact
    CHECK(sin_pi_ratio(7, 6) == Catch::Approx(-0.5).epsilon(1e-15));
    CHECK(sin_pi_ratio(-1, 6) == Catch::Approx(-0.5).epsilon(1e-15));
    CHECK(sin_pi_ratio(12, 6) == 0.0);
}
