#include "trifold/univalence.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trifold/domain.hpp"
#include "trifold/suffridge.hpp"

using namespace trifold;

TEST_CASE("identity map is univalent", "[univalence]") {
    const UnivalenceReport rep = is_univalent_trinomial(1, 0.0, 0.0, 256);
    CHECK(rep.verdict == Verdict::Univalent);
    CHECK(std::isinf(rep.min_derivative_root_modulus));
    CHECK(rep.min_boundary_self_distance > 0.0);
}

TEST_CASE("corner trinomials scaled inward are univalent", "[univalence]") {
    for (int T = 1; T <= 6; ++T) {
        const CornerPoint c = corner_point(T);
        const UnivalenceReport rep = is_univalent_trinomial(T, 0.999 * c.a, 0.999 * c.b, 1024);
        CHECK(rep.verdict == Verdict::Univalent);
        CHECK(rep.min_derivative_root_modulus >= rep.test_radius - 1e-9);
        // cross-check with the domain polyline
        CHECK(contains(T, 0.999 * c.a, 0.999 * c.b));
    }
}

TEST_CASE("corner trinomials scaled outward are not univalent", "[univalence]") {
    for (int T = 1; T <= 6; ++T) {
        const CornerPoint c = corner_point(T);
        const UnivalenceReport rep = is_univalent_trinomial(T, 1.05 * c.a, 1.05 * c.b, 1024);
        CHECK(rep.verdict == Verdict::NotUnivalent);
        CHECK_FALSE(contains(T, 1.05 * c.a, 1.05 * c.b));
    }
}

TEST_CASE("the corner itself certifies as univalent on the ladder", "[univalence]") {
    for (int T = 1; T <= 4; ++T) {
        const CornerPoint c = corner_point(T);
        const UnivalenceReport rep = is_univalent_trinomial(T, c.a, c.b, 1024);
        CHECK(rep.verdict == Verdict::Univalent);
    }
}

TEST_CASE("witnesses persist as the radius grows", "[univalence]") {
    // not_univalent at r1 must imply not_univalent at every r2 > r1
    std::mt19937 rng(20240812);
    std::uniform_real_distribution<double> ux(-1.4, 1.4), uy(-0.7, 0.7);
    const DomainBoundary bd = boundary_polyline(1, 256);
    int tested = 0;
    while (tested < 50) {
        const double a = ux(rng), b = uy(rng);
        if (contains(bd, a, b)) continue;
        if (distance_to_polyline(bd.polygon, a, b) < 0.02) continue;
        ++tested;
        Verdict prev = Verdict::Univalent;
        for (double r : kRadiusLadder) {
            const Verdict v = univalence_report_at_radius(1, a, b, r, 512, false).verdict;
            if (prev == Verdict::NotUnivalent) CHECK(v == Verdict::NotUnivalent);
            prev = v;
        }
    }
}

TEST_CASE("verdicts are invariant under the coefficient reflection", "[univalence]") {
    // (a, b) -> (-a, b) corresponds to z -> -F(-z) for odd T and to a
    // rotation conjugation for even T; either way univalence is preserved.
    const Point probes[] = {{0.5, 0.1}, {0.8, 0.2}, {0.3, -0.2}, {1.0, 0.3}, {0.2, 0.31}};
    for (int T = 1; T <= 4; ++T) {
        for (const Point& p : probes) {
            const Verdict v1 = is_univalent_trinomial(T, p.x, p.y, 512).verdict;
            const Verdict v2 = is_univalent_trinomial(T, -p.x, p.y, 512).verdict;
            CHECK(v1 == v2);
        }
    }
}

TEST_CASE("oracle verdict agrees with the domain polyline on a coarse grid", "[univalence]") {
    // the full 60x60 sweep runs in the acceptance suite; spot-check here
    const int T = 1;
    const DomainBoundary bd = boundary_polyline(T, 256);
    const CornerPoint c = corner_point(T);
    const int n = 14;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = -c.a + (i + 0.5) * (2.0 * c.a / n);
            const double y = -c.b + (j + 0.5) * (2.0 * c.b / n);
            if (distance_to_polyline(bd.polygon, x, y) <= 0.01) continue;
            const bool inside = contains(bd, x, y);
            const Verdict v = univalence_report_at_radius(T, x, y, 0.999, 1024, false).verdict;
            CHECK((v == Verdict::Univalent) == inside);
        }
    }
}
