#include "trifold/extremal.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "trifold/suffridge.hpp"

using namespace trifold;

TEST_CASE("objective values", "[extremal]") {
    const Objectives o0 = objectives(0.0, 0.0);
    CHECK(o0.l1 == 0.0);
    CHECK(o0.l2 == 1.0);
    CHECK(o0.l3 == 1.0);

    const CornerPoint c = corner_point(1);
    const Objectives oc = objectives(c.a, c.b);
    CHECK(oc.l2 == Catch::Approx(2.2761423749153967).epsilon(1e-12));
    CHECK(oc.l3 == Catch::Approx(0.1715728752538099).epsilon(1e-10));
    // tan^2(pi/8)
    CHECK(oc.l3 == Catch::Approx(std::pow(std::tan(std::numbers::pi / 8.0), 2)).epsilon(1e-12));

    CHECK_THROWS_AS(objectives(-0.5, -0.5), std::domain_error);
}

TEST_CASE("closed-form extrema", "[extremal]") {
    const ClosedFormExtrema e1 = closed_form_extrema(1);
    CHECK(e1.max_l1 == Catch::Approx(0.9428090415820634).epsilon(1e-12));
    CHECK(e1.max_l2 == Catch::Approx(2.2761423749153967).epsilon(1e-12));
    CHECK(e1.min_l3 == Catch::Approx(0.1715728752538099).epsilon(1e-10));

    CHECK(closed_form_extrema(2).min_l3 == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(closed_form_extrema(2).max_l2 == Catch::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("two algebraic routes to the minimum objective agree", "[extremal]") {
    // ((1-s)/cos)^2 = (1-s)/(1+s)
    for (int T = 1; T <= 10; ++T) {
        const double s = std::sin(std::numbers::pi / (2.0 + 2.0 * T));
        const double direct = closed_form_extrema(T).min_l3;
        CHECK(direct == Catch::Approx((1.0 - s) / (1.0 + s)).epsilon(1e-12));
    }
}

TEST_CASE("the printed single-fraction shortcut differs by exactly one", "[extremal]") {
    // 1 + a0 + b0 versus (1 + 2(1+T) sin(pi/(2+2T)))/(1+2T): the latter drops
    // the leading unit; their difference is identically 1.
    for (int T = 1; T <= 10; ++T) {
        const double s = std::sin(std::numbers::pi / (2.0 + 2.0 * T));
        const double fraction = (1.0 + 2.0 * (1.0 + T) * s) / (1.0 + 2.0 * T);
        CHECK(closed_form_extrema(T).max_l2 - fraction == Catch::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("objective rewrite used by the monotonicity argument", "[extremal]") {
    // (1-x+y)/(1+x+y) = 1 - 2/(1 + (1+y)/x) for x > 0
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ux(0.01, 1.0), uy(-0.4, 0.4);
    for (int rep = 0; rep < 200; ++rep) {
        const double x = ux(rng), y = uy(rng);
        const double lhs = (1.0 - x + y) / (1.0 + x + y);
        const double rhs = 1.0 - 2.0 / (1.0 + (1.0 + y) / x);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
    }
}

TEST_CASE("monotonicity along the curved arc", "[extremal]") {
    for (int T : {1, 2, 5, 10}) {
        const MonotonicityCheck mc = monotonicity_check(T, 1000);
        CHECK(mc.passed());
        CHECK(mc.min_x_step > 0.0);
        CHECK(mc.min_y_step > 0.0);
        CHECK(mc.max_ratio_step < 0.0);
    }
    CHECK_THROWS_AS(monotonicity_check(1, 50), std::invalid_argument);
}

TEST_CASE("objectives are monotone along the straight segments", "[extremal]") {
    const int T = 3;
    const CornerPoint c = corner_point(T);
    const int n = 200;
    // top segment, traversed with increasing x
    for (int i = 0; i + 1 < n; ++i) {
        const double t0 = -c.a + 2.0 * c.a * i / (n - 1.0);
        const double t1 = -c.a + 2.0 * c.a * (i + 1) / (n - 1.0);
        const Objectives o0 = objectives(t0, c.b), o1 = objectives(t1, c.b);
        CHECK(o1.l1 > o0.l1);
        CHECK(o1.l2 > o0.l2);
        CHECK(o1.l3 < o0.l3);
    }
    // right line segment
    const double t2max = 4.0 / (2.0 + 3.0 * T);
    for (int i = 0; i + 1 < n; ++i) {
        const double t0 = t2max * i / (n - 1.0);
        const double t1 = t2max * (i + 1) / (n - 1.0);
        const Point p0 = gamma2_point(T, +1, t0), p1 = gamma2_point(T, +1, t1);
        const Objectives o0 = objectives(p0.x, p0.y), o1 = objectives(p1.x, p1.y);
        CHECK(o1.l1 > o0.l1);
        CHECK(o1.l2 > o0.l2);
        CHECK(o1.l3 < o0.l3);
    }
}

TEST_CASE("grid oracle tracks the closed forms at moderate resolution", "[extremal]") {
    const int T = 1, R = 120;
    const GridSearchResult g = grid_search_extrema(T, R);
    const ClosedFormExtrema cf = closed_form_extrema(T);
    const double lip[3] = {1.0, 2.0, 2.0};
    CHECK(std::abs(g.max_l1.value - cf.max_l1) <= 2.0 * g.cell_diagonal * lip[0]);
    CHECK(std::abs(g.max_l2.value - cf.max_l2) <= 2.0 * g.cell_diagonal * lip[1]);
    CHECK(std::abs(g.min_l3.value - cf.min_l3) <= 2.0 * g.cell_diagonal * lip[2]);

    const CornerPoint c = corner_point(T);
    CHECK(dist(g.max_l2.at, {c.a, c.b}) <= g.cell_diagonal);
    CHECK(g.contained_cells > 0);
    CHECK_FALSE(g.near_boundary.empty());

    // interior extrema exist and are dominated by the overall ones
    CHECK(g.interior_max_l1.value <= g.max_l1.value);
    CHECK(g.interior_max_l2.value <= g.max_l2.value);
    CHECK(g.interior_min_l3.value >= g.min_l3.value);
}

TEST_CASE("grid extrema happen next to the boundary", "[extremal]") {
    // the objectives have no interior stationary points, so the winning
    // cells must hug the polyline
    const GridSearchResult g = grid_search_extrema(2, 100);
    const DomainBoundary bd = boundary_polyline(2, 256);
    for (const GridExtremum* e : {&g.max_l1, &g.max_l2, &g.min_l3})
        CHECK(distance_to_polyline(bd.polygon, e->at.x, e->at.y) < 2.0 * g.cell_diagonal);
    CHECK_THROWS_AS(grid_search_extrema(1, 10), std::invalid_argument);
}
