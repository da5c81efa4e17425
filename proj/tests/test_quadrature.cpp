#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hyptrig/geometry.hpp"
#include "hyptrig/quadrature.hpp"
#include "hyptrig/rng.hpp"

using namespace hyptrig;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
const Integrand one = [](const Point&) { return cplx(1.0, 0.0); };
}  // namespace

TEST_CASE("1-D Gauss-Kronrod basics") {
    auto sq = [](double x) { return cplx(x * x, 0.0); };
    CHECK(integrate_interval(sq, 0.0, 1.0, 1e-12).value.real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    auto osc = [](double x) { return cplx(std::cos(40.0 * x), std::sin(40.0 * x)); };
    const auto r = integrate_interval(osc, 0.0, 2.0 * kPi, 1e-12);
    CHECK(std::abs(r.value) <= 1e-11);

    // integrable endpoint singularity x^{-0.9}, handled by the bisection
    // cascade toward 0
    auto sing = [](double x) { return cplx(std::pow(x, -0.9), 0.0); };
    CHECK(integrate_interval(sing, 0.0, 1.0, 1e-9).value.real() ==
          doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("area of the standard ideal triangle is pi") {
    QuadratureConfig cfg;
    cfg.tol = 3e-9;
    cfg.y_cap = 1e9;
    cfg.tail_exponent = 0.0;
    cfg.tail_constant = 1.0;
    const auto r = integrate_T0(one, cfg);
    CHECK(std::abs(r.value.real() - kPi) <= 1e-8);
    CHECK(std::abs(r.value.imag()) <= 1e-12);
    CHECK(r.error_estimate >= std::abs(r.value.real() - kPi));
}

TEST_CASE("odd integrands vanish on T_0") {
    QuadratureConfig cfg;
    cfg.tol = 1e-9;
    cfg.tail_exponent = 0.0;
    const auto r = integrate_T0(
        [](const Point& z) { return cplx(z.x / (1.0 + z.x * z.x) * std::exp(-z.y / 50.0), 0.0); },
        cfg);
    CHECK(std::abs(r.value) <= 1e-9);
}

TEST_CASE("squared-wave integrand reproduces pi/4") {
    // (y/(x^2+y^2))^2 integrated against dA equals F(2, 0)
    QuadratureConfig cfg;
    cfg.tol = 1e-9;
    cfg.y_cap = 1e5;
    cfg.tail_exponent = 2.0;
    cfg.tail_constant = 1.0;
    const auto r = integrate_T0(
        [](const Point& z) {
            const double q = z.y / (z.x * z.x + z.y * z.y);
            return cplx(q * q, 0.0);
        },
        cfg);
    CHECK(r.value.real() == doctest::Approx(kPi / 4.0).epsilon(1e-8));
}

TEST_CASE("tail contract") {
    QuadratureConfig cfg;
    cfg.tail_exponent = -1.0;
    CHECK_THROWS_AS(integrate_T0(one, cfg), TailDivergent);
    cfg.tail_exponent = -1.5;
    CHECK_THROWS_AS(tail_bound(cfg), TailDivergent);

    // decay min{y,1/y}^{1/2}: doubling the cap moves the value by less than
    // the documented tail bound of the smaller cap
    auto f = [](const Point& z) {
        return cplx(std::sqrt(std::min(z.y, 1.0 / z.y)), 0.0);
    };
    QuadratureConfig a;
    a.tol = 1e-10;
    a.y_cap = 100.0;
    a.tail_exponent = 0.5;
    a.tail_constant = 1.0;
    QuadratureConfig b = a;
    b.y_cap = 200.0;
    const double va = integrate_T0(f, a).value.real();
    const double vb = integrate_T0(f, b).value.real();
    CHECK(std::abs(vb - va) <= tail_bound(a));
    CHECK(vb > va);  // more mass included
}

TEST_CASE("1-D budget exhaustion is reported") {
    // 1/x is not integrable at 0: the cascade must give up loudly
    bool threw = false;
    try {
        integrate_interval([](double x) { return cplx(1.0 / x, 0.0); }, 0.0, 1.0, 1e-10, 200);
    } catch (const MaxDepthExceeded& e) {
        threw = true;
        CHECK(e.error_estimate > 1e-10);
    }
    CHECK(threw);
}

TEST_CASE("config validation") {
    QuadratureConfig bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(integrate_T0(one, bad), Error);
    CHECK_THROWS_AS(
        integrate_geodesic_triangle(one, GeodesicTriangle(Point(0, 1), Point(1, 1), Point(0, 2)),
                                    bad),
        Error);
    bad.tol = 1e-8;
    bad.max_depth = 0;
    CHECK_THROWS_AS(integrate_T0(one, bad), Error);
    bad.max_depth = 40;
    bad.y_cap = 0.5;
    CHECK_THROWS_AS(integrate_T0(one, bad), Error);
}

TEST_CASE("subdivision budget exhaustion is reported") {
    QuadratureConfig cfg;
    cfg.tol = 1e-15;
    cfg.max_depth = 2;
    bool threw = false;
    try {
        integrate_T0([](const Point& z) { return cplx(std::cos(15.0 * z.x) / (z.y + 0.01), 0.0); },
                     cfg);
    } catch (const MaxDepthExceeded& e) {
        threw = true;
        CHECK(e.error_estimate > cfg.tol);
    }
    CHECK(threw);
}

TEST_CASE("additivity across the imaginary axis") {
    QuadratureConfig cfg;
    cfg.tol = 1e-9;
    cfg.tail_exponent = 0.0;
    auto f = [](const Point& z) {
        return cplx(std::cos(z.x + 0.3) / (1.0 + std::pow(std::log(z.y), 2.0)), 0.0);
    };
    const double whole = integrate_T0(f, cfg).value.real();
    const double left = integrate_T0_region(f, cfg, -1.0, 0.0).value.real();
    const double right = integrate_T0_region(f, cfg, 0.0, 1.0).value.real();
    CHECK(std::abs(left + right - whole) <= 2.0 * cfg.tol);
}

TEST_CASE("ideal triangle integral: orientation and equivariance") {
    QuadratureConfig cfg;
    cfg.tol = 1e-8;
    cfg.y_cap = 1e9;
    cfg.tail_exponent = 0.0;
    cfg.tail_constant = 1.0;

    const IdealTriple pos(BoundaryPoint::finite(-1.0), BoundaryPoint::finite(1.0),
                          BoundaryPoint::infinity());
    const IdealTriple neg(BoundaryPoint::finite(1.0), BoundaryPoint::finite(-1.0),
                          BoundaryPoint::infinity());
    CHECK(integrate_ideal_triangle(one, pos, cfg).value.real() ==
          doctest::Approx(kPi).epsilon(1e-8));
    CHECK(integrate_ideal_triangle(one, neg, cfg).value.real() ==
          doctest::Approx(-kPi).epsilon(1e-8));

    // change of variables: the g-image triple against f composed with g
    Rng rng(271);
    auto f = [](const Point& z) {
        const double d = hyperbolic_distance(z, Point(0.4, 1.1));
        return cplx(std::exp(-d * d), 0.0);
    };
    for (int k = 0; k < 5; ++k) {
        const MobiusTransform g = random_isometry(rng);
        const IdealTriple moved(mobius_apply_boundary(g, pos.v0()),
                                mobius_apply_boundary(g, pos.v1()),
                                mobius_apply_boundary(g, pos.v2()));
        const double lhs = integrate_ideal_triangle(f, moved, cfg).value.real();
        const double rhs =
            integrate_ideal_triangle(
                [&](const Point& z) { return f(mobius_apply(g, z)); }, pos, cfg)
                .value.real();
        CHECK(std::abs(lhs - rhs) <= 2.0 * cfg.tol);
    }
}

TEST_CASE("geodesic triangle integral") {
    QuadratureConfig cfg;
    cfg.tol = 1e-9;

    CHECK(integrate_geodesic_triangle(one, GeodesicTriangle(Point(0, 1), Point(0, 1), Point(1, 1)),
                                      cfg)
              .value.real() == 0.0);

    // Gauss-Bonnet: area equals the angle defect
    const GeodesicTriangle t(Point(-0.7, 0.8), Point(1.1, 0.6), Point(0.2, 2.3));
    const auto ang = triangle_angles(t);
    const double defect = kPi - ang[0] - ang[1] - ang[2];
    CHECK(integrate_geodesic_triangle(one, t, cfg).value.real() ==
          doctest::Approx(defect).epsilon(1e-9));

    // shrinking triangles: areas decrease to zero
    double prev = kPi;
    for (double h : {1.0, 0.3, 0.1, 0.03, 0.01}) {
        const GeodesicTriangle small(Point(-h, 1.0), Point(h, 1.0), Point(0.0, 1.0 + h));
        const double area = integrate_geodesic_triangle(one, small, cfg).value.real();
        CHECK(area > 0.0);
        CHECK(area < prev);
        prev = area;
    }
    CHECK(prev <= 1e-4);

    // isometry invariance
    Rng rng(57);
    auto f = [](const Point& z) { return cplx(1.0 / (1.0 + z.x * z.x + std::log(z.y) * std::log(z.y)), 0.0); };
    for (int k = 0; k < 5; ++k) {
        const MobiusTransform g = random_isometry(rng);
        const GeodesicTriangle tri(random_point(rng), random_point(rng), random_point(rng));
        if (triangle_orientation(tri) == 0) continue;
        const GeodesicTriangle moved(mobius_apply(g, tri.p0), mobius_apply(g, tri.p1),
                                     mobius_apply(g, tri.p2));
        const double lhs = integrate_geodesic_triangle(f, moved, cfg).value.real();
        const double rhs =
            integrate_geodesic_triangle([&](const Point& z) { return f(mobius_apply(g, z)); }, tri,
                                        cfg)
                .value.real();
        CHECK(std::abs(lhs - rhs) <= 2.0 * cfg.tol);
    }
}

TEST_CASE("large near-ideal geodesic triangles approach area pi") {
    QuadratureConfig cfg;
    cfg.tol = 1e-7;
    const double e = std::exp(-20.0);
    const GeodesicTriangle big(Point(-1.0 + e, e), Point(1.0 - e, e), Point(0.0, 1.0 / e));
    const double area = integrate_geodesic_triangle(one, big, cfg).value.real();
    CHECK(area == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(area < kPi);
}

TEST_CASE("norm bound for bounded integrands") {
    QuadratureConfig cfg;
    cfg.tol = 1e-7;
    cfg.y_cap = 1e8;
    cfg.tail_exponent = 0.0;
    cfg.tail_constant = 0.5;
    Rng rng(404);
    auto f = [](const Point& z) { return cplx(0.5 * std::cos(3.0 * z.x) * std::cos(std::log(z.y)), 0.0); };
    for (int k = 0; k < 10; ++k) {
        double v0 = rng.cauchy(), v1 = rng.cauchy(), v2 = rng.cauchy();
        if (std::abs(v0 - v1) < 1e-2 || std::abs(v1 - v2) < 1e-2 || std::abs(v0 - v2) < 1e-2)
            continue;
        const IdealTriple t(BoundaryPoint::finite(v0), BoundaryPoint::finite(v1),
                            BoundaryPoint::finite(v2));
        const double v = integrate_ideal_triangle(f, t, cfg).value.real();
        CHECK(std::abs(v) <= kPi * 0.5 + cfg.tol);
    }
}
