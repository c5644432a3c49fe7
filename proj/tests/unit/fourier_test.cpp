#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectral/fourier.hpp"

using namespace spectral;

namespace {

const ConvexPolygon h0({{0.5, -0.5}, {0.5, 0.5}, {0.0, 0.75}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, -0.75}});

ConvexBody disc_body(double r = 0.5) {
  return ConvexBody(validate_graph_body(-r, r, HeightFunction::semicircle(0, r), HeightFunction::semicircle(0, r)));
}

// First positive zero of J1.
constexpr double j11 = 3.8317059702075123156;

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("ft_square values") {
    CHECK(ft_square({0, 0}) == 1.0);
    CHECK(std::abs(ft_square({1, 0.3})) < 1e-16);
    CHECK(ft_square({0.5, 0.5}) == doctest::Approx(4.0 / (oracle::pi * oracle::pi)).epsilon(1e-15));
    for (double y : {0.1, 0.7, 2.5, -3.3})
      CHECK(ft_square({0.0, y}) == doctest::Approx(std::sin(oracle::pi * y) / (oracle::pi * y)).epsilon(1e-15));
  }

  TEST_CASE("sinc near zero") {
    for (double t : {0.0, 1e-9, 1e-6, 5e-5, 9.9e-5, 1e-4, 1e-3})
      CHECK(std::abs(sinc(t) - (t == 0.0 ? 1.0 : std::sin(t) / t)) <= 2.3e-16);
  }

  TEST_CASE("square closed form against the product formula") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-20.0, 20.0), tiny(-1e-5, 1e-5);
    const ConvexPolygon sq = axis_square();
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      Point2 xi{u(rng), u(rng)};
      if (i % 5 == 0) xi.x = std::round(xi.x) + tiny(rng);
      if (i % 7 == 0) xi.y = tiny(rng);
      worst = std::max(worst, std::abs(ft_polygon(sq, xi).value - oracle::square_ft(xi)));
    }
    CHECK(worst < 1e-12);
    CHECK(std::abs(ft_polygon(sq, {}).value - 1.0) < 1e-15);
  }

  TEST_CASE("polygon closed form against Gauss-Legendre triangles") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int t = 0; t < 10; ++t) {
      const auto v = oracle::random_convex_polygon(rng, 9);
      const ConvexPolygon p(v);
      std::vector<Point2> ccw(p.vertices().begin(), p.vertices().end());
      for (int k = 0; k < 10; ++k) {
        const Point2 xi{u(rng) / 1.5, u(rng) / 1.5};
        const Complex ref = oracle::polygon_ft(ccw, xi);
        CHECK(std::abs(ft_polygon(p, xi).value - ref) < 1e-10);
      }
      CHECK(std::abs(ft_polygon(p, {}).value - area(p)) < 1e-14);
    }
  }

  TEST_CASE("quadrature path agrees with the closed form") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-7.0, 7.0);
    for (int t = 0; t < 5; ++t) {
      const ConvexPolygon p(oracle::random_convex_polygon(rng, 8));
      for (int k = 0; k < 10; ++k) {
        const Point2 xi{u(rng), u(rng)};
        const auto a = ft_polygon(p, xi);
        const auto b = ft_quadrature(ConvexBody(p), xi);
        CHECK(b.converged);
        CHECK(std::abs(a.value - b.value) <= a.err + b.err + 1e-12);
      }
    }
    const auto sq = ft_quadrature(ConvexBody(axis_square()), {0.5, 0.5});
    CHECK(std::abs(sq.value - 4.0 / (oracle::pi * oracle::pi)) < 1e-11);
    CHECK(sq.method == EvalMethod::quadrature);
  }

  TEST_CASE("H0 vanishes on its dual lattice") {
    CHECK(std::abs(ft_polygon(h0, {1.0, -0.4}).value) < 1e-10);
    CHECK(std::abs(ft_quadrature(ConvexBody(h0), {1.0, -0.4}).value) < 1e-10);
    CHECK(std::abs(ft_polygon(h0, {0.0, 0.8}).value) < 1e-10);
    CHECK(std::abs(ft_polygon(h0, {0.0, 0.4}).value) > 1e-3);
  }

  TEST_CASE("disc against the Bessel transform") {
    const ConvexBody disc = disc_body();
    for (double rho : {0.0, 0.3, 1.0, 2.7, 7.5}) {
      for (double ang : {0.0, 0.4, 1.3}) {
        const Point2 xi{rho * std::cos(ang), rho * std::sin(ang)};
        const auto s = ft(disc, xi);
        CHECK(std::abs(s.value - oracle::disc_ft(0.5, rho)) < 1e-10);
      }
    }
    CHECK(j11 / oracle::pi == doctest::Approx(1.2197).epsilon(1e-4));
    CHECK(std::abs(ft(disc, {j11 / oracle::pi, 0.0}).value) < 1e-10);
    CHECK(std::abs(ft(disc, {}).value - oracle::pi / 4.0) < 1e-12);
  }

  TEST_CASE("conjugate symmetry, realness and translation") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    const ConvexPolygon p(oracle::random_convex_polygon(rng, 7));
    const ConvexBody disc = disc_body();
    const ConvexPolygon moved = translate(h0, {0.37, -1.2});
    for (int k = 0; k < 30; ++k) {
      const Point2 xi{u(rng), u(rng)};
      CHECK(std::abs(ft_polygon(p, -xi).value - std::conj(ft_polygon(p, xi).value)) < 1e-12);
      CHECK(std::abs(ft_polygon(h0, xi).value.imag()) < 1e-12);
      const auto d = ft(disc, xi);
      CHECK(std::abs(d.value.imag()) <= d.err + 1e-12);
      CHECK(std::abs(std::abs(ft_polygon(moved, xi).value) - std::abs(ft_polygon(h0, xi).value)) < 1e-12);
    }
  }

  TEST_CASE("affine covariance") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5), f(-4.0, 4.0);
    for (int t = 0; t < 20; ++t) {
      const Mat2 a{u(rng), u(rng), u(rng), u(rng)};
      if (std::abs(a.det()) < 0.1) continue;
      const ConvexPolygon img = transform(h0, AffineMap(a, {}));
      const Point2 xi{f(rng), f(rng)};
      const Complex lhs = ft_polygon(img, xi).value;
      const Complex rhs = std::abs(a.det()) * ft_polygon(h0, a.transpose() * xi).value;
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }

  TEST_CASE("gradient against central differences") {
    const ConvexBody bodies[] = {ConvexBody(axis_square()), ConvexBody(h0), disc_body()};
    const Point2 points[] = {{0.5, 0.5}, {1.3, -0.2}, {0.01, 2.0}, {3.1, 4.2}};
    const double h = 1e-5;
    for (const auto& b : bodies) {
      for (Point2 xi : points) {
        const auto g = grad_ft(b, xi);
        const Complex fd1 = (ft(b, xi + h * e1).value - ft(b, xi - h * e1).value) / (2 * h);
        const Complex fd2 = (ft(b, xi + h * e2).value - ft(b, xi - h * e2).value) / (2 * h);
        CHECK(std::abs(g.d1 - fd1) < std::max(1e-6, 10 * g.err));
        CHECK(std::abs(g.d2 - fd2) < std::max(1e-6, 10 * g.err));
      }
      const auto g0 = grad_ft(b, {});
      CHECK(std::abs(g0.d1) < 1e-12);
      CHECK(std::abs(g0.d2) < 1e-12);
    }
  }

  TEST_CASE("decay diagnostics") {
    std::vector<double> radii;
    for (double r = 10.0; r <= 1000.0; r *= 1.07) radii.push_back(r + 0.5);
    const Point2 dirs[] = {e1, Point2{1, 1} / std::sqrt(2.0)};
    const auto rows = decay_diagnostic(ConvexBody(axis_square()), dirs, radii);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].normal_angle == doctest::Approx(0.0));
    CHECK(rows[0].sup_first_order == doctest::Approx(1.0 / oracle::pi).epsilon(1e-2));
    CHECK(rows[1].normal_angle == doctest::Approx(oracle::pi / 4));
    CHECK(rows[1].sup_second_order < 1.0);
    CHECK(std::isfinite(rows[1].sup_grad_first_order));

    const Point2 opp[] = {Point2{0.6, 0.8}, Point2{-0.6, -0.8}};
    const auto sym = decay_diagnostic(ConvexBody(h0), opp, radii);
    CHECK(sym[0].sup_first_order == doctest::Approx(sym[1].sup_first_order).epsilon(1e-12));
  }

  TEST_CASE("height transform against Gauss-Legendre") {
    const auto f = HeightFunction::polynomial({0.25, 0.0, -1.0});
    const auto gl = oracle::gauss_legendre(200);
    for (double R : {0.0, 0.7, 3.0, 12.5}) {
      Complex ref = 0.0;
      for (std::size_t i = 0; i < gl.x.size(); ++i) {
        const double x = gl.x[i] - 0.5;
        ref += gl.w[i] * f(x) * std::exp(Complex(0, -2 * oracle::pi * R * x));
      }
      CHECK(std::abs(height_transform(f, R) - ref) < 1e-13);
    }
  }

  TEST_CASE("cap lower-bound scan") {
    const auto parabola = HeightFunction::polynomial({0.25, 0.0, -1.0});
    const auto tent = HeightFunction::tent(0.0, 0.5, 0.5);
    const auto semi = HeightFunction::semicircle(0.0, 0.5);
    for (const auto* f : {&parabola, &tent, &semi}) {
      double lo = 1e300, hi = 0.0;
      for (double d : {0.1, 0.05, 0.01}) {
        const auto r = cap_lower_bound_scan(*f, d);
        REQUIRE(r.ratio.has_value());
        CHECK(r.R >= 0.1 / d - 1e-9);
        CHECK(r.R <= 10.0 / d + 1e-9);
        CHECK(*r.ratio > 0.0);
        CHECK(r.value == doctest::Approx(std::abs(height_transform(*f, r.R))).epsilon(1e-9));
        lo = std::min(lo, *r.ratio);
        hi = std::max(hi, *r.ratio);
      }
      CHECK(hi / lo < 10.0);
    }
    const auto zero = cap_lower_bound_scan(HeightFunction::zero(), 0.05);
    CHECK(zero.zero_cap);
    CHECK_FALSE(zero.ratio.has_value());
    CHECK(zero.value == 0.0);
  }
}
