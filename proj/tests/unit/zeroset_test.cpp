#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectral/zeroset.hpp"

using namespace spectral;

namespace {

const ConvexPolygon h0({{0.5, -0.5}, {0.5, 0.5}, {0.0, 0.75}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, -0.75}});

GraphBody disc(double r = 0.5) {
  return validate_graph_body(-r, r, HeightFunction::semicircle(0, r), HeightFunction::semicircle(0, r));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_SUITE("zeroset") {
  TEST_CASE("grid distances") {
    CHECK(grid_distance({0.5, 3.7}, GridTarget::g()) == doctest::Approx(0.3));
    CHECK(grid_distance({1.0, 0.2}, GridTarget::g()) == 0.0);
    CHECK(grid_distance({0.1, 0.5}, GridTarget::g()) == doctest::Approx(0.1));
    CHECK(grid_distance({0.1, 0.5}, GridTarget::zq()) == doctest::Approx(0.5));
    CHECK(grid_distance({-0.2, 0.3}, GridTarget::zq()) == doctest::Approx(0.7));
    CHECK(grid_distance({2.3, 9.0}, GridTarget::vertical(0.25)) == doctest::Approx(0.05));

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
      const Point2 p{u(rng), u(rng)};
      CHECK(grid_distance(p, GridTarget::g()) <= grid_distance(p, GridTarget::zq()));
    }
  }

  TEST_CASE("slab shape") {
    const Slab s(3.0, 10.0);
    CHECK(s.contains({12.0, -2.0}));
    CHECK(s.contains({-10.0, 3.0}));
    CHECK_FALSE(s.contains({9.0, 0.0}));
    CHECK(code_of([] { Slab(0.5, 1.0); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("zeros of the square on a horizontal segment") {
    ZeroScanOptions opts;
    opts.step = 0.05;
    const auto zs = zeros_on_segment(ConvexBody(axis_square()), {0.5, 0.5}, {5.5, 0.5}, opts);
    REQUIRE(zs.size() == 5);
    for (std::size_t k = 0; k < zs.size(); ++k) {
      CHECK(zs[k].xi.x == doctest::Approx(k + 1.0).epsilon(1e-12));
      CHECK(zs[k].residual <= 1e-9);
      const double a = ft(ConvexBody(axis_square()), zs[k].bracket.first).value.real();
      const double b = ft(ConvexBody(axis_square()), zs[k].bracket.second).value.real();
      CHECK(a * b <= 0.0);
    }
  }

  TEST_CASE("zero at a dual lattice point of H0") {
    const auto zs = zeros_on_segment(ConvexBody(h0), {0.8, -0.32}, {1.2, -0.48});
    bool found = false;
    for (const auto& z : zs) found = found || distance(z.xi, {1.0, -0.4}) < 1e-9;
    CHECK(found);
  }

  TEST_CASE("zeros are symmetric and survive step refinement") {
    const ConvexBody b(h0);
    ZeroScanOptions coarse, fine;
    coarse.step = 0.04;
    fine.step = 0.02;
    const auto zc = zeros_on_segment(b, {0.3, 0.17}, {9.3, 2.17}, coarse);
    const auto zf = zeros_on_segment(b, {0.3, 0.17}, {9.3, 2.17}, fine);
    CHECK(zf.size() >= zc.size());
    for (const auto& z : zf) CHECK(std::abs(ft(b, -z.xi).value) <= 1e-9 * b.area());
  }

  TEST_CASE("zero search needs origin symmetry") {
    CHECK(code_of([] { zeros_on_segment(ConvexBody(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}})), {0, 0}, {1, 1}); }) ==
          ErrorCode::not_symmetric);
    CHECK(code_of([] { zeros_on_segment(ConvexBody(translate(axis_square(), {0.2, 0})), {0, 0}, {1, 1}); }) ==
          ErrorCode::not_symmetric);
  }

  TEST_CASE("slab alignment") {
    const double rs[] = {50.0};
    const auto sq = slab_zero_alignment(ConvexBody(axis_square()), 3.0, rs);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].zeros.size() > 100);
    CHECK(sq[0].max_dist < 1e-9);

    const double rs2[] = {200.0, 50.0};
    const auto h = slab_zero_alignment(ConvexBody(h0), 3.0, rs2);
    REQUIRE(h.size() == 2);
    CHECK(h[0].R == 50.0);
    CHECK(h[1].R == 200.0);
    CHECK(h[0].max_dist >= h[0].mean_dist);
    CHECK(h[1].max_dist <= 2.0 * h[0].max_dist);

    CHECK(code_of([&] { slab_zero_alignment(ConvexBody(axis_square(2.0)), 3.0, rs); }) ==
          ErrorCode::not_standard_position);
  }

  TEST_CASE("cap slope") {
    const auto tent = HeightFunction::tent(0.0, 0.5, 0.5);
    for (double d : {0.3, 0.1, 1e-3, 1e-6}) CHECK(cap_slope(tent, d) == doctest::Approx(2.0));
    const auto semi = HeightFunction::semicircle(0.0, 0.5);
    CHECK(cap_slope(semi, 0.01) == doctest::Approx(2.0 * std::sqrt(0.0099) / 0.01).epsilon(1e-12));
    CHECK(cap_slope(semi, 0.01) == doctest::Approx(19.90).epsilon(1e-3));
    double prev = 1e300;
    for (double d : {0.1, 0.01, 0.001}) {
      const double m = d * cap_slope(semi, d);
      CHECK(m < prev);
      prev = m;
    }
    CHECK(prev < 0.07);
  }

  TEST_CASE("scale selection") {
    const auto semi = HeightFunction::semicircle(0.0, 0.5);
    const double eps = 0.1, A = 5.0;
    const auto s = select_scales(semi, eps, A);
    CHECK(s.delta < s.delta0);
    CHECK(s.delta0 <= eps / (10 * A));
    CHECK(s.delta0 * cap_slope(semi, s.delta0) <= eps / (10 * A) * (1 + 1e-12));
    CHECK(s.delta <= s.delta0 / 10);
    CHECK(cap_slope(semi, s.delta) >= 10 * (1 + cap_slope(semi, s.delta0) / eps) * (1 - 1e-9));

    const auto power = HeightFunction::power_cap(0.0, 0.5, 0.5, 0.75);
    const auto p = select_scales(power, eps, A);
    CHECK(p.delta < p.delta0);
    CHECK(cap_slope(power, p.delta) >= 10 * (1 + cap_slope(power, p.delta0) / eps) * (1 - 1e-9));

    CHECK(code_of([] { select_scales(HeightFunction::tent(0.0, 0.5, 0.5), 0.1, 5.0); }) == ErrorCode::no_blowup);
    CHECK(cap_slope_blows_up(semi));
    CHECK_FALSE(cap_slope_blows_up(HeightFunction::tent(0.0, 0.5, 0.5)));
  }

  TEST_CASE("best shift against a brute-force scan") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-0.1, 0.1), off(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      const double beta = off(rng);
      std::vector<double> v;
      for (int k = 0; k < 15; ++k) v.push_back(beta + k + u(rng) * (t % 3));
      const auto [b, m] = best_shift(v);
      const auto [rb, rm] = oracle::brute_best_shift(v);
      CHECK(m <= rm + 1e-12);
      CHECK(m >= rm - 0.5 / 20000);
      double worst = 0.0;
      for (double x : v) worst = std::max(worst, std::abs(x - b - std::round(x - b)));
      CHECK(worst == doctest::Approx(m).epsilon(1e-12));
      (void)rb;
    }
    const double one[] = {3.7};
    CHECK(best_shift(one).second == 0.0);
    CHECK(best_shift(one).first == doctest::Approx(0.7));
  }

  TEST_CASE("ball alignment on the disc and the square") {
    BallScanOptions opts;
    opts.step = 0.05;
    opts.r_points = 3;
    const auto rep = ball_zero_alignment(ConvexBody(disc()), 2.0, 0.1, {20.0, 40.0}, opts);
    CHECK(rep.target.kind == GridKind::shifted_vertical);
    const double b = rep.target.beta;
    CHECK(std::min(std::abs(b - 0.25), std::abs(b - 0.75)) < 0.05);
    CHECK(rep.max_dist < 0.05);

    opts.r_points = 1;
    const auto sq = ball_zero_alignment(ConvexBody(axis_square()), 2.0, 0.1, {20.0, 20.0}, opts);
    CHECK(std::min(sq.target.beta, 1.0 - sq.target.beta) < 1e-9);
    CHECK(sq.max_dist < 1e-9);

    const ConvexBody rhombus(validate_graph_body(-0.5, 0.5, HeightFunction::tent(0, 0.5, 0.5),
                                                 HeightFunction::tent(0, 0.5, 0.5)));
    CHECK(code_of([&] { ball_zero_alignment(rhombus, 2.0, 0.1, {20.0, 40.0}, opts); }) == ErrorCode::no_blowup);
  }
}
