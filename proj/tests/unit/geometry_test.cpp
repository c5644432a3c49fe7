#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "spectral/geometry.hpp"

using namespace spectral;

namespace {

const std::vector<Point2> h0_vertices{{0.5, -0.5}, {0.5, 0.5}, {0.0, 0.75}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, -0.75}};

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

TEST_SUITE("geometry") {
  TEST_CASE("validate_polygon normalizes orientation") {
    const ConvexPolygon cw({{0.5, 0.5}, {0.5, -0.5}, {-0.5, -0.5}, {-0.5, 0.5}});
    CHECK(signed_area(cw.vertices()) > 0.0);
    CHECK(cw.same_cycle(axis_square()));

    std::vector<Point2> rev(h0_vertices.rbegin(), h0_vertices.rend());
    CHECK(ConvexPolygon(rev).same_cycle(ConvexPolygon(h0_vertices)));
  }

  TEST_CASE("validate_polygon rejects bad input") {
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}); }) == ErrorCode::degenerate);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {2, 0}, {1, 0.1}, {0, 2}}); }) == ErrorCode::not_convex);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}}); }) == ErrorCode::degenerate);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorCode::degenerate);
    CHECK(code_of([] { ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 1}}); }) == ErrorCode::degenerate);
    // A pentagram winds twice.
    std::vector<Point2> star;
    for (int k = 0; k < 5; ++k) star.push_back({std::cos(4 * oracle::pi * k / 5), std::sin(4 * oracle::pi * k / 5)});
    CHECK(code_of([&] { ConvexPolygon{star}; }) == ErrorCode::not_convex);
  }

  TEST_CASE("areas") {
    CHECK(area(axis_square()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(area(ConvexPolygon(h0_vertices)) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(area(regular_polygon(6, 1.0)) == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));

    const GraphBody disc = validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5),
                                               HeightFunction::semicircle(0, 0.5));
    CHECK(std::abs(area(disc) - oracle::pi / 4.0) < 1e-12);
    const GraphBody par = validate_graph_body(-0.5, 0.5, HeightFunction::polynomial({0.75, 0, -1}),
                                              HeightFunction::polynomial({0.75, 0, -1}));
    CHECK(std::abs(area(par) - (1.0 + 2.0 / 6.0)) < 1e-12);
  }

  TEST_CASE("area oracle on random polygons and affine covariance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
      const auto v = oracle::random_convex_polygon(rng, 12);
      const ConvexPolygon p(v);
      CHECK(area(p) == doctest::Approx(oracle::shoelace(v)).epsilon(1e-13));
      const Mat2 m{u(rng), u(rng), u(rng), u(rng)};
      if (std::abs(m.det()) < 1e-3) continue;
      const AffineMap map(m, {u(rng), u(rng)});
      CHECK(area(transform(p, map)) == doctest::Approx(std::abs(m.det()) * area(p)).epsilon(1e-10));
    }
  }

  TEST_CASE("cached area matches recomputation") {
    const ConvexBody b{ConvexPolygon(h0_vertices)};
    CHECK(b.area() == doctest::Approx(area(b.polygon())).epsilon(1e-12));
  }

  TEST_CASE("measures") {
    const auto sq = measures(ConvexBody(axis_square()));
    CHECK(sq.diameter == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sq.perimeter == doctest::Approx(4.0).epsilon(1e-15));
    const auto h = measures(ConvexBody(ConvexPolygon(h0_vertices)));
    CHECK(h.diameter == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(h.perimeter == doctest::Approx(2.0 + 4.0 * std::hypot(0.5, 0.25)).epsilon(1e-14));

    const ConvexBody disc(validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5),
                                              HeightFunction::semicircle(0, 0.5)));
    const auto d = measures(disc);
    CHECK(d.diameter == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(d.perimeter == doctest::Approx(oracle::pi).epsilon(1e-6));
  }

  TEST_CASE("symmetry") {
    auto sq = is_symmetric(ConvexBody(axis_square()));
    CHECK(sq.symmetric);
    CHECK(norm(sq.center) < 1e-15);
    auto tri = is_symmetric(ConvexBody(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}})));
    CHECK_FALSE(tri.symmetric);
    CHECK(tri.center.x == doctest::Approx(1.0 / 3.0));
    CHECK(is_symmetric(ConvexBody(ConvexPolygon(h0_vertices))).symmetric);

    const auto moved = is_symmetric(ConvexBody(translate(ConvexPolygon(h0_vertices), {3.0, -2.0})));
    CHECK(moved.symmetric);
    CHECK(distance(moved.center, {3.0, -2.0}) < 1e-12);

    const ConvexBody disc(validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5),
                                              HeightFunction::semicircle(0, 0.5)));
    CHECK(is_symmetric(disc).symmetric);
    const ConvexBody half(validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5), HeightFunction::zero()));
    CHECK_FALSE(is_symmetric(half).symmetric);
  }

  TEST_CASE("normalize_edge_to_standard") {
    const ConvexPolygon h0(h0_vertices);
    const auto sf = normalize_edge_to_standard(h0, 0);
    CHECK(sf.polygon.same_cycle(h0, 1e-12));
    CHECK(in_standard_position(sf.polygon));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      const ConvexPolygon p(oracle::random_symmetric_hexagon(rng));
      const auto s = normalize_edge_to_standard(p, static_cast<std::size_t>(t % 6));
      CHECK(in_standard_position(s.polygon));
      const auto back = transform(s.polygon, s.map.inverse());
      CHECK(back.same_cycle(p, 1e-12));
    }

    CHECK(code_of([] { normalize_edge_to_standard(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}), 0); }) ==
          ErrorCode::not_symmetric);
  }

  TEST_CASE("decompose_caps") {
    const auto sq = decompose_caps(axis_square());
    CHECK(sq.upper_area == doctest::Approx(0.0));
    CHECK(sq.lower_area == doctest::Approx(0.0));

    const ConvexPolygon h0(h0_vertices);
    const auto caps = decompose_caps(h0);
    CHECK(caps.upper_area == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(caps.lower_area == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(caps.upper.f(0.0) == doctest::Approx(0.25));
    CHECK(caps.upper.f(-0.5) == doctest::Approx(0.0));
    CHECK(caps.upper.f(0.5) == doctest::Approx(0.0));
    CHECK(std::abs(1.0 + caps.upper_area + caps.lower_area - area(h0)) < 1e-10);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
      const auto s = normalize_edge_to_standard(ConvexPolygon(oracle::random_symmetric_polygon(rng, 5)), 0).polygon;
      const auto c = decompose_caps(s);
      CHECK(c.upper_area >= 0.0);
      CHECK(c.lower_area >= 0.0);
      CHECK(std::abs(1.0 + c.upper_area + c.lower_area - area(s)) < 1e-10);
    }

    CHECK(code_of([] { decompose_caps(axis_square(2.0)); }) == ErrorCode::not_standard_position);
  }

  TEST_CASE("fan_triangles") {
    const auto sq = fan_triangles(axis_square(), 0);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].area == doctest::Approx(0.5));
    CHECK(sq[1].area == doctest::Approx(0.5));

    const auto oct = fan_triangles(regular_polygon(8, 1.0), 0);
    REQUIRE(oct.size() == 6);
    const double mn = std::min_element(oct.begin(), oct.end(), [](auto& a, auto& b) { return a.area < b.area; })->area;
    CHECK(mn == doctest::Approx((std::sqrt(2.0) - 1.0) / 2.0).epsilon(1e-12));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const ConvexPolygon p(oracle::random_convex_polygon(rng, 15));
      for (std::size_t apex = 0; apex < p.size(); ++apex) {
        double s = 0.0;
        for (const auto& tri : fan_triangles(p, apex)) s += tri.area;
        CHECK(std::abs(s - area(p)) < 1e-12);
      }
    }
  }

  TEST_CASE("graph body validation") {
    CHECK(code_of([] {
            validate_graph_body(-0.5, 0.5, HeightFunction::polynomial({0.0, 0.0, 1.0}), HeightFunction::zero());
          }) == ErrorCode::not_convex);
    CHECK(code_of([] { validate_graph_body(0.5, -0.5, HeightFunction::tent(0, 0.5, 0.5), HeightFunction::zero()); }) ==
          ErrorCode::degenerate);
    CHECK(code_of([] { validate_graph_body(-0.5, 0.5, HeightFunction::zero(), HeightFunction::zero()); }) ==
          ErrorCode::degenerate);
    CHECK_NOTHROW(validate_graph_body(-0.5, 0.5, HeightFunction::power_cap(0, 0.5, 0.5, 0.75),
                                      HeightFunction::power_cap(0, 0.5, 0.5, 0.75)));
  }

  TEST_CASE("lattice points match brute force") {
    const Lattice l({1.0, 0.0}, {0.5, 1.25});
    for (double r : {0.5, 1.0, 3.7, 10.0}) {
      auto mine = lattice_points(l, {}, r);
      auto ref = oracle::brute_lattice(l.g1(), l.g2(), r, 40);
      std::sort(ref.begin(), ref.end(), lex_less);
      CHECK(mine == ref);
    }
    const auto shifted = lattice_points(Lattice(e1, e2), {0.5, 0.5}, 0.8);
    CHECK(shifted.size() == 4);
  }

  TEST_CASE("affine map round trip") {
    const AffineMap m({2.0, 1.0, -1.0, 3.0}, {0.5, -0.25});
    const Point2 p{0.3, -0.7};
    CHECK(distance(m.inverse()(m(p)), p) < 1e-15);
    CHECK(distance(m.compose(m.inverse())(p), p) < 1e-15);
    CHECK(code_of([] { AffineMap({1.0, 2.0, 2.0, 4.0}, {}); }) == ErrorCode::invalid_argument);
  }
}
