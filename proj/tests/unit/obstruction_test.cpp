#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectral/obstruction.hpp"

using namespace spectral;

namespace {

const ConvexPolygon h0({{0.5, -0.5}, {0.5, 0.5}, {0.0, 0.75}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, -0.75}});

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

bool has_point(const std::vector<FeaturePoint>& fs, Point2 p, double tol) {
  return std::any_of(fs.begin(), fs.end(), [&](const FeaturePoint& f) { return distance(f.location, p) < tol; });
}

}  // namespace

TEST_SUITE("obstruction") {
  TEST_CASE("feature points") {
    const auto sq = feature_points(ConvexBody(axis_square()));
    CHECK(sq.size() == 4);
    for (Point2 p : {Point2{0.5, 0}, Point2{0, 0.5}, Point2{-0.5, 0}, Point2{0, -0.5}}) CHECK(has_point(sq, p, 1e-15));
    for (const auto& f : sq) {
      CHECK(f.kind == FeatureKind::interval_midpoint);
      CHECK(dot(f.normal, f.location) > 0);
    }

    const auto h = feature_points(ConvexBody(h0));
    CHECK(h.size() == 6);
    CHECK(has_point(h, {0.25, 0.625}, 1e-15));

    const auto disc = validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5),
                                          HeightFunction::semicircle(0, 0.5));
    const auto d = feature_points(ConvexBody(disc));
    CHECK(d.size() > 500);
    CHECK(has_point(d, {0.5, 0.0}, 1e-12));
    for (const auto& f : d) {
      CHECK(f.kind == FeatureKind::unique_normal);
      CHECK(norm(f.location) == doctest::Approx(0.5).epsilon(1e-9));
      CHECK(distance(f.normal, f.location / norm(f.location)) < 2e-2);
    }

    CHECK(code_of([] { feature_points(ConvexBody(translate(axis_square(), {0.1, 0.0}))); }) ==
          ErrorCode::not_symmetric);
  }

  TEST_CASE("constraint density") {
    const auto sq = constraint_density({0.5, 0}, {0, 0.5}, 1.0);
    CHECK(sq.density == doctest::Approx(1.0));
    CHECK(sq.satisfied);

    const auto oct = regular_polygon(8, 1.0);
    const auto fs = feature_points(ConvexBody(oct));
    const auto d = constraint_density(fs[0].location, fs[1].location, area(oct));
    CHECK(d.density == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(area(oct) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK_FALSE(d.satisfied);

    CHECK(code_of([] { constraint_density({1, 0}, {-2, 0}, 1.0); }) == ErrorCode::parallel_features);

    const auto hs = feature_points(ConvexBody(h0));
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const auto c = constraint_density(hs[i].location, hs[(i + 1) % hs.size()].location, area(h0));
      CHECK(c.satisfied);
    }
  }

  TEST_CASE("vertex constraint vectors") {
    const auto oct = vertex_constraint_vectors(regular_polygon(8, 1.0));
    CHECK(oct.vectors.size() == 4);
    CHECK(oct.closure == Closure::all_pairs);
    const auto dec = vertex_constraint_vectors(regular_polygon(10, 1.0));
    CHECK(dec.vectors.size() == 5);
    CHECK(dec.closure == Closure::same_parity);
    const auto p = regular_polygon(8, 1.0);
    CHECK(distance(oct.vectors[0], p.vertex(0) - p.vertex(3)) < 1e-15);
    CHECK(code_of([] { vertex_constraint_vectors(ConvexPolygon(h0)); }) == ErrorCode::too_few_vertices);
  }

  TEST_CASE("certificates for regular polygons") {
    for (std::size_t m : {8u, 10u, 12u, 14u, 16u}) {
      const auto poly = regular_polygon(m, 1.0, 0.1);
      for (std::size_t apex = 0; apex < m; ++apex) {
        const auto cert = nonspectral_certificate(poly, apex);
        CHECK(cert.kind == ((m / 2) % 2 == 0 ? CertificateKind::fan_pigeonhole : CertificateKind::disjoint_triples));
        const auto check = validate_certificate(poly, cert);
        CHECK_MESSAGE(check.valid, "m=" << m << " apex=" << apex << " " << check.failure);
        CHECK(cert.margin > 0.0);
      }
    }
    const auto oct = nonspectral_certificate(regular_polygon(8, 1.0));
    CHECK(oct.triangles.size() == 6);
    CHECK(oct.omega_area / 2 - oct.margin == doctest::Approx(oct.triangles[oct.min_index].area));
  }

  TEST_CASE("certificates for random symmetric polygons") {
    std::mt19937_64 rng(21);
    int tried = 0;
    while (tried < 40) {
      const ConvexPolygon p(oracle::random_symmetric_polygon(rng, 6));
      if (p.size() < 8) continue;
      ++tried;
      const auto cert = nonspectral_certificate(p);
      CHECK(validate_certificate(p, cert).valid);
    }
  }

  TEST_CASE("tampered certificates fail validation") {
    const auto poly = regular_polygon(10, 1.0);
    auto cert = nonspectral_certificate(poly);
    auto moved = cert;
    moved.margin += 1e-3;
    CHECK_FALSE(validate_certificate(poly, moved).valid);
    moved = cert;
    moved.triangles[0].vertices[0] = {0.0, 0.0};
    CHECK_FALSE(validate_certificate(poly, moved).valid);
    moved = cert;
    moved.omega_area *= 2;
    CHECK_FALSE(validate_certificate(poly, moved).valid);
    CHECK_FALSE(validate_certificate(regular_polygon(12, 1.0), cert).valid);
  }

  TEST_CASE("no certificates for tiles") {
    CHECK(code_of([] { nonspectral_certificate(axis_square()); }) == ErrorCode::too_few_vertices);
    CHECK(code_of([] { nonspectral_certificate(h0); }) == ErrorCode::too_few_vertices);
    CHECK_FALSE(density_certificate(axis_square()));
    CHECK_FALSE(density_certificate(h0));
    const auto d = density_certificate(regular_polygon(8, 1.0));
    REQUIRE(d);
    CHECK(validate_certificate(regular_polygon(8, 1.0), *d).valid);
  }

  TEST_CASE("triangle interiors") {
    const std::array<Point2, 3> a{Point2{0, 0}, Point2{1, 0}, Point2{0, 1}};
    const std::array<Point2, 3> b{Point2{1, 0}, Point2{1, 1}, Point2{0, 1}};
    const std::array<Point2, 3> c{Point2{0.2, 0.2}, Point2{2, 0.2}, Point2{0.2, 2}};
    CHECK(interiors_disjoint(a, b));
    CHECK_FALSE(interiors_disjoint(a, c));
    CHECK_FALSE(interiors_disjoint(a, a));
  }
}
