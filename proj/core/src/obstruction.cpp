#include "spectral/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectral {

namespace {

constexpr double corner_turn = 0.05;  // radians

Point2 outward_normal(Point2 direction) {
  const double len = norm(direction);
  return {direction.y / len, -direction.x / len};
}

Point2 require_origin_symmetric(const ConvexBody& body) {
  const auto sym = is_symmetric(body);
  if (!sym.symmetric) throw Error(ErrorCode::not_symmetric, "body is not centrally symmetric");
  return sym.center;
}

void require_symmetric_2n_gon(const ConvexPolygon& poly) {
  if (poly.size() < 8) throw Error(ErrorCode::too_few_vertices, "certificates need a 2n-gon with n >= 4");
  require_origin_symmetric(ConvexBody(poly));
}

Triangle make_triangle(const ConvexPolygon& poly, std::size_t i, std::size_t j, std::size_t k) {
  const Point2 a = poly.vertex(static_cast<std::ptrdiff_t>(i));
  const Point2 b = poly.vertex(static_cast<std::ptrdiff_t>(j));
  const Point2 c = poly.vertex(static_cast<std::ptrdiff_t>(k));
  return {{i, j, k}, {a, b, c}, triangle_area(a, b, c)};
}

std::size_t argmin_area(const std::vector<Triangle>& ts) {
  return static_cast<std::size_t>(std::min_element(ts.begin(), ts.end(), [](const Triangle& a, const Triangle& b) {
                                    return a.area < b.area;
                                  }) - ts.begin());
}

}  // namespace

std::vector<FeaturePoint> feature_points(const ConvexBody& body) {
  const Point2 center = require_origin_symmetric(body);
  const auto m = measures(body);
  if (norm(center) > 1e-9 * m.diameter)
    throw Error(ErrorCode::not_symmetric, "feature points need the center of symmetry at the origin");

  std::vector<FeaturePoint> out;
  if (const auto* poly = body.as_polygon()) {
    for (std::size_t i = 0; i < poly->size(); ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      const Point2 a = poly->vertex(k), b = poly->vertex(k + 1);
      out.push_back({0.5 * (a + b), FeatureKind::interval_midpoint, outward_normal(b - a), std::pair{a, b}});
    }
    return out;
  }

  const GraphBody& g = body.graph();
  constexpr std::size_t per_chain = 501;  // spacing near 1e-3 · perimeter
  const auto pts = boundary_samples(g, per_chain);
  const double flat_tol = 1e-9 * m.diameter;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 prev = pts[(i + n - 1) % n], p = pts[i], next = pts[(i + 1) % n];
    const Point2 in = p - prev, outd = next - p;
    const double turn = std::atan2(cross(in, outd), dot(in, outd));
    if (std::abs(turn) > corner_turn) continue;
    const double chord = distance(prev, next);
    if (chord == 0.0 || std::abs(cross(next - prev, p - prev)) / chord <= flat_tol) continue;
    out.push_back({p, FeatureKind::unique_normal, outward_normal(next - prev), std::nullopt});
  }
  return out;
}

ConstraintDensity constraint_density(Point2 x, Point2 x2, double omega_area) {
  const double w = cross(x, x2);
  if (std::abs(w) <= 1e-12 * norm(x) * norm(x2))
    throw Error(ErrorCode::parallel_features, "parallel features do not bound a lattice");
  const double density = 4.0 * std::abs(w);
  return {density, density >= omega_area - 1e-12};
}

VertexConstraints vertex_constraint_vectors(const ConvexPolygon& poly) {
  require_symmetric_2n_gon(poly);
  const Point2 c = centroid(poly);
  const auto n = static_cast<std::ptrdiff_t>(poly.size() / 2);
  VertexConstraints out;
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out.vectors.push_back((poly.vertex(i) - c) - (poly.vertex(n + i - 1) - c));
  out.closure = n % 2 == 0 ? Closure::all_pairs : Closure::same_parity;
  return out;
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::fan_pigeonhole: return "fan_pigeonhole";
    case CertificateKind::disjoint_triples: return "disjoint_triples";
    case CertificateKind::constraint_density: return "constraint_density";
  }
  return "unknown";
}

Certificate nonspectral_certificate(const ConvexPolygon& poly, std::size_t apex) {
  require_symmetric_2n_gon(poly);
  const std::size_t m = poly.size();
  Certificate cert;
  cert.omega_area = area(poly);
  if ((m / 2) % 2 == 0) {
    cert.kind = CertificateKind::fan_pigeonhole;
    cert.triangles = fan_triangles(poly, apex % m);
  } else {
    cert.kind = CertificateKind::disjoint_triples;
    const std::size_t a = apex % m;
    for (std::size_t k = 2; k <= 6; k += 2) cert.triangles.push_back(make_triangle(poly, a, (a + k) % m, (a + k + 2) % m));
  }
  cert.min_index = argmin_area(cert.triangles);
  cert.margin = cert.omega_area / 2.0 - cert.triangles[cert.min_index].area;
  return cert;
}

std::optional<Certificate> density_certificate(const ConvexPolygon& poly) {
  const ConvexBody body(poly);
  const auto features = feature_points(body);
  const double omega = body.area();
  std::optional<Certificate> best;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const Point2 x = features[i].location, x2 = features[(i + 1) % features.size()].location;
    const auto d = constraint_density(x, x2, omega);
    if (d.satisfied) continue;
    if (!best || omega - d.density > best->margin) {
      Certificate c;
      c.kind = CertificateKind::constraint_density;
      c.omega_area = omega;
      c.margin = omega - d.density;
      c.features = {x, x2};
      best = std::move(c);
    }
  }
  return best;
}

bool interiors_disjoint(const std::array<Point2, 3>& t1, const std::array<Point2, 3>& t2, double tol) {
  // Separating axis test over the six edge normals.
  auto separated = [&](const std::array<Point2, 3>& s, const std::array<Point2, 3>& t) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Point2 axis = outward_normal(s[(i + 1) % 3] - s[i]);
      double smin = std::numeric_limits<double>::infinity(), smax = -smin;
      double tmin = smin, tmax = -smin;
      for (Point2 p : s) smin = std::min(smin, dot(axis, p)), smax = std::max(smax, dot(axis, p));
      for (Point2 p : t) tmin = std::min(tmin, dot(axis, p)), tmax = std::max(tmax, dot(axis, p));
      if (smax <= tmin + tol || tmax <= smin + tol) return true;
    }
    return false;
  };
  return separated(t1, t2) || separated(t2, t1);
}

CertificateCheck validate_certificate(const ConvexPolygon& poly, const Certificate& cert) {
  const double omega = area(poly);
  if (std::abs(omega - cert.omega_area) > 1e-12 * std::max(1.0, omega)) return {false, "area mismatch"};

  if (cert.kind == CertificateKind::constraint_density) {
    if (cert.features.size() != 2) return {false, "needs two features"};
    for (Point2 x : cert.features)
      if (boundary_distance(poly, x) > 1e-9) return {false, "feature off the boundary"};
    const auto d = constraint_density(cert.features[0], cert.features[1], omega);
    if (std::abs((omega - d.density) - cert.margin) > 1e-12) return {false, "margin mismatch"};
    return {!d.satisfied && cert.margin > 0.0, d.satisfied ? "density satisfied" : ""};
  }

  if (cert.triangles.empty() || cert.min_index >= cert.triangles.size()) return {false, "no triangles"};
  const double tol = 1e-12 * std::max(1.0, omega);
  double sum = 0.0, min_area = std::numeric_limits<double>::infinity();
  for (const Triangle& t : cert.triangles) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (t.indices[k] >= poly.size()) return {false, "vertex index out of range"};
      if (!(poly.vertex(static_cast<std::ptrdiff_t>(t.indices[k])) == t.vertices[k])) return {false, "vertex mismatch"};
      if (!contains(poly, t.vertices[k], 1e-12)) return {false, "vertex outside"};
    }
    const Point2 g = (t.vertices[0] + t.vertices[1] + t.vertices[2]) / 3.0;
    if (!contains(poly, g, 1e-12)) return {false, "centroid outside"};
    const double a = triangle_area(t.vertices[0], t.vertices[1], t.vertices[2]);
    if (std::abs(a - t.area) > tol) return {false, "area recomputation mismatch"};
    sum += a;
    min_area = std::min(min_area, a);
  }
  if (std::abs(cert.triangles[cert.min_index].area - min_area) > tol) return {false, "min index is not minimal"};

  if (cert.kind == CertificateKind::fan_pigeonhole) {
    if (cert.triangles.size() != poly.size() - 2) return {false, "fan has the wrong number of triangles"};
    if (std::abs(sum - omega) > 1e-9 * omega) return {false, "fan does not cover the polygon"};
  } else {
    if (cert.triangles.size() != 3) return {false, "needs three triangles"};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (!interiors_disjoint(cert.triangles[i].vertices, cert.triangles[j].vertices, 1e-12 * omega))
          return {false, "triangles overlap"};
    if (sum > omega + tol) return {false, "triangle areas exceed the polygon"};
  }
  const double margin = omega / 2.0 - min_area;
  if (std::abs(margin - cert.margin) > tol) return {false, "margin mismatch"};
  if (!(margin > 0.0)) return {false, "no violating triangle"};
  return {true, ""};
}

}  // namespace spectral
