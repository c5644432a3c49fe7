#pragma once

// Certificates of non-spectrality for symmetric 2n-gons with n >= 4.
//
// A spectrum containing 0 must satisfy ξ·2x ∈ Z for boundary "feature points"
// x (edge midpoints, or points with a unique normal), so two non-parallel
// features confine it to a lattice of density 4|x ∧ x'|, which must be at
// least |Ω|. For polygons the vertex constraints force every triangle on
// three suitably spaced vertices to have area at least |Ω|/2; the
// certificates here exhibit a triangle that does not.

#include <optional>
#include <string_view>
#include <vector>

#include "spectral/geometry.hpp"

namespace spectral {

enum class FeatureKind { interval_midpoint, unique_normal };

struct FeaturePoint {
  Point2 location;
  FeatureKind kind = FeatureKind::interval_midpoint;
  Point2 normal;                              ///< outward unit normal
  std::optional<std::pair<Point2, Point2>> edge;  ///< the bisected edge, for midpoints
};

/// Edge midpoints of a polygon, or unique-normal boundary samples of a graph
/// body (spacing about 1e-3 · perimeter). The body must be symmetric about
/// the origin (Error{not_symmetric}).
std::vector<FeaturePoint> feature_points(const ConvexBody& body);

struct ConstraintDensity {
  double density = 0.0;  ///< 4 |x ∧ x'|
  bool satisfied = false;
};

/// Error{parallel_features} when x ∧ x' = 0.
ConstraintDensity constraint_density(Point2 x, Point2 x2, double omega_area);

enum class Closure { all_pairs, same_parity };

struct VertexConstraints {
  std::vector<Point2> vectors;  ///< x_i - x_{n+i-1}, i = 1 .. n
  Closure closure = Closure::all_pairs;
};

VertexConstraints vertex_constraint_vectors(const ConvexPolygon& poly);

enum class CertificateKind { fan_pigeonhole, disjoint_triples, constraint_density };

std::string_view to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::fan_pigeonhole;
  std::vector<Triangle> triangles;
  std::size_t min_index = 0;    ///< smallest triangle
  double margin = 0.0;          ///< |Ω|/2 - min area (or |Ω| - density)
  double omega_area = 0.0;
  std::vector<Point2> features;  ///< the feature pair, for constraint_density
};

/// n even: fan from x_1 into 2n - 2 triangles. n odd: the triangles
/// (x_1, x_3, x_5), (x_1, x_5, x_7), (x_1, x_7, x_9). Vertices are taken
/// relative to the polygon's center. Errors: too_few_vertices, not_symmetric.
Certificate nonspectral_certificate(const ConvexPolygon& poly, std::size_t apex = 0);

/// The adjacent midpoint pair with the smallest constraint density, when it
/// falls below |Ω|.
std::optional<Certificate> density_certificate(const ConvexPolygon& poly);

struct CertificateCheck {
  bool valid = false;
  std::string_view failure;
};

/// Recomputes everything the certificate claims from the polygon alone.
CertificateCheck validate_certificate(const ConvexPolygon& poly, const Certificate& cert);

/// Interiors of two triangles are disjoint (shared edges and vertices allowed).
bool interiors_disjoint(const std::array<Point2, 3>& t1, const std::array<Point2, 3>& t2, double tol = 1e-12);

}  // namespace spectral
