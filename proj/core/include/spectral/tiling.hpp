#pragma once

// Lattice tilings by symmetric quadrilaterals and hexagons, a sampling check
// that a lattice of translates tiles, and the classifier: a convex body is
// spectral exactly when it tiles by translation, which happens exactly for
// symmetric quadrilaterals and symmetric hexagons.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spectral/geometry.hpp"

namespace spectral {

/// g1 = v1 + v2, g2 = v2 + v3 for consecutive centered vertices. Throws
/// Error{not_tileable} unless poly is symmetric with 4 or 6 vertices.
Lattice tiling_lattice(const ConvexPolygon& poly);

struct TilingCheck {
  bool pass = true;
  std::vector<Point2> bad;  ///< samples not covered exactly once
  std::size_t samples = 0;
};

/// Uniform samples in a fundamental parallelogram, redrawn until they sit at
/// least `margin` from every translate's boundary; each must lie in exactly
/// one translate poly + λ. Throws Error{covolume_mismatch} when covolume(L)
/// and area(poly) differ by more than 1e-6 (relative).
TilingCheck verify_tiling(const ConvexPolygon& poly, const Lattice& lattice, int samples,
                          double margin = 1e-6, std::uint64_t seed = 0);

enum class TilingReason { symmetric_quadrilateral, symmetric_hexagon, not_symmetric, polygon_n_ge_4, not_polygon };

std::string_view to_string(TilingReason reason);

struct TilingVerdict {
  bool tiles = false;
  std::optional<Lattice> lattice;
  bool spectral = false;
  TilingReason reason = TilingReason::not_symmetric;
};

TilingVerdict classify(const ConvexBody& body);

/// The polygon a graph body reduces to when all of its boundary is straight
/// (20 samples per smooth piece, collinear within 1e-9 · diameter).
std::optional<ConvexPolygon> as_flat_polygon(const GraphBody& graph);

}  // namespace spectral
