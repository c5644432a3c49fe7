#include "spectral/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace spectral {

namespace {

double circumradius(const ConvexPolygon& poly, Point2 c) {
  double r = 0.0;
  for (Point2 v : poly.vertices()) r = std::max(r, distance(v, c));
  return r;
}

bool collinear(std::span<const Point2> pts, double tol) {
  const Point2 a = pts.front(), b = pts.back();
  const double len = distance(a, b);
  if (len == 0.0) return true;
  for (Point2 p : pts)
    if (std::abs(cross(b - a, p - a)) / len > tol) return false;
  return true;
}

// Drops repeated points and vertices in the middle of straight runs.
std::vector<Point2> corner_points(std::vector<Point2> pts, double tol) {
  std::vector<Point2> out;
  for (Point2 p : pts)
    if (out.empty() || distance(out.back(), p) > tol) out.push_back(p);
  while (out.size() > 1 && distance(out.back(), out.front()) <= tol) out.pop_back();
  bool changed = true;
  while (changed && out.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Point2 prev = out[(i + out.size() - 1) % out.size()];
      const Point2 next = out[(i + 1) % out.size()];
      const double len = distance(prev, next);
      if (len > 0.0 && std::abs(cross(next - prev, out[i] - prev)) / len <= tol) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

Lattice tiling_lattice(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n != 4 && n != 6)
    throw Error(ErrorCode::not_tileable, "only symmetric quadrilaterals and hexagons tile by a lattice");
  const auto sym = is_symmetric(ConvexBody(poly));
  if (!sym.symmetric) throw Error(ErrorCode::not_tileable, "polygon is not centrally symmetric");
  const Point2 v1 = poly.vertex(0) - sym.center;
  const Point2 v2 = poly.vertex(1) - sym.center;
  const Point2 v3 = poly.vertex(2) - sym.center;
  return {v1 + v2, v2 + v3};
}

TilingCheck verify_tiling(const ConvexPolygon& poly, const Lattice& lattice, int samples, double margin,
                          std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "samples must be positive");
  if (!(margin >= 0.0)) throw Error(ErrorCode::invalid_argument, "margin must be non-negative");
  const double a = area(poly);
  if (std::abs(lattice.covolume() - a) > 1e-6 * a)
    throw Error(ErrorCode::covolume_mismatch, "covolume of the lattice differs from the area");

  const Point2 c = centroid(poly);
  const double reach = circumradius(poly, c) + margin;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  TilingCheck out;
  out.samples = static_cast<std::size_t>(samples);
  constexpr int max_redraws = 1000;
  for (int s = 0; s < samples; ++s) {
    Point2 p;
    std::vector<Point2> near;
    for (int attempt = 0;; ++attempt) {
      p = c + unit(rng) * lattice.g1() + unit(rng) * lattice.g2();
      near = lattice_points(lattice, p - c, reach);
      const bool clear = std::all_of(near.begin(), near.end(),
                                     [&](Point2 l) { return boundary_distance(poly, p - l) >= margin; });
      if (clear) break;
      if (attempt == max_redraws)
        throw Error(ErrorCode::invalid_argument, "margin too large: no sample clears the boundaries");
    }
    const auto covered = std::count_if(near.begin(), near.end(), [&](Point2 l) { return contains(poly, p - l); });
    if (covered != 1) out.bad.push_back(p);
  }
  out.pass = out.bad.empty();
  return out;
}

std::string_view to_string(TilingReason reason) {
  switch (reason) {
    case TilingReason::symmetric_quadrilateral: return "symmetric_quadrilateral";
    case TilingReason::symmetric_hexagon: return "symmetric_hexagon";
    case TilingReason::not_symmetric: return "not_symmetric";
    case TilingReason::polygon_n_ge_4: return "polygon_n_ge_4";
    case TilingReason::not_polygon: return "not_polygon";
  }
  return "unknown";
}

std::optional<ConvexPolygon> as_flat_polygon(const GraphBody& graph) {
  const double tol = 1e-9 * measures(ConvexBody(graph)).diameter;
  std::vector<double> xs{graph.a};
  for (double x : graph.breakpoints()) xs.push_back(x);
  xs.push_back(graph.b);

  constexpr int per_piece = 20;
  auto piece_flat = [&](const HeightFunction& h, double sgn, double lo, double hi) {
    std::vector<Point2> pts;
    for (int k = 0; k < per_piece; ++k) {
      const double x = lo + (hi - lo) * k / (per_piece - 1);
      pts.push_back({x, sgn * h(x)});
    }
    return collinear(pts, tol);
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!piece_flat(graph.f, 1.0, xs[i], xs[i + 1]) || !piece_flat(graph.g, -1.0, xs[i], xs[i + 1]))
      return std::nullopt;

  std::vector<Point2> pts;
  for (double x : xs) pts.push_back({x, graph.bottom(x)});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) pts.push_back({*it, graph.top(*it)});
  auto corners = corner_points(std::move(pts), tol);
  if (corners.size() < 3) return std::nullopt;
  return ConvexPolygon(std::move(corners));
}

TilingVerdict classify(const ConvexBody& body) {
  if (const auto* graph = body.as_graph()) {
    if (auto poly = as_flat_polygon(*graph)) return classify(ConvexBody(std::move(*poly)));
    if (!is_symmetric(body).symmetric) return {false, std::nullopt, false, TilingReason::not_symmetric};
    return {false, std::nullopt, false, TilingReason::not_polygon};
  }
  const ConvexPolygon& poly = body.polygon();
  if (!is_symmetric(body).symmetric) return {false, std::nullopt, false, TilingReason::not_symmetric};
  if (poly.size() == 4) return {true, tiling_lattice(poly), true, TilingReason::symmetric_quadrilateral};
  if (poly.size() == 6) return {true, tiling_lattice(poly), true, TilingReason::symmetric_hexagon};
  return {false, std::nullopt, false, TilingReason::polygon_n_ge_4};
}

}  // namespace spectral
