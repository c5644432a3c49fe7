#include "spectral/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spectral/quadrature.hpp"

namespace spectral {

namespace {

constexpr double pi = std::numbers::pi;

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::vector<double> with_breaks(double a, double b, std::vector<double> extra) {
  std::vector<double> out{a, b};
  for (double x : extra)
    if (x > a && x < b) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

quad::Tolerance area_tolerance() { return {1e-14, 1e-15, 20000}; }

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace

// --- Mat2 / AffineMap -------------------------------------------------------

Mat2 Mat2::inverse() const {
  const double dt = det();
  if (std::abs(dt) <= 1e-300) fail(ErrorCode::invalid_argument, "singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

AffineMap::AffineMap(Mat2 linear, Point2 shift) : linear_(linear), shift_(shift) {
  if (!(std::abs(linear.det()) > 1e-12))
    fail(ErrorCode::invalid_argument, "affine map is not invertible (|det| <= 1e-12)");
}

AffineMap AffineMap::inverse() const {
  const Mat2 inv = linear_.inverse();
  return {inv, -(inv * shift_)};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return {linear_ * inner.linear_, linear_ * inner.shift_ + shift_};
}

// --- HeightFunction ---------------------------------------------------------

HeightFunction HeightFunction::polynomial(std::vector<double> coeffs) {
  for (double c : coeffs)
    if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "non-finite polynomial coefficient");
  return {Kind::polynomial, std::move(coeffs)};
}

HeightFunction HeightFunction::tent(double center, double half_width, double height) {
  if (!(half_width > 0.0) || !(height >= 0.0) || !std::isfinite(center))
    fail(ErrorCode::invalid_argument, "tent needs half_width > 0 and height >= 0");
  return {Kind::tent, {center, half_width, height}};
}

HeightFunction HeightFunction::semicircle(double center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(center))
    fail(ErrorCode::invalid_argument, "semicircle needs radius > 0");
  return {Kind::semicircle, {center, radius}};
}

HeightFunction HeightFunction::piecewise_linear(std::vector<double> knots,
                                                std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size())
    fail(ErrorCode::invalid_argument, "piecewise-linear needs >= 2 knots and matching values");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i]) || !std::isfinite(values[i]))
      fail(ErrorCode::invalid_argument, "non-finite knot or value");
    if (i > 0 && !(knots[i] > knots[i - 1]))
      fail(ErrorCode::invalid_argument, "knots must be strictly increasing");
  }
  return {Kind::piecewise_linear, std::move(values), std::move(knots)};
}

HeightFunction HeightFunction::power_cap(double center, double half_width, double height,
                                         double exponent) {
  if (!(half_width > 0.0) || !(height >= 0.0) || !(exponent > 0.0 && exponent <= 1.0))
    fail(ErrorCode::invalid_argument, "power cap needs half_width > 0, height >= 0, 0 < p <= 1");
  return {Kind::power_cap, {center, half_width, height, exponent}};
}

double HeightFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::polynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
    case Kind::tent: {
      const double t = 1.0 - std::abs(x - params_[0]) / params_[1];
      return t > 0.0 ? params_[2] * t : 0.0;
    }
    case Kind::semicircle: {
      // (r - d)(r + d) keeps relative accuracy near the endpoints.
      const double d = std::abs(x - params_[0]);
      const double r = params_[1];
      return d < r ? std::sqrt((r - d) * (r + d)) : 0.0;
    }
    case Kind::piecewise_linear: {
      if (x <= knots_.front()) return params_.front();
      if (x >= knots_.back()) return params_.back();
      const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
      const std::size_t j = static_cast<std::size_t>(it - knots_.begin());
      const double t = (x - knots_[j - 1]) / (knots_[j] - knots_[j - 1]);
      return params_[j - 1] + t * (params_[j] - params_[j - 1]);
    }
    case Kind::power_cap: {
      const double t = 1.0 - std::abs(x - params_[0]) / params_[1];
      return t > 0.0 ? params_[2] * std::pow(t, params_[3]) : 0.0;
    }
  }
  return 0.0;
}

std::vector<double> HeightFunction::breakpoints() const {
  switch (kind_) {
    case Kind::polynomial: return {};
    case Kind::tent:
    case Kind::power_cap: return {params_[0] - params_[1], params_[0], params_[0] + params_[1]};
    case Kind::semicircle: return {params_[0] - params_[1], params_[0] + params_[1]};
    case Kind::piecewise_linear: return knots_;
  }
  return {};
}

std::vector<double> GraphBody::breakpoints() const {
  std::vector<double> all = f.breakpoints();
  const auto gb = g.breakpoints();
  all.insert(all.end(), gb.begin(), gb.end());
  std::vector<double> inside;
  for (double x : all)
    if (x > a && x < b) inside.push_back(x);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return inside;
}

GraphBody validate_graph_body(double a, double b, HeightFunction f, HeightFunction g) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    fail(ErrorCode::degenerate, "graph body needs a < b");
  GraphBody body{a, b, std::move(f), std::move(g)};

  std::vector<double> xs;
  constexpr int n = 512;
  for (int k = 0; k <= n; ++k) xs.push_back(a + (b - a) * k / n);
  for (double x : body.breakpoints()) {
    xs.push_back(x);
    // Straddle each kink so the chord test sees it.
    xs.push_back(std::max(a, x - 1e-6 * (b - a)));
    xs.push_back(std::min(b, x + 1e-6 * (b - a)));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double scale = b - a;
  for (double x : xs) scale = std::max({scale, std::abs(body.f(x)), std::abs(body.g(x))});
  const double tol = 1e-10 * scale;

  bool positive = false;
  for (const HeightFunction* h : {&body.f, &body.g}) {
    const char* name = h == &body.f ? "f" : "g";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const double v = (*h)(xs[k]);
      if (!std::isfinite(v)) fail(ErrorCode::invalid_argument, std::string(name) + " is not finite");
      if (v < -tol)
        fail(ErrorCode::not_convex, std::string(name) + " is negative at x = " + std::to_string(xs[k]));
      if (k > 0 && k + 1 < xs.size()) {
        const double x0 = xs[k - 1], x2 = xs[k + 1];
        const double t = (xs[k] - x0) / (x2 - x0);
        const double chord = (1.0 - t) * (*h)(x0) + t * (*h)(x2);
        if (v < chord - tol)
          fail(ErrorCode::not_convex,
               std::string(name) + " is not concave near x = " + std::to_string(xs[k]));
      }
    }
  }
  for (double x : xs)
    if (body.f(x) + body.g(x) > tol) positive = true;
  if (!positive) fail(ErrorCode::degenerate, "graph body has zero area");
  return body;
}

// --- ConvexPolygon ----------------------------------------------------------

double signed_area(std::span<const Point2> v) {
  // Shifted to the first vertex for accuracy far from the origin.
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) s += cross(v[i] - v[0], v[i + 1] - v[0]);
  return 0.5 * s;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t m = vertices_.size();
  if (m < 3) fail(ErrorCode::degenerate, "polygon needs at least 3 vertices");
  double scale = 0.0;
  for (const Point2& p : vertices_) {
    if (!finite(p)) fail(ErrorCode::invalid_argument, "non-finite vertex");
    scale = std::max(scale, distance(p, vertices_[0]));
  }
  if (!(scale > 0.0)) fail(ErrorCode::degenerate, "all vertices coincide");
  for (std::size_t i = 0; i < m; ++i)
    if (distance(vertices_[i], vertices_[(i + 1) % m]) <= 1e-14 * scale)
      fail(ErrorCode::degenerate, "repeated consecutive vertex at index " + std::to_string(i));

  const double sa = signed_area(vertices_);
  if (std::abs(sa) <= 1e-14 * scale * scale) fail(ErrorCode::degenerate, "zero area");
  if (sa < 0.0) std::reverse(vertices_.begin(), vertices_.end());

  double turning = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 in = vertices_[i] - vertices_[(i + m - 1) % m];
    const Point2 out = vertices_[(i + 1) % m] - vertices_[i];
    const double c = cross(in, out);
    if (std::abs(c) <= 1e-12 * norm(in) * norm(out)) {
      if (dot(in, out) < 0.0)
        fail(ErrorCode::not_convex, "boundary doubles back at vertex " + std::to_string(i));
      fail(ErrorCode::degenerate, "collinear vertices around index " + std::to_string(i));
    }
    if (c < 0.0) fail(ErrorCode::not_convex, "right turn at vertex " + std::to_string(i));
    turning += std::atan2(c, dot(in, out));
  }
  if (std::abs(turning - 2.0 * pi) > 1e-6)
    fail(ErrorCode::not_convex, "boundary winds more than once");
}

Point2 ConvexPolygon::vertex(std::ptrdiff_t i) const {
  const auto m = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % m) + m) % m)];
}

bool ConvexPolygon::same_cycle(const ConvexPolygon& other, double tol) const {
  if (other.size() != size()) return false;
  for (std::size_t shift = 0; shift < size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < size() && ok; ++i)
      ok = distance(vertices_[i], other.vertex(static_cast<std::ptrdiff_t>(i + shift))) <= tol;
    if (ok) return true;
  }
  return false;
}

ConvexPolygon validate_polygon(std::vector<Point2> vertices) {
  return ConvexPolygon(std::move(vertices));
}

// --- ConvexBody / Lattice ---------------------------------------------------

ConvexBody::ConvexBody(ConvexPolygon polygon) : shape_(std::move(polygon)) {
  area_ = spectral::area(std::get<ConvexPolygon>(shape_));
}

ConvexBody::ConvexBody(GraphBody graph) : shape_(std::move(graph)) {
  area_ = spectral::area(std::get<GraphBody>(shape_));
}

Lattice::Lattice(Point2 g1, Point2 g2) : g1_(g1), g2_(g2) {
  if (!finite(g1) || !finite(g2) || !(covolume() > 1e-14 * norm(g1) * norm(g2)))
    fail(ErrorCode::degenerate, "lattice generators must be independent");
}

// --- measures ---------------------------------------------------------------

std::vector<Point2> lattice_points(const Lattice& lattice, Point2 center, double radius) {
  if (!(radius >= 0.0)) throw Error(ErrorCode::invalid_argument, "radius must be non-negative");
  const Mat2 inv = lattice.basis().inverse();
  const Point2 c = inv * center;
  // Row k of B^{-1} bounds coordinate k by radius · |row k| around c.
  const double ri = radius * std::hypot(inv.a, inv.b) + 1.0;
  const double rj = radius * std::hypot(inv.c, inv.d) + 1.0;
  std::vector<Point2> pts;
  for (long i = static_cast<long>(std::floor(c.x - ri)); i <= static_cast<long>(std::ceil(c.x + ri)); ++i)
    for (long j = static_cast<long>(std::floor(c.y - rj)); j <= static_cast<long>(std::ceil(c.y + rj)); ++j) {
      const Point2 p = lattice.point(i, j);
      if (distance(p, center) <= radius) pts.push_back(p);
    }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

double area(const ConvexPolygon& poly) { return signed_area(poly.vertices()); }

double area(const GraphBody& graph) {
  const auto breaks = with_breaks(graph.a, graph.b, graph.breakpoints());
  auto width = [&](double x) { return graph.f(x) + graph.g(x); };
  return quad::integrate(width, std::span<const double>(breaks), area_tolerance()).value;
}

double area(const ConvexBody& body) { return body.area(); }

Point2 centroid(const ConvexPolygon& poly) {
  const auto v = poly.vertices();
  const Point2 o = v[0];
  double a2 = 0.0;
  Point2 acc{};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Point2 p = v[i] - o, q = v[i + 1] - o;
    const double w = cross(p, q);
    a2 += w;
    acc += w * (p + q);
  }
  return o + acc / (3.0 * a2);
}

Point2 centroid(const GraphBody& graph) {
  const auto breaks = with_breaks(graph.a, graph.b, graph.breakpoints());
  const auto span = std::span<const double>(breaks);
  const double mid = 0.5 * (graph.a + graph.b);
  const double A = area(graph);
  const double mx = quad::integrate([&](double x) { return (x - mid) * (graph.f(x) + graph.g(x)); },
                                    span, area_tolerance()).value;
  const double my = quad::integrate(
      [&](double x) {
        const double f = graph.f(x), g = graph.g(x);
        return 0.5 * (f - g) * (f + g);
      },
      span, area_tolerance()).value;
  return {mid + mx / A, my / A};
}

Point2 centroid(const ConvexBody& body) {
  if (const auto* p = body.as_polygon()) return centroid(*p);
  return centroid(body.graph());
}

namespace {

// Sample abscissae clustered towards both ends, plus interior breakpoints.
std::vector<double> chain_abscissae(const GraphBody& g, std::size_t n) {
  n = std::max<std::size_t>(n, 2);
  std::vector<double> xs;
  xs.reserve(n + 8);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 0.5 * (1.0 - std::cos(pi * static_cast<double>(k) / static_cast<double>(n - 1)));
    xs.push_back(k + 1 == n ? g.b : g.a + (g.b - g.a) * t);
  }
  for (double x : g.breakpoints()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

double closed_length(std::span<const Point2> pts) {
  double len = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) len += distance(pts[i], pts[(i + 1) % pts.size()]);
  return len;
}

double max_pair_distance(std::span<const Point2> pts, std::size_t* bi = nullptr,
                         std::size_t* bj = nullptr) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > best) {
        best = d;
        if (bi) *bi = i;
        if (bj) *bj = j;
      }
    }
  return best;
}

}  // namespace

std::vector<Point2> boundary_samples(const GraphBody& graph, std::size_t per_chain) {
  const auto xs = chain_abscissae(graph, per_chain);
  std::vector<Point2> pts;
  pts.reserve(2 * xs.size());
  auto push = [&](Point2 p) {
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  };
  for (double x : xs) push({x, graph.bottom(x)});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) push({*it, graph.top(*it)});
  while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  return pts;
}

Measures measures(const ConvexBody& body) {
  if (const auto* poly = body.as_polygon()) {
    const auto v = poly->vertices();
    return {max_pair_distance(v), closed_length(v)};
  }
  const GraphBody& g = body.graph();
  // Polyline lengths on nested grids, Richardson-extrapolated (O(h^2) error).
  const auto coarse = boundary_samples(g, 2049);
  const auto fine = boundary_samples(g, 4097);
  const double p1 = closed_length(coarse), p2 = closed_length(fine);
  const double perimeter = p2 + (p2 - p1) / 3.0;

  std::size_t i = 0, j = 0;
  double diam = max_pair_distance(coarse, &i, &j);
  // Refine around the best pair on the fine grid (index 2i in the nested grid
  // is only approximate once breakpoints are merged, so search by position).
  auto nearest = [&](Point2 p) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < fine.size(); ++k)
      if (double d = distance(fine[k], p); d < bd) bd = d, best = k;
    return best;
  };
  const std::size_t fi = nearest(coarse[i]), fj = nearest(coarse[j]);
  const auto n = static_cast<std::ptrdiff_t>(fine.size());
  for (std::ptrdiff_t di = -4; di <= 4; ++di)
    for (std::ptrdiff_t dj = -4; dj <= 4; ++dj) {
      const Point2 p = fine[static_cast<std::size_t>(((static_cast<std::ptrdiff_t>(fi) + di) % n + n) % n)];
      const Point2 q = fine[static_cast<std::size_t>(((static_cast<std::ptrdiff_t>(fj) + dj) % n + n) % n)];
      diam = std::max(diam, distance(p, q));
    }
  return {diam, perimeter};
}

// --- symmetry & normalization ------------------------------------------------

Symmetry is_symmetric(const ConvexBody& body, std::optional<double> tol) {
  const Point2 c = centroid(body);
  const double t = tol.value_or(1e-9 * measures(body).diameter);
  if (const auto* poly = body.as_polygon()) {
    const std::size_t m = poly->size();
    if (m % 2 != 0) return {false, c};
    for (std::size_t i = 0; i < m; ++i) {
      const Point2 mirrored = 2.0 * c - poly->vertex(static_cast<std::ptrdiff_t>(i));
      if (distance(mirrored, poly->vertex(static_cast<std::ptrdiff_t>(i + m / 2))) > t) return {false, c};
    }
    return {true, c};
  }
  const GraphBody& g = body.graph();
  if (std::abs(g.a + g.b - 2.0 * c.x) > t) return {false, c};
  for (double x : chain_abscissae(g, 1025)) {
    const double xr = g.a + g.b - x;
    if (std::abs(g.f(x) - (2.0 * c.y + g.g(xr))) > t) return {false, c};
  }
  return {true, c};
}

StandardForm normalize_edge_to_standard(const ConvexPolygon& poly, std::size_t edge_index) {
  if (edge_index >= poly.size()) fail(ErrorCode::invalid_argument, "edge index out of range");
  const auto sym = is_symmetric(ConvexBody(poly));
  if (!sym.symmetric) fail(ErrorCode::not_symmetric, "polygon is not centrally symmetric");
  const Point2 u = poly.vertex(static_cast<std::ptrdiff_t>(edge_index)) - sym.center;
  const Point2 w = poly.vertex(static_cast<std::ptrdiff_t>(edge_index) + 1) - sym.center;
  if (std::abs(cross(u, w)) <= 1e-12 * norm(u) * norm(w))
    fail(ErrorCode::edge_through_origin, "chosen edge passes through the center");
  const Mat2 target = Mat2::from_columns({0.5, -0.5}, {0.5, 0.5});
  const Mat2 linear = target * Mat2::from_columns(u, w).inverse();
  const AffineMap map(linear, -(linear * sym.center));
  return {transform(poly, map), map};
}

bool in_standard_position(const ConvexPolygon& poly, double tol) {
  for (const Point2& p : poly.vertices())
    if (std::abs(p.x) > 0.5 + tol) return false;
  for (Point2 corner : {Point2{0.5, -0.5}, Point2{0.5, 0.5}, Point2{-0.5, 0.5}, Point2{-0.5, -0.5}})
    if (!contains(poly, corner, tol)) return false;
  return true;
}

bool in_standard_position(const GraphBody& g, double tol) {
  if (std::abs(g.a + 0.5) > tol || std::abs(g.b - 0.5) > tol) return false;
  for (double x : {g.a, g.b})
    if (g.f(x) < 0.5 - tol || g.g(x) < 0.5 - tol) return false;
  return true;
}

bool in_standard_position(const ConvexBody& body, double tol) {
  if (const auto* p = body.as_polygon()) return in_standard_position(*p, tol);
  return in_standard_position(body.graph(), tol);
}

CapDecomposition decompose_caps(const ConvexPolygon& poly) {
  if (!in_standard_position(poly))
    fail(ErrorCode::not_standard_position, "polygon must contain Q and lie in |x| <= 1/2");
  std::vector<double> knots{-0.5, 0.5};
  for (const Point2& p : poly.vertices())
    if (p.x > -0.5 && p.x < 0.5) knots.push_back(p.x);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<double> up, down;
  for (double x : knots) {
    const auto [lo, hi] = vertical_extent(poly, x);
    up.push_back(std::max(0.0, hi - 0.5));
    down.push_back(std::max(0.0, -0.5 - lo));
  }
  auto cap_area = [&](const std::vector<double>& h) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) s += 0.5 * (h[i] + h[i + 1]) * (knots[i + 1] - knots[i]);
    return s;
  };
  CapDecomposition out{axis_square(1.0),
                       GraphBody{-0.5, 0.5, HeightFunction::piecewise_linear(knots, up), HeightFunction::zero()},
                       GraphBody{-0.5, 0.5, HeightFunction::zero(), HeightFunction::piecewise_linear(knots, down)},
                       cap_area(up), cap_area(down)};
  return out;
}

double triangle_area(Point2 a, Point2 b, Point2 c) { return 0.5 * std::abs(cross(b - a, c - a)); }

std::vector<Triangle> fan_triangles(const ConvexPolygon& poly, std::size_t apex) {
  const std::size_t m = poly.size();
  if (apex >= m) fail(ErrorCode::invalid_argument, "apex index out of range");
  std::vector<Triangle> out;
  out.reserve(m - 2);
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const std::size_t i1 = (apex + j) % m, i2 = (apex + j + 1) % m;
    Triangle t{{apex, i1, i2}, {poly.vertex(static_cast<std::ptrdiff_t>(apex)),
                                poly.vertex(static_cast<std::ptrdiff_t>(i1)),
                                poly.vertex(static_cast<std::ptrdiff_t>(i2))}, 0.0};
    t.area = triangle_area(t.vertices[0], t.vertices[1], t.vertices[2]);
    out.push_back(t);
  }
  return out;
}

// --- helpers ----------------------------------------------------------------

ConvexPolygon transform(const ConvexPolygon& poly, const AffineMap& map) {
  std::vector<Point2> v;
  v.reserve(poly.size());
  for (const Point2& p : poly.vertices()) v.push_back(map(p));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon translate(const ConvexPolygon& poly, Point2 t) {
  return transform(poly, AffineMap(Mat2{}, t));
}

ConvexPolygon regular_polygon(std::size_t m, double circumradius, double phase) {
  if (m < 3 || !(circumradius > 0.0)) fail(ErrorCode::invalid_argument, "regular polygon needs m >= 3, r > 0");
  std::vector<Point2> v;
  for (std::size_t k = 0; k < m; ++k) {
    const double t = phase + 2.0 * pi * static_cast<double>(k) / static_cast<double>(m);
    v.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
  }
  return ConvexPolygon(std::move(v));
}

ConvexPolygon axis_square(double side) {
  const double h = 0.5 * side;
  return ConvexPolygon({{h, -h}, {h, h}, {-h, h}, {-h, -h}});
}

std::pair<double, double> vertical_extent(const ConvexPolygon& poly, double x) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double xmin = lo, xmax = -lo;
  for (const Point2& p : poly.vertices()) xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
  x = std::clamp(x, xmin, xmax);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 p = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point2 q = poly.vertex(static_cast<std::ptrdiff_t>(i) + 1);
    const double x0 = std::min(p.x, q.x), x1 = std::max(p.x, q.x);
    if (x < x0 || x > x1) continue;
    if (x1 - x0 <= 0.0) {
      lo = std::min({lo, p.y, q.y});
      hi = std::max({hi, p.y, q.y});
      continue;
    }
    const double t = (x - p.x) / (q.x - p.x);
    const double y = p.y + t * (q.y - p.y);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  return {lo, hi};
}

GraphBody to_graph_form(const ConvexPolygon& poly) {
  std::vector<double> knots;
  for (const Point2& p : poly.vertices()) knots.push_back(p.x);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<double> top, bottom;
  for (double x : knots) {
    const auto [lo, hi] = vertical_extent(poly, x);
    top.push_back(hi);
    bottom.push_back(-lo);
  }
  return GraphBody{knots.front(), knots.back(), HeightFunction::piecewise_linear(knots, top),
                   HeightFunction::piecewise_linear(knots, bottom)};
}

bool contains(const ConvexPolygon& poly, Point2 p, double tol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 e = poly.edge(static_cast<std::ptrdiff_t>(i));
    if (cross(e, p - poly.vertex(static_cast<std::ptrdiff_t>(i))) < -tol * norm(e)) return false;
  }
  return true;
}

double boundary_distance(const ConvexPolygon& poly, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i)
    best = std::min(best, segment_distance(p, poly.vertex(static_cast<std::ptrdiff_t>(i)),
                                           poly.vertex(static_cast<std::ptrdiff_t>(i) + 1)));
  return best;
}

}  // namespace spectral
