#pragma once

// Convex planar bodies: polygons given by vertices and "graph bodies"
// {(x, y) : a <= x <= b, -g(x) <= y <= f(x)} with concave non-negative f, g.
// Every other module consumes these types; all lengths are in the same
// (arbitrary) unit and frequencies are in cycles per unit length.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "spectral/error.hpp"

namespace spectral {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
  Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

inline constexpr Point2 e1{1.0, 0.0};
inline constexpr Point2 e2{0.0, 1.0};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
/// The planar wedge a ∧ b = a.x b.y - a.y b.x.
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
/// Strict lexicographic order (x, then y); used for deterministic output order.
constexpr bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Row-major 2x2 matrix.
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  static constexpr Mat2 from_columns(Point2 c0, Point2 c1) { return {c0.x, c1.x, c0.y, c1.y}; }
  constexpr double det() const { return a * d - b * c; }
  constexpr Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;
  constexpr Point2 column(int j) const { return j == 0 ? Point2{a, c} : Point2{b, d}; }
  friend constexpr Point2 operator*(const Mat2& m, Point2 p) {
    return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
  }
  friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }
};

/// x ↦ linear·x + shift. The linear part must be invertible (|det| > 1e-12).
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(Mat2 linear, Point2 shift);

  const Mat2& linear() const { return linear_; }
  Point2 shift() const { return shift_; }
  Point2 operator()(Point2 p) const { return linear_ * p + shift_; }
  AffineMap inverse() const;
  /// (this ∘ inner)(p) = this(inner(p)).
  AffineMap compose(const AffineMap& inner) const;

 private:
  Mat2 linear_{};
  Point2 shift_{};
};

/// Concave non-negative height function on an interval, carried as a
/// descriptor so that quadrature and sampling are reproducible.
class HeightFunction {
 public:
  enum class Kind { polynomial, tent, semicircle, piecewise_linear, power_cap };

  /// Σ coeffs[k] x^k; an empty list is the zero function.
  static HeightFunction polynomial(std::vector<double> coeffs);
  /// height · max(0, 1 - |x - center| / half_width).
  static HeightFunction tent(double center, double half_width, double height);
  /// sqrt(max(0, radius² - (x - center)²)).
  static HeightFunction semicircle(double center, double radius);
  /// Linear interpolation through (knots[i], values[i]); constant beyond the ends.
  static HeightFunction piecewise_linear(std::vector<double> knots, std::vector<double> values);
  /// height · max(0, 1 - |x - center| / half_width)^exponent, 0 < exponent <= 1.
  static HeightFunction power_cap(double center, double half_width, double height, double exponent);
  static HeightFunction zero() { return polynomial({}); }

  double operator()(double x) const;
  Kind kind() const { return kind_; }
  /// Points where the function may fail to be smooth.
  std::vector<double> breakpoints() const;
  const std::vector<double>& params() const { return params_; }
  const std::vector<double>& knots() const { return knots_; }

 private:
  HeightFunction(Kind kind, std::vector<double> params, std::vector<double> knots = {})
      : kind_(kind), params_(std::move(params)), knots_(std::move(knots)) {}

  Kind kind_;
  std::vector<double> params_;
  std::vector<double> knots_;
};

/// {(x, y) : a <= x <= b, -g(x) <= y <= f(x)}.
struct GraphBody {
  double a = -0.5;
  double b = 0.5;
  HeightFunction f = HeightFunction::zero();
  HeightFunction g = HeightFunction::zero();

  double top(double x) const { return f(x); }
  double bottom(double x) const { return -g(x); }
  /// Breakpoints of f and g strictly inside (a, b).
  std::vector<double> breakpoints() const;
};

/// Validates non-negativity and concavity of f and g on a sample grid.
/// Throws Error{degenerate} for an empty interval or zero area and
/// Error{not_convex} when a midpoint falls below its chord.
GraphBody validate_graph_body(double a, double b, HeightFunction f, HeightFunction g);

/// Convex polygon with counter-clockwise vertices and strict left turns.
class ConvexPolygon {
 public:
  /// Normalizes orientation to counter-clockwise. Throws Error{degenerate}
  /// (fewer than 3 vertices, repeated or collinear consecutive vertices,
  /// zero area) or Error{not_convex} (a right turn, or winding more than once).
  explicit ConvexPolygon(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 vertex(std::ptrdiff_t i) const;  // cyclic index
  Point2 edge(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }
  /// Same vertex cycle, allowing a different starting vertex.
  bool same_cycle(const ConvexPolygon& other, double tol = 0.0) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

ConvexPolygon validate_polygon(std::vector<Point2> vertices);

class ConvexBody {
 public:
  ConvexBody(ConvexPolygon polygon);  // NOLINT(google-explicit-constructor)
  ConvexBody(GraphBody graph);        // NOLINT(google-explicit-constructor)

  bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(shape_); }
  const ConvexPolygon& polygon() const { return std::get<ConvexPolygon>(shape_); }
  const GraphBody& graph() const { return std::get<GraphBody>(shape_); }
  const ConvexPolygon* as_polygon() const { return std::get_if<ConvexPolygon>(&shape_); }
  const GraphBody* as_graph() const { return std::get_if<GraphBody>(&shape_); }
  double area() const { return area_; }

 private:
  std::variant<ConvexPolygon, GraphBody> shape_;
  double area_;
};

/// Lattice g1 Z + g2 Z.
class Lattice {
 public:
  Lattice(Point2 g1, Point2 g2);
  /// Generators are the columns of the matrix.
  static Lattice from_matrix(const Mat2& m) { return {m.column(0), m.column(1)}; }

  Point2 g1() const { return g1_; }
  Point2 g2() const { return g2_; }
  Mat2 basis() const { return Mat2::from_columns(g1_, g2_); }
  double covolume() const { return std::abs(cross(g1_, g2_)); }
  Point2 point(long i, long j) const { return static_cast<double>(i) * g1_ + static_cast<double>(j) * g2_; }

 private:
  Point2 g1_;
  Point2 g2_;
};

/// Lattice points within `radius` of `center`, in lexicographic order.
std::vector<Point2> lattice_points(const Lattice& lattice, Point2 center, double radius);

// --- measures --------------------------------------------------------------

double signed_area(std::span<const Point2> vertices);
double area(const ConvexPolygon& poly);
double area(const GraphBody& graph);
double area(const ConvexBody& body);
Point2 centroid(const ConvexPolygon& poly);
Point2 centroid(const GraphBody& graph);
Point2 centroid(const ConvexBody& body);

struct Measures {
  double diameter = 0.0;
  double perimeter = 0.0;
};
Measures measures(const ConvexBody& body);

/// Counter-clockwise boundary samples of a graph body, clustered towards the
/// ends of [a, b] (uniform in angle for a semicircular arc). `per_chain`
/// points are placed on each of the upper and lower chains.
std::vector<Point2> boundary_samples(const GraphBody& graph, std::size_t per_chain);

// --- symmetry & normalization ------------------------------------------------

struct Symmetry {
  bool symmetric = false;
  Point2 center;
};

/// Central symmetry about the centroid. `tol` defaults to 1e-9 · diameter.
Symmetry is_symmetric(const ConvexBody& body, std::optional<double> tol = std::nullopt);

struct StandardForm {
  ConvexPolygon polygon;
  AffineMap map;  // original -> standard
};

/// Maps edge (v[i], v[i+1]) of a centrally symmetric polygon onto the segment
/// from (1/2, -1/2) to (1/2, 1/2), translating the center to the origin.
StandardForm normalize_edge_to_standard(const ConvexPolygon& poly, std::size_t edge_index);

/// Q plus the parts above y = 1/2 and below y = -1/2 of a polygon in standard
/// position. The caps are returned as graph bodies over [-1/2, 1/2] in local
/// coordinates: the upper cap is `upper` translated by +e2/2 (0 <= y <= f),
/// the lower cap is `lower` translated by -e2/2 (-g <= y <= 0).
struct CapDecomposition {
  ConvexPolygon square;
  GraphBody upper;
  GraphBody lower;
  double upper_area = 0.0;
  double lower_area = 0.0;
};
CapDecomposition decompose_caps(const ConvexPolygon& poly);

/// True when poly contains Q = [-1/2, 1/2]² and lies in the slab |x| <= 1/2.
bool in_standard_position(const ConvexPolygon& poly, double tol = 1e-9);
bool in_standard_position(const GraphBody& graph, double tol = 1e-9);
bool in_standard_position(const ConvexBody& body, double tol = 1e-9);

struct Triangle {
  std::array<std::size_t, 3> indices{};
  std::array<Point2, 3> vertices{};
  double area = 0.0;
};
double triangle_area(Point2 a, Point2 b, Point2 c);
/// Fan triangulation (apex, v[apex+j], v[apex+j+1]), j = 1 .. m-2.
std::vector<Triangle> fan_triangles(const ConvexPolygon& poly, std::size_t apex);

// --- helpers ----------------------------------------------------------------

ConvexPolygon transform(const ConvexPolygon& poly, const AffineMap& map);
ConvexPolygon translate(const ConvexPolygon& poly, Point2 t);
/// Regular m-gon with the given circumradius, first vertex at angle `phase`.
ConvexPolygon regular_polygon(std::size_t m, double circumradius, double phase = 0.0);
/// [-s/2, s/2]², counter-clockwise from (s/2, -s/2).
ConvexPolygon axis_square(double side = 1.0);

/// Lowest and highest y on the vertical line through x (x inside the shadow).
std::pair<double, double> vertical_extent(const ConvexPolygon& poly, double x);
/// Upper/lower chains as piecewise-linear height functions.
GraphBody to_graph_form(const ConvexPolygon& poly);

/// Closed containment with a signed tolerance (positive tol enlarges).
bool contains(const ConvexPolygon& poly, Point2 p, double tol = 0.0);
/// Euclidean distance from p to the boundary of poly.
double boundary_distance(const ConvexPolygon& poly, Point2 p);

}  // namespace spectral
