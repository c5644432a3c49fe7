#pragma once

// Zeros of χ̂ for origin-symmetric bodies (where χ̂ is real) and how closely
// they follow the zero set of the unit square,
//   Z_Q = {ξ : ξ₁ ∈ Z∖{0} or ξ₂ ∈ Z∖{0}},
// the Cartesian grid G = (Z×R) ∪ (R×Z), or a shifted vertical grid (β+Z)×R.

#include <span>
#include <utility>
#include <vector>

#include "spectral/fourier.hpp"
#include "spectral/geometry.hpp"

namespace spectral {

/// {ξ : |ξ₁| >= R, |ξ₂| <= A}.
struct Slab {
  double A = 1.0;
  double R = 1.0;

  Slab(double a, double r);
  bool contains(Point2 xi) const;
};

struct ZeroPoint {
  Point2 xi;
  std::pair<Point2, Point2> bracket;  ///< endpoints where Re χ̂ has opposite signs
  double residual = 0.0;              ///< |χ̂(xi)|
};

enum class GridKind { square_zeros, cartesian, shifted_vertical };

struct GridTarget {
  GridKind kind = GridKind::square_zeros;
  double beta = 0.0;  ///< shift for shifted_vertical

  static GridTarget zq() { return {GridKind::square_zeros, 0.0}; }
  static GridTarget g() { return {GridKind::cartesian, 0.0}; }
  static GridTarget vertical(double beta) { return {GridKind::shifted_vertical, beta}; }
};

struct AlignmentParams {
  double A = 0.0;
  double R_lo = 0.0;
  double R_hi = 0.0;
  double eps = 0.0;
};

struct AlignmentReport {
  std::vector<ZeroPoint> zeros;
  double max_dist = 0.0;
  double mean_dist = 0.0;
  GridTarget target;
  AlignmentParams params;
  double R = 0.0;  ///< scan position the report belongs to
};

double grid_distance(Point2 xi, GridTarget target);

struct ZeroScanOptions {
  double step = 0.02;
  double tol = 1e-9;          ///< zero tolerance relative to area: |χ̂| <= tol·|Ω|
  double bracket_width = 1e-10;
  EvalOptions eval{};
};

/// Sign changes of Re χ̂ along p0 → p1, refined by bisection. The body must be
/// symmetric about the origin (Error{not_symmetric} otherwise).
std::vector<ZeroPoint> zeros_on_segment(const ConvexBody& body, Point2 p0, Point2 p1,
                                        const ZeroScanOptions& opts = {});

/// For each R: zeros on horizontal lines in {R <= ξ₁ <= R + 10, |ξ₂| <= A},
/// compared with Z_Q. Needs a body in standard position.
std::vector<AlignmentReport> slab_zero_alignment(const ConvexBody& body, double A,
                                                 std::span<const double> R_list,
                                                 const ZeroScanOptions& opts = {});

/// S(δ) = (f(1/2 - δ) + f(-1/2 + δ)) / δ.
double cap_slope(const HeightFunction& f, double delta);

struct Scales {
  double delta0 = 0.0;
  double delta = 0.0;
};

/// Largest δ₀ <= ε/(10A) with δ₀ S(δ₀) <= ε/(10A), then the largest
/// δ <= δ₀/10 with S(δ) >= 10 (1 + S(δ₀)/ε). Error{no_blowup} when S stays
/// bounded as δ → 0 (a boundary segment ends at the point).
Scales select_scales(const HeightFunction& f, double eps, double A);

/// True when S(δ) keeps growing over the decade δ ∈ [1e-7, 1e-6].
bool cap_slope_blows_up(const HeightFunction& f);

struct BallScanOptions {
  double step = 0.02;          ///< sample spacing along each scan line
  double line_spacing = 0.05;  ///< spacing of the horizontal scan lines
  int r_points = 5;            ///< R positions sampled in the window
  ZeroScanOptions zero{};
};

/// Zeros in B(R e₁, A) for R across the window; best-fit shift β of their
/// ξ₁-coordinates against β + Z. Returns the report of the best R.
AlignmentReport ball_zero_alignment(const ConvexBody& body, double A, double eps,
                                    std::pair<double, double> R_window,
                                    const BallScanOptions& opts = {});

/// The β ∈ [0, 1) minimizing max_i dist(values_i - β, Z), with that maximum.
std::pair<double, double> best_shift(std::span<const double> values);

}  // namespace spectral
