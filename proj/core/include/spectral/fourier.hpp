#pragma once

// Fourier transform of the indicator of a convex body,
//
//     χ̂(ξ) = ∫_Ω exp(-2πi ξ·x) dx,
//
// evaluated in closed form for polygons (divergence theorem, one term per
// edge) and by iterated quadrature for graph bodies. The quadrature path is
// also usable on polygons and is kept independent of the edge formula so the
// two can be cross-checked.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "spectral/geometry.hpp"

namespace spectral {

using Complex = std::complex<double>;

enum class EvalMethod { closed_form, quadrature };

struct FourierSample {
  Point2 xi;
  Complex value;
  EvalMethod method = EvalMethod::closed_form;
  double err = 0.0;        ///< absolute error estimate
  bool converged = true;   ///< false when the quadrature budget ran out
};

struct EvalOptions {
  /// Arguments of the per-edge sinc factors below this use a 6-term series.
  double singular_threshold = 1e-4;
  double quad_tol = 1e-11;
  int max_subdivisions = 4000;
};

/// sin(πξ₁) sin(πξ₂) / (π² ξ₁ ξ₂), the transform of Q = [-1/2, 1/2]².
double ft_square(Point2 xi);

/// sin(t)/t with the removable singularity filled in.
double sinc(double t, double threshold = 1e-4);

FourierSample ft_polygon(const ConvexPolygon& poly, Point2 xi, const EvalOptions& opts = {});
FourierSample ft_quadrature(const ConvexBody& body, Point2 xi, const EvalOptions& opts = {});
/// Closed form for polygons, quadrature for graph bodies.
FourierSample ft(const ConvexBody& body, Point2 xi, const EvalOptions& opts = {});

struct Gradient {
  Complex d1;
  Complex d2;
  double err = 0.0;
  bool converged = true;
};

/// ∇χ̂ from the first moments -2πi ∫ x_k exp(-2πi ξ·x) dx.
Gradient grad_ft(const ConvexBody& body, Point2 xi, const EvalOptions& opts = {});

struct DecaySample {
  double radius;
  double abs_value;
  double abs_gradient;
};

struct DecayRow {
  Point2 direction;
  double normal_angle = 0.0;      ///< angle to the nearest outward boundary normal
  double sup_first_order = 0.0;   ///< sup_r |ξ| |χ̂(ξ)|
  double sup_second_order = 0.0;  ///< sup_r θ |ξ|² |χ̂(ξ)|
  double sup_grad_first_order = 0.0;
  double sup_grad_second_order = 0.0;
  std::vector<DecaySample> samples;
};

/// Empirical decay suprema along rays ξ = r·u. Radii must be increasing and >= 1.
std::vector<DecayRow> decay_diagnostic(const ConvexBody& body, std::span<const Point2> directions,
                                       std::span<const double> radii, const EvalOptions& opts = {});

/// Angle between u and the nearest outward unit normal of the boundary.
double normal_angle(const ConvexBody& body, Point2 u);

/// ∫_{-1/2}^{1/2} f(x) exp(-2πi R x) dx.
Complex height_transform(const HeightFunction& f, double R);

struct CapScanWindow {
  double c_lo = 0.1;
  double c_hi = 10.0;
};

struct CapScanResult {
  double R = 0.0;
  double value = 0.0;            ///< max |f̂(R)| over the scanned window
  std::optional<double> ratio;   ///< value / (δ f(1/2 - δ)); empty for a zero cap
  bool zero_cap = false;
  std::size_t evaluated = 0;
};

/// Scans R ∈ [c_lo/δ, c_hi/δ] in steps of 1/20 (a step of δ/20 in c = Rδ)
/// for the largest |f̂(R)| of a height function on [-1/2, 1/2].
CapScanResult cap_lower_bound_scan(const HeightFunction& f, double delta, CapScanWindow window = {});
/// Same scan on f + g of a graph body with [a, b] = [-1/2, 1/2].
CapScanResult cap_lower_bound_scan(const GraphBody& body, double delta, CapScanWindow window = {});

}  // namespace spectral
