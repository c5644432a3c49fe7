#pragma once

// Candidate spectra Λ and the checks a spectrum must pass: pairwise
// orthogonality (differences lie in the zero set), separation, completeness
// through the Parseval identity, Landau densities and the spectral gap.

#include <span>
#include <variant>
#include <vector>

#include "spectral/fourier.hpp"
#include "spectral/geometry.hpp"

namespace spectral {

/// A finite point set known inside the disc of radius window_radius.
struct ExplicitSet {
  std::vector<Point2> points;
  double window_radius = 0.0;
};

/// Either a full lattice or an explicit finite window. Always contains the origin.
class SpectrumCandidate {
 public:
  static SpectrumCandidate from_lattice(Lattice lattice);
  /// Throws Error{missing_origin} or Error{duplicate_points}.
  static SpectrumCandidate from_points(std::vector<Point2> points, double window_radius);

  bool is_lattice() const { return std::holds_alternative<Lattice>(data_); }
  const Lattice& lattice() const { return std::get<Lattice>(data_); }
  const ExplicitSet& explicit_set() const { return std::get<ExplicitSet>(data_); }

 private:
  explicit SpectrumCandidate(std::variant<Lattice, ExplicitSet> data) : data_(std::move(data)) {}
  std::variant<Lattice, ExplicitSet> data_;
};

/// Points with |λ| <= radius, lexicographic order.
std::vector<Point2> enumerate(const SpectrumCandidate& candidate, double radius);

/// Generators g*_i with g_i · g*_j = δ_ij (columns of B^{-T}).
Lattice dual_lattice(const Lattice& lattice);

struct OrthogonalityReport {
  bool pass = true;
  Point2 worst;            ///< difference λ - λ' with the largest |χ̂|
  double worst_value = 0;  ///< |χ̂(worst)|
  std::size_t checked = 0;
};

/// |χ̂(λ - λ')| <= tol · |Ω| for all distinct λ, λ' with |λ|, |λ'| <= radius.
/// For a lattice this is every nonzero lattice point within 2·radius.
OrthogonalityReport orthogonality_check(const ConvexBody& body, const SpectrumCandidate& candidate,
                                        double radius, double tol, const EvalOptions& opts = {});

/// Minimum pairwise distance (0 for a repeated point).
double separation_check(std::span<const Point2> points);

struct ParsevalReport {
  double max_dev = 0.0;
  double tail_bound = 0.0;
  Point2 worst_x;
  std::vector<double> values;  ///< S(x) per sample
};

/// S(x) = Σ_{|λ| <= trunc} |χ̂(x - λ)|² / |Ω|², which is ≡ 1 for a spectrum.
/// tail_bound is a first-order-decay estimate of the neglected mass.
ParsevalReport parseval_deficiency(const ConvexBody& body, const SpectrumCandidate& candidate,
                                   std::span<const Point2> x_samples, double trunc_radius,
                                   const EvalOptions& opts = {});

struct DensityReport {
  double R = 0.0;
  long D_plus = 0;
  long D_minus = 0;
  double normalized_plus = 0.0;
  double normalized_minus = 0.0;
};

/// Counts in closed squares of side 2R around each center. The points must be
/// complete in the disc of radius window_radius, and every center needs
/// |c| + 2R <= window_radius (Error{insufficient_window} otherwise).
DensityReport landau_density(std::span<const Point2> points, double R, std::span<const Point2> centers,
                             double window_radius);

struct GapReport {
  bool pass = true;
  double R_star = 0.0;           ///< C · perimeter / area
  double largest_empty_R = 0.0;  ///< sup of R with Q_R(μ) empty, over the centers
  Point2 emptiest_center;
};

GapReport spectral_gap_check(std::span<const Point2> points, const ConvexBody& body, double C,
                             std::span<const Point2> centers, double window_radius);

/// Centers of a square grid of the given half-width and spacing.
std::vector<Point2> center_grid(double half_width, double spacing);

}  // namespace spectral
