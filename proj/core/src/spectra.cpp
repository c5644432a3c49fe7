#include "spectral/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace spectral {

namespace {

bool lex_positive(Point2 p) { return p.x > 0.0 || (p.x == 0.0 && p.y > 0.0); }

// Points sorted by x; counts the closed square [c - R, c + R]².
class SortedPoints {
 public:
  explicit SortedPoints(std::span<const Point2> pts) : pts_(pts.begin(), pts.end()) {
    std::sort(pts_.begin(), pts_.end(), lex_less);
  }

  long count(Point2 c, double R) const {
    const double slack = 1e-12 * std::max(1.0, R + norm(c));
    auto lo = std::lower_bound(pts_.begin(), pts_.end(), c.x - R - slack,
                               [](Point2 p, double x) { return p.x < x; });
    long n = 0;
    for (auto it = lo; it != pts_.end() && it->x <= c.x + R + slack; ++it)
      if (std::abs(it->y - c.y) <= R + slack) ++n;
    return n;
  }

  /// min over points of the L∞ distance to c.
  double nearest_inf(Point2 c) const {
    double best = std::numeric_limits<double>::infinity();
    const auto start = std::lower_bound(pts_.begin(), pts_.end(), c.x,
                                        [](Point2 p, double x) { return p.x < x; });
    for (auto it = start; it != pts_.end() && it->x - c.x < best; ++it)
      best = std::min(best, std::max(it->x - c.x, std::abs(it->y - c.y)));
    for (auto it = start; it != pts_.begin();) {
      --it;
      if (c.x - it->x >= best) break;
      best = std::min(best, std::max(c.x - it->x, std::abs(it->y - c.y)));
    }
    return best;
  }

 private:
  std::vector<Point2> pts_;
};

void require_window(std::span<const Point2> centers, double R, double window_radius) {
  for (Point2 c : centers)
    if (norm(c) + 2.0 * R > window_radius * (1.0 + 1e-12))
      throw Error(ErrorCode::insufficient_window,
                  "center needs the point window to extend 2R beyond it");
}

}  // namespace

SpectrumCandidate SpectrumCandidate::from_lattice(Lattice lattice) { return SpectrumCandidate(lattice); }

SpectrumCandidate SpectrumCandidate::from_points(std::vector<Point2> points, double window_radius) {
  if (!(window_radius > 0.0)) throw Error(ErrorCode::invalid_argument, "window radius must be positive");
  std::sort(points.begin(), points.end(), lex_less);
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw Error(ErrorCode::duplicate_points, "explicit spectrum points must be distinct");
  if (!std::binary_search(points.begin(), points.end(), Point2{}, lex_less))
    throw Error(ErrorCode::missing_origin, "a spectrum candidate must contain the origin");
  return SpectrumCandidate(ExplicitSet{std::move(points), window_radius});
}

std::vector<Point2> enumerate(const SpectrumCandidate& candidate, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::invalid_argument, "radius must be positive");
  if (candidate.is_lattice()) return lattice_points(candidate.lattice(), {}, radius);
  std::vector<Point2> out;
  for (Point2 p : candidate.explicit_set().points)
    if (norm(p) <= radius) out.push_back(p);
  return out;
}

Lattice dual_lattice(const Lattice& lattice) {
  return Lattice::from_matrix(lattice.basis().inverse().transpose());
}

OrthogonalityReport orthogonality_check(const ConvexBody& body, const SpectrumCandidate& candidate,
                                        double radius, double tol, const EvalOptions& opts) {
  // χ̂(-ξ) is the conjugate of χ̂(ξ), so lexicographically positive differences suffice.
  std::vector<Point2> diffs;
  if (candidate.is_lattice()) {
    for (Point2 p : lattice_points(candidate.lattice(), {}, 2.0 * radius))
      if (lex_positive(p)) diffs.push_back(p);
  } else {
    const auto pts = enumerate(candidate, radius);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[i]);
    std::sort(diffs.begin(), diffs.end(), lex_less);
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  }

  OrthogonalityReport rep;
  rep.checked = diffs.size();
  const double bound = tol * body.area();
  for (Point2 d : diffs) {
    const double v = std::abs(ft(body, d, opts).value);
    if (v > rep.worst_value) rep.worst_value = v, rep.worst = d;
  }
  rep.pass = rep.worst_value <= bound;
  return rep;
}

double separation_check(std::span<const Point2> points) {
  if (points.size() < 2) throw Error(ErrorCode::invalid_argument, "separation needs at least two points");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size() && pts[j].x - pts[i].x < best; ++j)
      best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

ParsevalReport parseval_deficiency(const ConvexBody& body, const SpectrumCandidate& candidate,
                                   std::span<const Point2> x_samples, double trunc_radius,
                                   const EvalOptions& opts) {
  if (!(trunc_radius >= 10.0)) throw Error(ErrorCode::invalid_argument, "truncation radius must be >= 10");
  if (!candidate.is_lattice() && candidate.explicit_set().window_radius < trunc_radius)
    throw Error(ErrorCode::insufficient_window, "explicit points do not reach the truncation radius");
  const auto lambdas = enumerate(candidate, trunc_radius);
  const double area = body.area();

  double density = 0.0;
  if (candidate.is_lattice()) {
    density = 1.0 / candidate.lattice().covolume();
  } else {
    const double w = candidate.explicit_set().window_radius;
    density = static_cast<double>(candidate.explicit_set().points.size()) / (std::numbers::pi * w * w);
  }

  ParsevalReport rep;
  // Mass of |χ̂|²/|Ω|² outside the truncation disc under first-order decay,
  // averaged over the oscillation.
  rep.tail_bound = measures(body).perimeter * density / (std::numbers::pi * std::numbers::pi * trunc_radius * area * area);
  for (Point2 x : x_samples) {
    double s = 0.0;
    for (Point2 l : lambdas) s += std::norm(ft(body, x - l, opts).value);
    s /= area * area;
    rep.values.push_back(s);
    if (const double dev = std::abs(s - 1.0); dev > rep.max_dev || rep.values.size() == 1)
      rep.max_dev = dev, rep.worst_x = x;
  }
  return rep;
}

DensityReport landau_density(std::span<const Point2> points, double R, std::span<const Point2> centers,
                             double window_radius) {
  if (!(R > 0.0)) throw Error(ErrorCode::invalid_argument, "R must be positive");
  if (centers.empty()) throw Error(ErrorCode::invalid_argument, "at least one center is required");
  require_window(centers, R, window_radius);
  const SortedPoints sorted(points);
  DensityReport rep;
  rep.R = R;
  rep.D_plus = std::numeric_limits<long>::min();
  rep.D_minus = std::numeric_limits<long>::max();
  for (Point2 c : centers) {
    const long n = sorted.count(c, R);
    rep.D_plus = std::max(rep.D_plus, n);
    rep.D_minus = std::min(rep.D_minus, n);
  }
  const double vol = 4.0 * R * R;
  rep.normalized_plus = static_cast<double>(rep.D_plus) / vol;
  rep.normalized_minus = static_cast<double>(rep.D_minus) / vol;
  return rep;
}

GapReport spectral_gap_check(std::span<const Point2> points, const ConvexBody& body, double C,
                             std::span<const Point2> centers, double window_radius) {
  if (!(C > 0.0)) throw Error(ErrorCode::invalid_argument, "C must be positive");
  if (centers.empty()) throw Error(ErrorCode::invalid_argument, "at least one center is required");
  GapReport rep;
  rep.R_star = C * measures(body).perimeter / body.area();
  require_window(centers, rep.R_star, window_radius);
  const SortedPoints sorted(points);
  // Q_R(μ) is empty exactly when R is below the L∞ distance to the nearest point.
  for (Point2 c : centers) {
    const double d = sorted.nearest_inf(c);
    if (d > rep.largest_empty_R) rep.largest_empty_R = d, rep.emptiest_center = c;
  }
  rep.pass = rep.largest_empty_R <= rep.R_star;
  return rep;
}

std::vector<Point2> center_grid(double half_width, double spacing) {
  if (!(half_width >= 0.0) || !(spacing > 0.0)) throw Error(ErrorCode::invalid_argument, "bad center grid");
  const auto n = static_cast<long>(std::floor(half_width / spacing + 1e-9));
  std::vector<Point2> out;
  for (long i = -n; i <= n; ++i)
    for (long j = -n; j <= n; ++j) out.push_back({static_cast<double>(i) * spacing, static_cast<double>(j) * spacing});
  return out;
}

}  // namespace spectral
