#include "spectral/zeroset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spectral {

namespace {

double dist_to_integers(double v) { return std::abs(v - std::round(v)); }

double dist_to_nonzero_integers(double v) {
  const double r = std::round(v);
  if (r != 0.0) return std::abs(v - r);
  return 1.0 - std::abs(v);
}

void require_origin_symmetric(const ConvexBody& body) {
  const auto sym = is_symmetric(body);
  const double diam = measures(body).diameter;
  if (!sym.symmetric || norm(sym.center) > 1e-9 * diam)
    throw Error(ErrorCode::not_symmetric,
                "zero bracketing on Re χ̂ needs a body symmetric about the origin");
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Assumes the origin-symmetry precondition has been checked by the caller.
std::vector<ZeroPoint> scan_segment(const ConvexBody& body, Point2 p0, Point2 p1,
                                    const ZeroScanOptions& opts) {
  if (!(opts.step > 0.0)) throw Error(ErrorCode::invalid_argument, "step must be positive");
  std::vector<ZeroPoint> zeros;
  const double len = distance(p0, p1);
  if (!(len > 0.0)) return zeros;
  const Point2 dir = (p1 - p0) / len;
  const double zero_tol = opts.tol * body.area();
  auto at = [&](double t) { return p0 + t * dir; };
  auto re = [&](double t) { return ft(body, at(t), opts.eval).value.real(); };

  // Grid t_k = k·step (nested under halving of step), closed at t = len.
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(len / opts.step - 1e-9)));
  auto grid = [&](std::size_t k) { return k == n ? len : static_cast<double>(k) * opts.step; };

  double t_prev = grid(0);
  double v_prev = re(t_prev);
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = grid(k);
    const double v = re(t);
    if (sign(v) == 0) continue;  // carry the last signed sample across exact zeros
    if (sign(v_prev) != 0 && sign(v) != sign(v_prev)) {
      double lo = t_prev, hi = t, vlo = v_prev, vhi = v;
      while (hi - lo > opts.bracket_width) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double vm = re(mid);
        if (vm == 0.0) {
          lo = hi = mid;
          vlo = vhi = 0.0;
          break;
        }
        if (sign(vm) == sign(vlo)) lo = mid, vlo = vm;
        else hi = mid, vhi = vm;
      }
      double tz = lo;
      if (hi > lo && vhi != vlo) tz = std::clamp(lo - vlo * (hi - lo) / (vhi - vlo), lo, hi);
      const Point2 xi = at(tz);
      const double residual = std::abs(ft(body, xi, opts.eval).value);
      if (residual <= zero_tol) zeros.push_back({xi, {at(lo), at(hi)}, residual});
    }
    t_prev = t;
    v_prev = v;
  }
  return zeros;
}

void summarize(AlignmentReport& report) {
  if (report.zeros.empty()) return;
  double sum = 0.0;
  for (const auto& z : report.zeros) {
    const double d = grid_distance(z.xi, report.target);
    report.max_dist = std::max(report.max_dist, d);
    sum += d;
  }
  report.mean_dist = sum / static_cast<double>(report.zeros.size());
}

// Horizontal lines ξ₂ = -A + (j + 1/2)·spacing, offset by half a spacing so
// that no scan line runs along an integer ordinate.
std::vector<double> scan_lines(double A, double spacing) {
  const auto count = static_cast<std::size_t>(std::max(1.0, std::round(2.0 * A / spacing)));
  const double h = 2.0 * A / static_cast<double>(count);
  std::vector<double> ys;
  for (std::size_t j = 0; j < count; ++j) ys.push_back(-A + (static_cast<double>(j) + 0.5) * h);
  return ys;
}

}  // namespace

Slab::Slab(double a, double r) : A(a), R(r) {
  if (!(a >= 1.0) || !(r > 0.0)) throw Error(ErrorCode::invalid_argument, "slab needs A >= 1 and R > 0");
}

bool Slab::contains(Point2 xi) const { return std::abs(xi.x) >= R && std::abs(xi.y) <= A; }

double grid_distance(Point2 xi, GridTarget target) {
  switch (target.kind) {
    case GridKind::square_zeros:
      return std::min(dist_to_nonzero_integers(xi.x), dist_to_nonzero_integers(xi.y));
    case GridKind::cartesian:
      return std::min(dist_to_integers(xi.x), dist_to_integers(xi.y));
    case GridKind::shifted_vertical:
      return dist_to_integers(xi.x - target.beta);
  }
  return 0.0;
}

std::vector<ZeroPoint> zeros_on_segment(const ConvexBody& body, Point2 p0, Point2 p1,
                                        const ZeroScanOptions& opts) {
  require_origin_symmetric(body);
  return scan_segment(body, p0, p1, opts);
}

std::vector<AlignmentReport> slab_zero_alignment(const ConvexBody& body, double A,
                                                 std::span<const double> R_list,
                                                 const ZeroScanOptions& opts) {
  if (!in_standard_position(body))
    throw Error(ErrorCode::not_standard_position, "slab alignment needs a body in standard position");
  require_origin_symmetric(body);
  const Slab shape(A, 1.0);
  std::vector<double> rs(R_list.begin(), R_list.end());
  std::sort(rs.begin(), rs.end());
  const auto lines = scan_lines(shape.A, opts.step);

  std::vector<AlignmentReport> reports;
  for (double R : rs) {
    if (!(R > 0.0)) throw Error(ErrorCode::invalid_argument, "R must be positive");
    AlignmentReport rep;
    rep.target = GridTarget::zq();
    rep.params = {A, R, R + 10.0, 0.0};
    rep.R = R;
    for (double y : lines) {
      auto zs = scan_segment(body, {R, y}, {R + 10.0, y}, opts);
      rep.zeros.insert(rep.zeros.end(), zs.begin(), zs.end());
    }
    summarize(rep);
    reports.push_back(std::move(rep));
  }
  return reports;
}

double cap_slope(const HeightFunction& f, double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw Error(ErrorCode::invalid_argument, "delta must lie in (0, 1/2]");
  return (f(0.5 - delta) + f(-0.5 + delta)) / delta;
}

bool cap_slope_blows_up(const HeightFunction& f) {
  const double s_small = cap_slope(f, 1e-7);
  const double s_large = cap_slope(f, 1e-6);
  return s_large > 0.0 && s_small > 1.05 * s_large;
}

Scales select_scales(const HeightFunction& f, double eps, double A) {
  if (!(eps > 0.0) || !(A > 0.0)) throw Error(ErrorCode::invalid_argument, "eps and A must be positive");
  if (!cap_slope_blows_up(f))
    throw Error(ErrorCode::no_blowup, "S(δ) stays bounded: a boundary segment ends at the point");

  constexpr double floor_delta = 1e-15;
  auto mass = [&](double d) { return f(0.5 - d) + f(-0.5 + d); };  // δ·S(δ), non-decreasing
  const double cap0 = eps / (10.0 * A);
  double delta0 = cap0;
  if (mass(cap0) > cap0) {
    if (mass(floor_delta) > cap0)
      throw Error(ErrorCode::invalid_argument, "δ·S(δ) does not tend to 0: the cap does not vanish at ±1/2");
    double lo = std::log(floor_delta), hi = std::log(cap0);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mass(std::exp(mid)) <= cap0 ? lo : hi) = mid;
    }
    delta0 = std::exp(lo);
  }

  const double target = 10.0 * (1.0 + cap_slope(f, delta0) / eps);
  const double cap1 = delta0 / 10.0;
  double delta = cap1;
  if (cap_slope(f, cap1) < target) {
    if (cap_slope(f, floor_delta) < target)
      throw Error(ErrorCode::no_blowup, "S(δ) does not reach the required size above δ = 1e-15");
    double lo = std::log(floor_delta), hi = std::log(cap1);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (cap_slope(f, std::exp(mid)) >= target ? lo : hi) = mid;
    }
    delta = std::exp(lo);
  }
  return {delta0, delta};
}

std::pair<double, double> best_shift(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::invalid_argument, "no values to fit");
  std::vector<double> frac;
  frac.reserve(values.size());
  for (double v : values) frac.push_back(v - std::floor(v));
  std::sort(frac.begin(), frac.end());
  // The covering arc is the complement of the largest circular gap.
  double gap = frac.front() + 1.0 - frac.back();
  double start = frac.front();
  for (std::size_t i = 0; i + 1 < frac.size(); ++i) {
    const double g = frac[i + 1] - frac[i];
    if (g > gap) gap = g, start = frac[i + 1];
  }
  const double half = 0.5 * (1.0 - gap);
  double beta = start + half;
  beta -= std::floor(beta);
  return {beta, half};
}

AlignmentReport ball_zero_alignment(const ConvexBody& body, double A, double eps,
                                    std::pair<double, double> R_window,
                                    const BallScanOptions& opts) {
  if (!(A > 0.0) || !(R_window.first > A) || !(R_window.second >= R_window.first) || opts.r_points < 1)
    throw Error(ErrorCode::invalid_argument, "ball scan needs A > 0 and A < R_lo <= R_hi");
  require_origin_symmetric(body);
  const GraphBody chains = body.is_polygon() ? to_graph_form(body.polygon()) : body.graph();
  if (std::abs(chains.a + 0.5) > 1e-9 || std::abs(chains.b - 0.5) > 1e-9)
    throw Error(ErrorCode::not_standard_position, "ball scan needs the body to span -1/2 <= x <= 1/2");
  if (!cap_slope_blows_up(chains.f))
    throw Error(ErrorCode::no_blowup, "no unique normal at (1/2, 0): S(δ) stays bounded");

  ZeroScanOptions zopts = opts.zero;
  zopts.step = opts.step;
  const auto lines = scan_lines(A, opts.line_spacing);

  AlignmentReport best;
  bool found = false;
  for (int k = 0; k < opts.r_points; ++k) {
    const double R = opts.r_points == 1
                         ? R_window.first
                         : R_window.first + (R_window.second - R_window.first) * k / (opts.r_points - 1);
    AlignmentReport rep;
    rep.params = {A, R_window.first, R_window.second, eps};
    rep.R = R;
    for (double y : lines) {
      const double w = std::sqrt(std::max(0.0, A * A - y * y));
      auto zs = scan_segment(body, {R - w, y}, {R + w, y}, zopts);
      rep.zeros.insert(rep.zeros.end(), zs.begin(), zs.end());
    }
    if (rep.zeros.empty()) continue;
    std::vector<double> xs;
    for (const auto& z : rep.zeros) xs.push_back(z.xi.x);
    const auto [beta, spread] = best_shift(xs);
    rep.target = GridTarget::vertical(beta);
    summarize(rep);
    if (!found || rep.max_dist < best.max_dist) {
      best = std::move(rep);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::no_zeros_found, "no zeros in the window; enlarge R_window");
  return best;
}

}  // namespace spectral
