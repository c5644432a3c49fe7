#include "spectral/fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "spectral/quadrature.hpp"

namespace spectral {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr Complex I{0.0, 1.0};
constexpr int series_terms = 30;  // moment series, used while 2π|ξ|r < 1/2
constexpr double series_radius = 0.5;

Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

// (cos t - sinc t) / t, the derivative of sinc.
double dsinc(double t) {
  if (std::abs(t) < 0.5) {
    double sum = 0.0;
    double pow = t;        // t^(2n-1)
    double fact = 6.0;     // (2n+1)!
    for (int n = 1; n <= 12; ++n) {
      const double term = 2.0 * n * pow / fact;
      sum += (n % 2 == 1) ? -term : term;
      pow *= t * t;
      fact *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
    }
    return sum;
  }
  return (std::cos(t) - std::sin(t) / t) / t;
}

// ∫_{-1/2}^{1/2} s exp(-2πi s w) ds.
Complex first_moment_kernel(double w) { return 0.5 * I * dsinc(pi * w); }

struct Centered {
  std::vector<Point2> p;  // vertices relative to the centroid
  Point2 center;
  double radius = 0.0;    // max |p|
  double area = 0.0;
};

Centered center_polygon(const ConvexPolygon& poly) {
  Centered c;
  c.center = centroid(poly);
  for (const Point2& v : poly.vertices()) {
    c.p.push_back(v - c.center);
    c.radius = std::max(c.radius, norm(c.p.back()));
  }
  c.area = area(poly);
  return c;
}

// Transform and gradient of the centered polygon by the moment series
// Σ_k (-2πi)^k/k! ∫ (ξ·x)^k dx, integrated exactly over the fan of triangles
// (0, p_i, p_{i+1}) with the simplex formulas
//   ∫_T ℓ^k     = 2|T| k!/(k+2)! Σ_j β^j γ^(k-j)
//   ∫_T x_m ℓ^j = 2|T| j!/(j+3)! Σ_i β^i γ^(j-i) (m_β (i+1) + m_γ (j-i+1))
// where β, γ (m_β, m_γ) are the values of ℓ (x_m) at p_i, p_{i+1}.
struct SeriesResult {
  Complex value;
  Complex d1, d2;
  double truncation;
};

SeriesResult moment_series(const Centered& c, Point2 xi, bool with_gradient) {
  const std::size_t m = c.p.size();
  std::array<double, series_terms + 4> inv_fact{};
  inv_fact[0] = 1.0;
  for (std::size_t k = 1; k < inv_fact.size(); ++k) inv_fact[k] = inv_fact[k - 1] / static_cast<double>(k);

  Complex value{}, d1{}, d2{};
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 p = c.p[i], q = c.p[(i + 1) % m];
    const double twice_area = cross(p, q);
    const double beta = dot(xi, p), gamma = dot(xi, q);
    std::array<double, series_terms + 2> bp{}, gp{};
    bp[0] = gp[0] = 1.0;
    for (std::size_t k = 1; k < bp.size(); ++k) bp[k] = bp[k - 1] * beta, gp[k] = gp[k - 1] * gamma;

    Complex coeff = 1.0;  // (-2πi)^k
    for (int k = 0; k <= series_terms; ++k) {
      double h = 0.0;
      for (int j = 0; j <= k; ++j) h += bp[static_cast<std::size_t>(j)] * gp[static_cast<std::size_t>(k - j)];
      value += coeff * twice_area * inv_fact[static_cast<std::size_t>(k + 2)] * h;
      if (with_gradient) {
        double s1 = 0.0, s2 = 0.0;
        for (int a = 0; a <= k; ++a) {
          const double w = bp[static_cast<std::size_t>(a)] * gp[static_cast<std::size_t>(k - a)];
          const double wb = a + 1.0, wg = k - a + 1.0;
          s1 += w * (p.x * wb + q.x * wg);
          s2 += w * (p.y * wb + q.y * wg);
        }
        const Complex f = -2.0 * pi * I * coeff * twice_area * inv_fact[static_cast<std::size_t>(k + 3)];
        d1 += f * s1;
        d2 += f * s2;
      }
      coeff *= -2.0 * pi * I;
    }
  }
  const double u = 2.0 * pi * norm(xi) * c.radius;
  const double tail = std::pow(u, series_terms + 1) * inv_fact[series_terms + 1] * 2.0;
  return {value, d1, d2, c.area * tail * (1.0 + 2.0 * pi * c.radius)};
}

// Edge sum for the centered polygon:
//   χ̂(ξ) = i/(2π|ξ|²) Σ_e (ξ ∧ d_e) exp(-2πi ξ·m_e) sinc(π ξ·d_e).
struct EdgeSum {
  Complex value;
  Complex d1, d2;
  double err;
};

EdgeSum edge_sum(const Centered& c, Point2 xi, double threshold, bool with_gradient) {
  const std::size_t m = c.p.size();
  const double xi2 = dot(xi, xi);
  Complex sum{}, mom1{}, mom2{};
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 p = c.p[i], q = c.p[(i + 1) % m];
    const Point2 d = q - p;
    const Point2 mid = 0.5 * (p + q);
    const double w = dot(xi, d);
    const double flux = cross(xi, d);
    const Complex ph = cis(-2.0 * pi * dot(xi, mid));
    const double s = sinc(pi * w, threshold);
    sum += flux * ph * s;
    scale += std::abs(flux);
    if (with_gradient) {
      const Complex j = first_moment_kernel(w);
      mom1 += flux * ph * (mid.x * s + d.x * j);
      mom2 += flux * ph * (mid.y * s + d.y * j);
    }
  }
  const Complex value = I / (2.0 * pi * xi2) * sum;
  const double u = 2.0 * pi * std::sqrt(xi2) * c.radius;
  const double err = 16.0 * eps * (1.0 + u) * scale / (2.0 * pi * xi2);
  EdgeSum out{value, {}, {}, err};
  if (with_gradient) {
    out.d1 = -(xi.x * value - mom1) / xi2;
    out.d2 = -(xi.y * value - mom2) / xi2;
  }
  return out;
}

struct PolygonEval {
  Complex value;
  Complex d1, d2;
  double err;
};

PolygonEval eval_polygon(const ConvexPolygon& poly, Point2 xi, const EvalOptions& opts, bool grad) {
  const Centered c = center_polygon(poly);
  const Complex shift = cis(-2.0 * pi * dot(xi, c.center));
  Complex v, g1, g2;
  double err;
  if (2.0 * pi * norm(xi) * c.radius < series_radius) {
    const auto s = moment_series(c, xi, grad);
    v = s.value, g1 = s.d1, g2 = s.d2;
    err = s.truncation + 16.0 * eps * c.area;
  } else {
    const auto s = edge_sum(c, xi, opts.singular_threshold, grad);
    v = s.value, g1 = s.d1, g2 = s.d2;
    err = s.err;
  }
  // Undo the centering: χ̂_Ω = e^{-2πiξ·c} χ̂_{Ω-c}, ∇ picks up -2πi c χ̂_{Ω-c}.
  PolygonEval out{shift * v, {}, {}, err * (1.0 + 2.0 * pi * norm(xi) * norm(c.center) * eps)};
  if (grad) {
    out.d1 = shift * (g1 - 2.0 * pi * I * c.center.x * v);
    out.d2 = shift * (g2 - 2.0 * pi * I * c.center.y * v);
  }
  return out;
}

// Graph-form chains used by the quadrature path (polygons are converted to
// their upper/lower chains; f, g may then be negative, only f + g >= 0 matters).
GraphBody chains_of(const ConvexBody& body) {
  if (const auto* p = body.as_polygon()) return to_graph_form(*p);
  return body.graph();
}

std::vector<double> oscillation_partition(const GraphBody& g, Point2 xi) {
  double height = 0.0;
  for (int k = 0; k <= 64; ++k) {
    const double x = g.a + (g.b - g.a) * k / 64.0;
    height = std::max(height, g.f(x) + g.g(x));
  }
  const double cycles = std::abs(xi.x) * (g.b - g.a) + std::abs(xi.y) * height;
  const auto pieces = static_cast<std::size_t>(4.0 + std::ceil(2.0 * cycles));
  const auto breaks = g.breakpoints();
  return quad::partition(g.a, g.b, pieces, breaks);
}

quad::Tolerance quad_tolerance(const EvalOptions& opts) {
  return {opts.quad_tol, 1e-14, opts.max_subdivisions};
}

}  // namespace

double sinc(double t, double threshold) {
  if (std::abs(t) < threshold) {
    const double t2 = t * t;
    // 1 - t²/3! + t⁴/5! - t⁶/7! + t⁸/9! - t¹⁰/11!
    return 1.0 + t2 * (-1.0 / 6 + t2 * (1.0 / 120 + t2 * (-1.0 / 5040 + t2 * (1.0 / 362880 + t2 * (-1.0 / 39916800)))));
  }
  return std::sin(t) / t;
}

double ft_square(Point2 xi) { return sinc(pi * xi.x) * sinc(pi * xi.y); }

FourierSample ft_polygon(const ConvexPolygon& poly, Point2 xi, const EvalOptions& opts) {
  if (xi.x == 0.0 && xi.y == 0.0) return {xi, area(poly), EvalMethod::closed_form, 0.0, true};
  const auto r = eval_polygon(poly, xi, opts, false);
  return {xi, r.value, EvalMethod::closed_form, r.err, true};
}

FourierSample ft_quadrature(const ConvexBody& body, Point2 xi, const EvalOptions& opts) {
  const GraphBody g = chains_of(body);
  const double mid = 0.5 * (g.a + g.b);
  auto integrand = [&](double x) -> Complex {
    const double f = g.f(x), h = g.g(x);
    const double half = 0.5 * (f + h), centre = 0.5 * (f - h);
    // ∫_{-g}^{f} exp(-2πi ξ₂ y) dy in closed form.
    const Complex inner = cis(-2.0 * pi * xi.y * centre) * (2.0 * half) * sinc(2.0 * pi * xi.y * half);
    return cis(-2.0 * pi * xi.x * (x - mid)) * inner;
  };
  const auto breaks = oscillation_partition(g, xi);
  const auto r = quad::integrate(integrand, std::span<const double>(breaks), quad_tolerance(opts));
  return {xi, cis(-2.0 * pi * xi.x * mid) * r.value, EvalMethod::quadrature, r.abs_error, r.converged};
}

FourierSample ft(const ConvexBody& body, Point2 xi, const EvalOptions& opts) {
  if (const auto* p = body.as_polygon()) return ft_polygon(*p, xi, opts);
  return ft_quadrature(body, xi, opts);
}

Gradient grad_ft(const ConvexBody& body, Point2 xi, const EvalOptions& opts) {
  if (const auto* p = body.as_polygon()) {
    if (xi.x == 0.0 && xi.y == 0.0) {
      const Point2 c = centroid(*p);
      const double a = area(*p);
      return {-2.0 * pi * I * c.x * a, -2.0 * pi * I * c.y * a, 16.0 * eps * a, true};
    }
    const auto r = eval_polygon(*p, xi, opts, true);
    return {r.d1, r.d2, r.err * (1.0 + 2.0 * pi * measures(body).diameter), true};
  }
  const GraphBody& g = body.graph();
  const double mid = 0.5 * (g.a + g.b);
  const auto breaks = oscillation_partition(g, xi);
  const auto span = std::span<const double>(breaks);
  const auto tol = quad_tolerance(opts);

  // ∫∫ (x - mid) e(ξ·x) and ∫∫ y e(ξ·x), inner y-integrals in closed form.
  auto mx = quad::integrate(
      [&](double x) -> Complex {
        const double f = g.f(x), h = g.g(x);
        const double half = 0.5 * (f + h), centre = 0.5 * (f - h);
        const Complex inner = cis(-2.0 * pi * xi.y * centre) * (2.0 * half) * sinc(2.0 * pi * xi.y * half);
        return (x - mid) * cis(-2.0 * pi * xi.x * (x - mid)) * inner;
      },
      span, tol);
  auto my = quad::integrate(
      [&](double x) -> Complex {
        const double f = g.f(x), h = g.g(x);
        const double half = 0.5 * (f + h), centre = 0.5 * (f - h);
        const double len = 2.0 * half;
        const Complex inner = cis(-2.0 * pi * xi.y * centre) * len *
                              (centre * sinc(pi * xi.y * len) + len * first_moment_kernel(len * xi.y));
        return cis(-2.0 * pi * xi.x * (x - mid)) * inner;
      },
      span, tol);
  const auto base = ft_quadrature(body, xi, opts);
  const Complex shift = cis(-2.0 * pi * xi.x * mid);
  // ∫ x e = mid ∫ e + ∫ (x - mid) e
  const Complex first_x = shift * mx.value + mid * base.value;
  const Complex first_y = shift * my.value;
  return {-2.0 * pi * I * first_x, -2.0 * pi * I * first_y,
          2.0 * pi * (mx.abs_error + my.abs_error + std::abs(mid) * base.err),
          mx.converged && my.converged && base.converged};
}

double normal_angle(const ConvexBody& body, Point2 u) {
  const double un = norm(u);
  if (!(un > 0.0)) throw Error(ErrorCode::invalid_argument, "direction must be non-zero");
  u = u / un;
  std::vector<Point2> ring;
  if (const auto* p = body.as_polygon())
    ring.assign(p->vertices().begin(), p->vertices().end());
  else
    ring = boundary_samples(body.graph(), 1025);
  double best = pi;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 d = ring[(i + 1) % ring.size()] - ring[i];
    const double len = norm(d);
    if (!(len > 0.0)) continue;
    const Point2 n{d.y / len, -d.x / len};
    best = std::min(best, std::acos(std::clamp(dot(u, n), -1.0, 1.0)));
  }
  return best;
}

std::vector<DecayRow> decay_diagnostic(const ConvexBody& body, std::span<const Point2> directions,
                                       std::span<const double> radii, const EvalOptions& opts) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 1.0)) throw Error(ErrorCode::invalid_argument, "radii must be >= 1");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorCode::invalid_argument, "radii must increase");
  }
  std::vector<DecayRow> rows;
  for (Point2 dir : directions) {
    const double len = norm(dir);
    if (!(len > 0.0)) throw Error(ErrorCode::invalid_argument, "direction must be non-zero");
    DecayRow row;
    row.direction = dir / len;
    row.normal_angle = normal_angle(body, row.direction);
    for (double r : radii) {
      const Point2 xi = r * row.direction;
      const double v = std::abs(ft(body, xi, opts).value);
      const Gradient gr = grad_ft(body, xi, opts);
      const double gv = std::hypot(std::abs(gr.d1), std::abs(gr.d2));
      row.samples.push_back({r, v, gv});
      row.sup_first_order = std::max(row.sup_first_order, r * v);
      row.sup_second_order = std::max(row.sup_second_order, row.normal_angle * r * r * v);
      row.sup_grad_first_order = std::max(row.sup_grad_first_order, r * gv);
      row.sup_grad_second_order = std::max(row.sup_grad_second_order, row.normal_angle * r * r * gv);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex height_transform(const HeightFunction& f, double R) {
  const auto bp = f.breakpoints();
  const auto breaks = quad::partition(-0.5, 0.5, static_cast<std::size_t>(4.0 + std::ceil(2.0 * std::abs(R))), bp);
  return quad::integrate([&](double x) { return f(x) * cis(-2.0 * pi * R * x); },
                         std::span<const double>(breaks), {1e-14, 1e-13, 20000})
      .value;
}

namespace {

// Composite 15-point Kronrod rule on [-1/2, 1/2], fine enough for
// frequencies up to r_max and geometrically graded towards every breakpoint
// (endpoint singularities such as sqrt are resolved by the grading).
struct FixedRule {
  std::vector<double> x;
  std::vector<double> w;
};

FixedRule graded_rule(std::vector<double> singular, double r_max) {
  singular.push_back(-0.5);
  singular.push_back(0.5);
  std::vector<double> inside;
  for (double s : singular)
    if (s >= -0.5 && s <= 0.5) inside.push_back(s);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  const auto base = quad::partition(-0.5, 0.5, static_cast<std::size_t>(8.0 + std::ceil(4.0 * r_max)), inside);
  auto is_singular = [&](double x) { return std::binary_search(inside.begin(), inside.end(), x); };

  std::vector<std::pair<double, double>> panels;
  constexpr double ratio = 0.2;
  constexpr int levels = 24;
  auto graded = [&](double s, double other) {
    // Panels shrinking geometrically from `other` towards `s`.
    double far = other;
    for (int k = 0; k < levels; ++k) {
      const double near = s + (far - s) * ratio;
      panels.emplace_back(std::min(near, far), std::max(near, far));
      far = near;
    }
    panels.emplace_back(std::min(s, far), std::max(s, far));
  };
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    const double lo = base[i], hi = base[i + 1];
    const bool sl = is_singular(lo), sh = is_singular(hi);
    if (sl && sh) {
      const double mid = 0.5 * (lo + hi);
      graded(lo, mid);
      graded(hi, mid);
    } else if (sl) {
      graded(lo, hi);
    } else if (sh) {
      graded(hi, lo);
    } else {
      panels.emplace_back(lo, hi);
    }
  }

  FixedRule rule;
  for (auto [lo, hi] : panels) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    if (!(h > 0.0)) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const double dx = h * quad::detail::kronrod_nodes[j];
      const double wt = h * quad::detail::kronrod_weights[j];
      rule.x.push_back(c - dx);
      rule.w.push_back(wt);
      if (j < 7) {
        rule.x.push_back(c + dx);
        rule.w.push_back(wt);
      }
    }
  }
  return rule;
}

CapScanResult scan_heights(const std::function<double(double)>& h, std::vector<double> breaks,
                           double delta, CapScanWindow window) {
  if (!(delta > 0.0 && delta <= 0.5)) throw Error(ErrorCode::invalid_argument, "delta must lie in (0, 1/2]");
  if (!(window.c_lo > 0.0 && window.c_lo < window.c_hi))
    throw Error(ErrorCode::invalid_argument, "scan window needs 0 < c_lo < c_hi");
  const double r_lo = window.c_lo / delta, r_hi = window.c_hi / delta;
  constexpr double step = 1.0 / 20.0;

  const FixedRule rule = graded_rule(std::move(breaks), r_hi);
  const std::size_t n = rule.x.size();
  std::vector<double> fw(n);
  for (std::size_t i = 0; i < n; ++i) fw[i] = h(rule.x[i]) * rule.w[i];

  // Phases advanced by a fixed rotation per step, re-anchored periodically.
  std::vector<Complex> phase(n), rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = cis(-2.0 * pi * step * rule.x[i]);

  CapScanResult out;
  const auto steps = static_cast<std::size_t>(std::floor((r_hi - r_lo) / step + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double R = r_lo + static_cast<double>(k) * step;
    if (k % 256 == 0)
      for (std::size_t i = 0; i < n; ++i) phase[i] = cis(-2.0 * pi * R * rule.x[i]);
    Complex sum{};
    for (std::size_t i = 0; i < n; ++i) sum += fw[i] * phase[i];
    const double v = std::abs(sum);
    if (v > out.value) out.value = v, out.R = R;
    for (std::size_t i = 0; i < n; ++i) phase[i] *= rot[i];
    ++out.evaluated;
  }
  const double edge = h(0.5 - delta);
  if (!(edge > 0.0)) {
    out.zero_cap = true;
  } else {
    out.ratio = out.value / (delta * edge);
  }
  return out;
}

}  // namespace

CapScanResult cap_lower_bound_scan(const HeightFunction& f, double delta, CapScanWindow window) {
  return scan_heights([&](double x) { return f(x); }, f.breakpoints(), delta, window);
}

CapScanResult cap_lower_bound_scan(const GraphBody& body, double delta, CapScanWindow window) {
  if (std::abs(body.a + 0.5) > 1e-9 || std::abs(body.b - 0.5) > 1e-9)
    throw Error(ErrorCode::not_standard_position, "cap scan needs [a, b] = [-1/2, 1/2]");
  return scan_heights([&](double x) { return body.f(x) + body.g(x); }, body.breakpoints(), delta, window);
}

}  // namespace spectral
