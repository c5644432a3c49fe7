#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature on a union of intervals.
//
// The integrand may return double or std::complex<double>. The initial
// partition is given explicitly so callers can place breakpoints at kinks of
// the integrand and split oscillatory integrands into sub-periods; the worst
// interval is bisected until the summed error estimate meets the tolerance or
// the subdivision budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

namespace spectral::quad {

template <class T>
struct Result {
  T value{};
  double abs_error = 0.0;
  bool converged = true;
  int subdivisions = 0;
};

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;
  int max_subdivisions = 4000;
};

namespace detail {

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Segment {
  double lo;
  double hi;
  T value;
  double error;
  double l1;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class T, class F>
Segment<T> gauss_kronrod_15(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(centre);
  T kronrod = fc * kronrod_weights[7];
  T gauss = fc * gauss_weights[3];
  double l1 = magnitude(fc) * kronrod_weights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kronrod_nodes[j];
    const T f1 = f(centre - dx);
    const T f2 = f(centre + dx);
    kronrod += (f1 + f2) * kronrod_weights[j];
    l1 += (magnitude(f1) + magnitude(f2)) * kronrod_weights[j];
    if (j % 2 == 1) gauss += (f1 + f2) * gauss_weights[j / 2];
  }
  const double err = magnitude(kronrod - gauss) * std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * l1 * std::abs(half);
  return {lo, hi, kronrod * half, std::max(err, roundoff), l1 * std::abs(half)};
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the
/// partition given by the sorted breakpoints.
template <class F>
auto integrate(F&& f, std::span<const double> breaks, const Tolerance& tol = {})
    -> Result<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  using Seg = detail::Segment<T>;
  Result<T> out;
  if (breaks.size() < 2) return out;

  std::priority_queue<Seg> heap;
  T total{};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Seg s = detail::gauss_kronrod_15<T>(f, breaks[i], breaks[i + 1]);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }

  int splits = 0;
  auto target = [&] { return std::max(tol.abs, tol.rel * detail::magnitude(total)); };
  while (!heap.empty() && total_err > target()) {
    if (splits >= tol.max_subdivisions) {
      out.converged = false;
      break;
    }
    Seg worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Interval exhausted at machine resolution; keep its estimate.
      out.converged = false;
      break;
    }
    heap.pop();
    Seg left = detail::gauss_kronrod_15<T>(f, worst.lo, mid);
    Seg right = detail::gauss_kronrod_15<T>(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }

  // Re-sum from the leaves to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.abs_error = err;
  out.subdivisions = splits;
  return out;
}

template <class F>
auto integrate(F&& f, double lo, double hi, const Tolerance& tol = {}) {
  const std::array<double, 2> b{lo, hi};
  return integrate(std::forward<F>(f), std::span<const double>(b), tol);
}

/// Uniform partition of [lo, hi] into at least `pieces` intervals, merged
/// with the extra breakpoints that fall inside, sorted and deduplicated.
inline std::vector<double> partition(double lo, double hi, std::size_t pieces,
                                     std::span<const double> extra = {}) {
  pieces = std::max<std::size_t>(pieces, 1);
  std::vector<double> b;
  b.reserve(pieces + 1 + extra.size());
  for (std::size_t i = 0; i <= pieces; ++i)
    b.push_back(i == pieces ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(pieces));
  for (double x : extra)
    if (x > lo && x < hi) b.push_back(x);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace spectral::quad
