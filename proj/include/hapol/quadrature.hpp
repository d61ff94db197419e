#pragma once

#include <cmath>

namespace hapol {

namespace detail {

template <class F>
double simpson_step(const F& f, double lo, double hi, double f_lo, double f_mid, double f_hi,
                    double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
  const double f_lm = f(lm), f_rm = f(rm);
  const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
  const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;  // Richardson correction
  return simpson_step(f, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth - 1) +
         simpson_step(f, mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [lo, hi] to absolute tolerance tol.
/// The interval is first cut into `panels` equal pieces so that a single
/// coarse estimate cannot accept by coincidence.
template <class F>
double adaptive_simpson(const F& f, double lo, double hi, double tol, int panels = 16,
                        int max_depth = 40) {
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  double f_left = f(lo);
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * width;
    const double b = i + 1 == panels ? hi : a + width;
    const double m = 0.5 * (a + b);
    const double f_mid = f(m), f_right = f(b);
    const double whole = (b - a) / 6.0 * (f_left + 4.0 * f_mid + f_right);
    sum += detail::simpson_step(f, a, b, f_left, f_mid, f_right, whole, tol / panels, max_depth);
    f_left = f_right;
  }
  return sum;
}

}  // namespace hapol
