#include "pathlab/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "pathlab/errors.hpp"

namespace pathlab {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw EvaluationError("adaptive quadrature did not converge", a);
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw EvaluationError("integrand not finite", a);
  }
  const double whole = simpson(a, fa, b, fb, fm);
  return sign * adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  LineFit out;
  const std::size_t n = std::min(xs.size(), ys.size());
  if (n < 2) return out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return out;
  out.slope = (n * sxy - sx * sy) / den;
  out.intercept = (sy - out.slope * sx) / n;
  out.points = static_cast<int>(n);
  return out;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys, double floor) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    const double y = std::abs(ys[i]);
    if (y > floor && xs[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(y));
    }
  }
  return fit_line(lx, ly).slope;
}

}  // namespace pathlab
