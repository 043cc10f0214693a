#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>

namespace pathlab {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier-compensated accumulator. The integral kernels sum thousands of
// terms whose cancellation identities are asserted to ~1e-12 absolute, so
// plain double accumulation is not good enough.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Open interval, used for state-space constraints on paths and functionals.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  static Interval unbounded() { return {}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity()}; }
};

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Adaptive Simpson quadrature. Throws EvaluationError on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 40);

struct LineFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  double intercept = std::numeric_limits<double>::quiet_NaN();
  int points = 0;
};

LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

// Least-squares slope of log|y| against log(x), skipping entries with
// |y| <= floor so the round-off plateau does not pollute convergence rates.
double loglog_slope(std::span<const double> xs, std::span<const double> ys, double floor);

inline double roundoff_floor(double scale) { return 100.0 * kEps * std::max(1.0, std::abs(scale)); }

}  // namespace pathlab
