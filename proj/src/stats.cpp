#include "pathlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathlab/numerics.hpp"

namespace pathlab {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  KahanSum s;
  for (double x : xs) s.add((x - m) * (x - m));
  return s.value() / static_cast<double>(n - 1);
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  if (xs.size() % 2 == 1) return xs[mid];
  const double hi = xs[mid];
  const double lo = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lo + hi);
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = std::min(xs.size(), ys.size());
  if (n < 2) return 0.0;
  const double mx = mean(xs.subspan(0, n));
  const double my = mean(ys.subspan(0, n));
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double lag_autocorrelation(std::span<const double> xs, std::size_t lag) {
  if (xs.size() <= lag + 1) return 0.0;
  const std::size_t n = xs.size() - lag;
  return pearson_correlation(xs.subspan(0, n), xs.subspan(lag, n));
}

double hill_estimate(std::vector<double> samples, std::size_t k) {
  if (k == 0 || samples.size() < k + 1) {
    throw std::invalid_argument("hill_estimate: need at least k+1 samples and k >= 1");
  }
  std::partial_sort(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(k + 1),
                    samples.end(), std::greater<double>());
  const double log_threshold = std::log(samples[k]);
  KahanSum s;
  for (std::size_t i = 0; i < k; ++i) s.add(std::log(samples[i]) - log_threshold);
  const double inv = s.value() / static_cast<double>(k);
  if (inv <= 0.0) throw std::invalid_argument("hill_estimate: degenerate sample");
  return 1.0 / inv;
}

}  // namespace pathlab
