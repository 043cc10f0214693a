#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pathlab {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);
double median(std::vector<double> xs);  // by value: sorts a copy
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

// sample autocorrelation of a series at the given lag (levels, not increments)
double lag_autocorrelation(std::span<const double> xs, std::size_t lag);

// Order-statistics tail-index estimate from the k largest observations:
// 1 / mean(log(X_(i) / X_(k+1)), i = 1..k).
double hill_estimate(std::vector<double> samples, std::size_t k);

}  // namespace pathlab
