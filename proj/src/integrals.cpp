#include "pathlab/integrals.hpp"

#include <cmath>
#include <stdexcept>

#include "pathlab/errors.hpp"
#include "pathlab/numerics.hpp"

namespace pathlab {

std::vector<double> values_on_grid(const SampledPath& path, const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = path(grid[j]);
  return out;
}

double quadratic_variation(const SampledPath& path, const PartitionScheme& scheme,
                           std::size_t level, double t) {
  const auto& grid = scheme.level(level);
  const auto x = values_on_grid(path, grid);
  KahanSum acc;
  for (std::size_t j = 1; j < grid.size() && grid[j] <= t; ++j) {
    const double d = x[j] - x[j - 1];
    acc.add(d * d);
  }
  return acc.value();
}

double forward_integral(const SampledPath& integrand, const SampledPath& integrator,
                        const PartitionScheme& scheme, std::size_t level, double t) {
  const auto& grid = scheme.level(level);
  const auto y = values_on_grid(integrand, grid);
  const auto x = values_on_grid(integrator, grid);
  KahanSum acc;
  for (std::size_t j = 1; j < grid.size() && grid[j] <= t; ++j) {
    acc.add(y[j - 1] * (x[j] - x[j - 1]));
  }
  return acc.value();
}

SampledPath piecewise_constant_approx(const SampledPath& path, const PartitionScheme& scheme,
                                      std::size_t level) {
  const auto& grid = scheme.level(level);
  auto values = values_on_grid(path, grid);
  return SampledPath(grid, std::move(values), Interp::PiecewiseConstantForward,
                     path.state_space());
}

namespace {

// Shared kernel: the integrand at node t_i is the vertical derivative on the
// step approximation stopped just before t_i (endpoint = raw x(t_i), earlier
// values future-shifted), multiplying the raw increment over [t_i, t_{i+1}].
// Only cells with t_{i+1} <= t are visited.
template <typename NodeFn>
void follmer_accumulate(const NonAnticipativeFunctional& F, const SampledPath& path,
                        const PartitionScheme& scheme, std::size_t level, double t,
                        DerivativeMode mode, NodeFn&& on_cell) {
  const auto& grid = scheme.level(level);
  const SampledPath step = piecewise_constant_approx(path, scheme, level);
  const auto& x = step.values();  // raw samples on the level grid
  for (std::size_t i = 0; i + 1 < grid.size() && grid[i + 1] <= t; ++i) {
    // stopped-just-before slice: agrees with the step path on [0, t_i),
    // carries the raw sample at t_i
    PathSlice node_slice(step, grid[i], x[i]);
    const double integrand = vertical_derivative(F, node_slice, mode);
    if (!std::isfinite(integrand)) {
      throw EvaluationError("integrand not finite at node", grid[i]);
    }
    on_cell(i, integrand * (x[i + 1] - x[i]));
  }
}

}  // namespace

double follmer_integral(const NonAnticipativeFunctional& F, const SampledPath& path,
                        const PartitionScheme& scheme, std::size_t level, double t,
                        DerivativeMode mode) {
  KahanSum acc;
  follmer_accumulate(F, path, scheme, level, t, mode,
                     [&](std::size_t, double term) { acc.add(term); });
  return acc.value();
}

std::vector<double> follmer_prefix(const NonAnticipativeFunctional& F, const SampledPath& path,
                                   const PartitionScheme& scheme, std::size_t level, double v0,
                                   DerivativeMode mode) {
  const auto& grid = scheme.level(level);
  std::vector<double> wealth(grid.size(), v0);
  KahanSum acc;
  follmer_accumulate(F, path, scheme, level, grid.back(), mode,
                     [&](std::size_t i, double term) {
                       acc.add(term);
                       wealth[i + 1] = v0 + acc.value();
                     });
  return wealth;
}

}  // namespace pathlab
