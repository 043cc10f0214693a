#pragma once

#include <cstddef>
#include <vector>

#include "pathlab/functional.hpp"
#include "pathlab/partition.hpp"
#include "pathlab/path.hpp"

namespace pathlab {

// Values of a path at every point of a grid.
std::vector<double> values_on_grid(const SampledPath& path, const std::vector<double>& grid);

// Sum of squared increments over grid cells of the level, up to the largest
// grid point <= t. Nondecreasing in t at fixed level.
double quadratic_variation(const SampledPath& path, const PartitionScheme& scheme,
                           std::size_t level, double t);

// Left-endpoint (non-anticipative) Riemann-Stieltjes sum of the integrand
// against increments of the integrator, truncated at the largest grid point
// <= t.
double forward_integral(const SampledPath& integrand, const SampledPath& integrator,
                        const PartitionScheme& scheme, std::size_t level, double t);

// Step approximation carrying x(t_{j+1}) on [t_j, t_{j+1}) and x(T) at T.
// The stored samples are the raw path values on the level grid.
SampledPath piecewise_constant_approx(const SampledPath& path, const PartitionScheme& scheme,
                                      std::size_t level);

// Sum over nodes t_i (with t_{i+1} <= t) of the functional's vertical
// derivative, evaluated on the step approximation stopped just before t_i,
// times the raw increment x(t_{i+1}) - x(t_i). The discretization of the
// integrand before the limit is what distinguishes this from the plain
// forward sum.
double follmer_integral(const NonAnticipativeFunctional& F, const SampledPath& path,
                        const PartitionScheme& scheme, std::size_t level, double t,
                        DerivativeMode mode = DerivativeMode::PreferAnalytic);

// Running version: wealth at every grid point of the level (value v0 at 0).
std::vector<double> follmer_prefix(const NonAnticipativeFunctional& F, const SampledPath& path,
                                   const PartitionScheme& scheme, std::size_t level, double v0,
                                   DerivativeMode mode = DerivativeMode::PreferAnalytic);

}  // namespace pathlab
