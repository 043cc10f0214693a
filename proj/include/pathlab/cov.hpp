#pragma once

#include <cstddef>
#include <vector>

#include "pathlab/functional.hpp"
#include "pathlab/integrals.hpp"
#include "pathlab/partition.hpp"

namespace pathlab {

// One level of the change-of-variables decomposition
//   F_t - F_0 = int D F du + 1/2 int ∂^2 F d[x] + (discretized-integrand sum)
// residual is the defect of that identity at the level, by construction.
struct CoVLevelRow {
  std::size_t level = 0;
  double mesh = 0.0;
  double f_end = 0.0;
  double f_start = 0.0;
  double horizontal = 0.0;
  double second_order = 0.0;
  double follmer = 0.0;
  double residual = 0.0;
};

struct CoVReport {
  std::vector<CoVLevelRow> rows;
  double loglog_slope = 0.0;  // residual decay rate vs mesh, round-off floor excluded
};

// Per level: F_t(x_t), F_0(x_0), trapezoid quadrature of the time-flow
// derivative, the pathwise Stieltjes sum of the second endpoint derivative
// against squared increments, the discretized-integrand sum, and the
// residual.
CoVReport change_of_variables_decomposition(const NonAnticipativeFunctional& F,
                                            const SampledPath& path,
                                            const PartitionScheme& scheme, double t,
                                            DerivativeMode mode = DerivativeMode::PreferAnalytic);

}  // namespace pathlab
