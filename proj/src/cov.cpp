#include "pathlab/cov.hpp"

#include <cmath>

#include "pathlab/numerics.hpp"

namespace pathlab {

CoVReport change_of_variables_decomposition(const NonAnticipativeFunctional& F,
                                            const SampledPath& path,
                                            const PartitionScheme& scheme, double t,
                                            DerivativeMode mode) {
  CoVReport report;
  const double horizon = scheme.horizon();
  const double f_end = F.eval(restrict_to(path, t));
  const double f_start = F.eval(restrict_to(path, 0.0));

  for (std::size_t level = 0; level < scheme.level_count(); ++level) {
    const auto& grid = scheme.level(level);
    const auto x = values_on_grid(path, grid);

    // trapezoid quadrature of the time-flow derivative along raw slices
    KahanSum horizontal;
    double prev_hd = 0.0;
    bool have_prev = false;
    for (std::size_t j = 0; j < grid.size() && grid[j] <= t; ++j) {
      double hd;
      if (mode == DerivativeMode::PreferAnalytic && F.hd) {
        hd = F.hd(restrict_to(path, grid[j]));
      } else if (grid[j] >= horizon) {
        hd = prev_hd;  // no room for a forward difference; close with the last node
      } else {
        hd = horizontal_derivative_fd(F, restrict_to(path, grid[j]), horizon);
      }
      if (have_prev) horizontal.add(0.5 * (prev_hd + hd) * (grid[j] - grid[j - 1]));
      prev_hd = hd;
      have_prev = true;
    }

    // pathwise Stieltjes sum of the second derivative against (dx)^2
    KahanSum second;
    for (std::size_t j = 1; j < grid.size() && grid[j] <= t; ++j) {
      const double d = x[j] - x[j - 1];
      const double vd2 = second_vertical_derivative(F, restrict_to(path, grid[j - 1]), mode);
      second.add(0.5 * vd2 * d * d);
    }

    const double follmer = follmer_integral(F, path, scheme, level, t, mode);

    CoVLevelRow row;
    row.level = level;
    row.mesh = scheme.mesh(level);
    row.f_end = f_end;
    row.f_start = f_start;
    row.horizontal = horizontal.value();
    row.second_order = second.value();
    row.follmer = follmer;
    row.residual = f_end - f_start - (row.horizontal + row.second_order + row.follmer);
    report.rows.push_back(row);
  }

  std::vector<double> meshes, residuals;
  for (const auto& r : report.rows) {
    meshes.push_back(r.mesh);
    residuals.push_back(r.residual);
  }
  report.loglog_slope = loglog_slope(meshes, residuals, roundoff_floor(f_end));
  return report;
}

}  // namespace pathlab
