#include "pathlab/hedging.hpp"

#include <algorithm>
#include <cmath>

#include "pathlab/errors.hpp"
#include "pathlab/numerics.hpp"

namespace pathlab {

namespace {

// forward wealth: position sampled at the left node of each raw-path cell
template <typename PositionFn>
SampledPath forward_wealth(PositionFn&& position, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0) {
  const auto& grid = scheme.level(level);
  const auto x = values_on_grid(path, grid);
  std::vector<double> wealth(grid.size(), v0);
  KahanSum acc;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double pos = position(restrict_to(path, grid[i]));
    if (!std::isfinite(pos)) {
      throw EvaluationError("strategy evaluation not finite at node", grid[i]);
    }
    acc.add(pos * (x[i + 1] - x[i]));
    wealth[i + 1] = v0 + acc.value();
  }
  return SampledPath(grid, std::move(wealth));
}

std::size_t index_at_or_below(const std::vector<double>& grid, double t) {
  auto it = std::upper_bound(grid.begin(), grid.end(), t);
  return it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
}

}  // namespace

SampledPath wealth_process(const BSVStrategy& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0) {
  return forward_wealth([&](const PathSlice& s) { return strategy.position(s); }, path, scheme,
                        level, v0);
}

SampledPath wealth_process(const CylindricalIntegrand& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0) {
  return forward_wealth([&](const PathSlice& s) { return strategy.node_value(s); }, path, scheme,
                        level, v0);
}

SampledPath wealth_process(const CFStrategy& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0) {
  const auto& grid = scheme.level(level);
  auto wealth = follmer_prefix(strategy.functional, path, scheme, level, v0, strategy.mode);
  return SampledPath(grid, std::move(wealth));
}

ReplicationReport replicate_cf(const NonAnticipativeFunctional& F, const SampledPath& path,
                               const PartitionScheme& scheme, DerivativeMode mode) {
  ReplicationReport report;
  const double T = scheme.horizon();
  const double initial = F.eval(restrict_to(path, 0.0));

  for (std::size_t level = 0; level < scheme.level_count(); ++level) {
    const auto& grid = scheme.level(level);
    const auto wealth = follmer_prefix(F, path, scheme, level, 0.0, mode);

    ReplicationLevelRow row;
    row.level = level;
    row.mesh = scheme.mesh(level);
    row.initial = initial;
    row.nds_min = *std::min_element(wealth.begin(), wealth.end());

    for (std::size_t c = 0; c < kCheckpointFractions.size(); ++c) {
      const double t = kCheckpointFractions[c] * T;
      const std::size_t j = index_at_or_below(grid, t);
      const double target = F.eval(restrict_to(path, grid[j]));
      row.checkpoint_times[c] = grid[j];
      row.checkpoint_targets[c] = target;
      row.checkpoint_wealth[c] = wealth[j];
      row.checkpoint_errors[c] = target - initial - wealth[j];
    }
    row.target = row.checkpoint_targets.back();
    row.wealth = row.checkpoint_wealth.back();
    row.error = row.checkpoint_errors.back();
    row.max_checkpoint_error = 0.0;
    for (double e : row.checkpoint_errors) {
      row.max_checkpoint_error = std::max(row.max_checkpoint_error, std::abs(e));
    }
    report.rows.push_back(row);
  }

  std::vector<double> meshes, errors;
  for (const auto& r : report.rows) {
    meshes.push_back(r.mesh);
    errors.push_back(r.error);
  }
  report.loglog_slope = loglog_slope(meshes, errors, roundoff_floor(report.rows.back().target));
  return report;
}

bool replication_pass(const ReplicationReport& report, double rel, double abs) {
  const auto& last = report.finest();
  return std::abs(last.error) <= std::max(rel * std::abs(last.target), abs);
}

StrategyEqualityReport strategy_equality_check(const NonAnticipativeFunctional& F,
                                               const BSVStrategy& phi, const SampledPath& path,
                                               const PartitionScheme& scheme, std::size_t level,
                                               DerivativeMode mode) {
  StrategyEqualityReport out;
  const auto& grid = scheme.level(level);
  const SampledPath step = piecewise_constant_approx(path, scheme, level);
  const auto& x = step.values();

  // node values: derivative strategy on the stopped step slices, rule
  // strategy on the raw slices
  KahanSum cf_acc, bsv_acc, common_acc;
  std::vector<double> cf_wealth{0.0}, bsv_wealth{0.0}, common_wealth{0.0};
  out.nodes.reserve(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    PathSlice node_slice(step, grid[i], x[i]);
    const double cf = vertical_derivative(F, node_slice, mode);
    const PathSlice raw = restrict_to(path, grid[i]);
    const double bsv = phi.position(raw);
    const double cf_common = vertical_derivative(F, raw, mode);
    out.nodes.push_back({grid[i], cf, bsv});
    out.max_node_diff = std::max(out.max_node_diff, std::abs(cf - bsv));

    const double dx = x[i + 1] - x[i];
    cf_acc.add(cf * dx);
    bsv_acc.add(bsv * dx);
    common_acc.add(cf_common * dx);
    cf_wealth.push_back(cf_acc.value());
    bsv_wealth.push_back(bsv_acc.value());
    common_wealth.push_back(common_acc.value());
  }

  const double T = scheme.horizon();
  for (double frac : kCheckpointFractions) {
    const std::size_t j = index_at_or_below(grid, frac * T);
    out.max_wealth_diff_per_convention =
        std::max(out.max_wealth_diff_per_convention, std::abs(cf_wealth[j] - bsv_wealth[j]));
    out.max_wealth_diff_common =
        std::max(out.max_wealth_diff_common, std::abs(common_wealth[j] - bsv_wealth[j]));
  }
  return out;
}

SampledPath extended_vertical_derivative(
    const std::function<SampledPath(const SampledPath&)>& y_builder, const BSVStrategy& phi,
    const SampledPath& path, const PartitionScheme& scheme, std::size_t level, double tol) {
  const SampledPath y = y_builder(path);
  const double c = y(0.0);
  const SampledPath wealth = wealth_process(phi, path, scheme, level, 0.0);

  const double T = scheme.horizon();
  const auto& grid = scheme.level(level);
  for (double frac : kCheckpointFractions) {
    const std::size_t j = index_at_or_below(grid, frac * T);
    const double defect = std::abs(y(grid[j]) - c - wealth.values()[j]);
    if (defect > tol) {
      throw CertificateError("strategy does not replicate the process at a checkpoint", grid[j]);
    }
  }

  std::vector<double> positions(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    positions[i] = phi.position(restrict_to(path, grid[i]));
  }
  return SampledPath(grid, std::move(positions));
}

}  // namespace pathlab
