#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "pathlab/bsv.hpp"
#include "pathlab/cylindrical.hpp"
#include "pathlab/functional.hpp"
#include "pathlab/integrals.hpp"

namespace pathlab {

// Strategy read off a value functional: the position is the endpoint
// sensitivity, evaluated on the discretized pre-limit slices at integration
// nodes.
struct CFStrategy {
  NonAnticipativeFunctional functional;
  DerivativeMode mode = DerivativeMode::PreferAnalytic;
};

inline constexpr std::array<double, 4> kCheckpointFractions{0.25, 0.5, 0.75, 1.0};

// Wealth along the level grid: v0 plus the forward sum (position sampled on
// cells of the raw path) or the discretized-integrand sum for CF.
SampledPath wealth_process(const BSVStrategy& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0);
SampledPath wealth_process(const CFStrategy& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0);
SampledPath wealth_process(const CylindricalIntegrand& strategy, const SampledPath& path,
                           const PartitionScheme& scheme, std::size_t level, double v0);

struct ReplicationLevelRow {
  std::size_t level = 0;
  double mesh = 0.0;
  double target = 0.0;   // F_T(x_T)
  double initial = 0.0;  // F_0(x_0)
  double wealth = 0.0;   // integral wealth at T
  double error = 0.0;    // target - initial - wealth
  double max_checkpoint_error = 0.0;
  double nds_min = 0.0;  // min of the wealth path over the grid
  std::array<double, 4> checkpoint_errors{};
  std::array<double, 4> checkpoint_times{};
  std::array<double, 4> checkpoint_targets{};
  std::array<double, 4> checkpoint_wealth{};
};

struct ReplicationReport {
  std::vector<ReplicationLevelRow> rows;
  double loglog_slope = 0.0;

  const ReplicationLevelRow& finest() const { return rows.back(); }
  const ReplicationLevelRow& coarsest() const { return rows.front(); }
};

// Per level, the defect of F_t - F_0 = integral wealth at the quarter
// checkpoints of [0, T]. For paths generated with a mixing component this
// measures directly how the reference-model hedge carries over pathwise.
ReplicationReport replicate_cf(const NonAnticipativeFunctional& F, const SampledPath& path,
                               const PartitionScheme& scheme,
                               DerivativeMode mode = DerivativeMode::PreferAnalytic);

// default pass rule: |error| <= max(rel |F_T|, abs) at the finest level
bool replication_pass(const ReplicationReport& report, double rel = 1e-3, double abs = 1e-4);

struct StrategyCompareNode {
  double t = 0.0;
  double cf_value = 0.0;
  double bsv_value = 0.0;
};

struct StrategyEqualityReport {
  std::vector<StrategyCompareNode> nodes;
  double max_node_diff = 0.0;
  // wealth gap per own conventions (CF discretized nodes vs BSV forward)
  double max_wealth_diff_per_convention = 0.0;
  // both integrands sampled at raw forward nodes
  double max_wealth_diff_common = 0.0;
};

// Node-by-node comparison of the functional's derivative strategy with a
// rule-form strategy, plus the wealth gaps at the quarter checkpoints.
StrategyEqualityReport strategy_equality_check(const NonAnticipativeFunctional& F,
                                               const BSVStrategy& phi, const SampledPath& path,
                                               const PartitionScheme& scheme, std::size_t level,
                                               DerivativeMode mode = DerivativeMode::PreferAnalytic);

// The derivative-of-a-process extension: given a process builder Y and a
// rule strategy phi that replicates it (certified by checking
// |Y(t) - Y(0) - forward wealth| at the checkpoints against tol), returns
// the strategy path along the level grid. A failed certificate throws
// CertificateError carrying the offending checkpoint.
SampledPath extended_vertical_derivative(
    const std::function<SampledPath(const SampledPath&)>& y_builder, const BSVStrategy& phi,
    const SampledPath& path, const PartitionScheme& scheme, std::size_t level, double tol = 1e-4);

}  // namespace pathlab
