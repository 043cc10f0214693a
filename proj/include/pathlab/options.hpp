#pragma once

#include "pathlab/bsv.hpp"
#include "pathlab/cylindrical.hpp"
#include "pathlab/functional.hpp"
#include "pathlab/hedging.hpp"

namespace pathlab {

// Continuous average (1/T) int_0^T x ds: value functional pinned to the
// endpoint, derivative hedge (T-t)/T, and the same hedge in rule form.
struct ContinuousAverageOption {
  NonAnticipativeFunctional value_functional;
  BSVStrategy bsv;
  double horizon;
};
ContinuousAverageOption continuous_average_option(double horizon);

// Discrete average (1/(N+1)) sum_j x(jT/N).
//  raw_cylindrical: the grid-anchored functional itself (its decomposition
//    carries a genuine time-flow term).
//  replicating: raw + N/((N+1)T) (T-t) x(t), the martingale-value form whose
//    decomposition has no drift terms and whose derivative hedge replicates.
//  bsv: the replicating hedge in rule form.
//  constant_hedge: the same hedge simplified to its per-cell constants, as a
//    rebalance-schedule integrand (telescopes exactly on aligned grids).
struct DiscreteAverageOption {
  NonAnticipativeFunctional raw_cylindrical;
  NonAnticipativeFunctional replicating;
  BSVStrategy bsv;
  CylindricalIntegrand constant_hedge;
  std::vector<double> fixing_grid;
  double horizon;
  int n_fixings;
};
DiscreteAverageOption discrete_average_option(double horizon, int n_fixings);

struct AsianQuote {
  double value = 0.0;
  double delta = 0.0;
};

// Fixed-strike call on the continuous geometric average, zero rates. State
// is (t, spot, G) with G = int_0^t log S ds; the remaining log-average is
// Gaussian with
//   m = (G + (T-t) log spot)/T - vol^2 (T-t)^2 / (4T),
//   v = vol^2 (T-t)^3 / (3 T^2),
// so value = e^{m+v/2} Phi(d1) - K Phi(d2) and the spot sensitivity follows
// by the chain rule through m.
AsianQuote geometric_asian_value_and_hedge(double t, double spot, double log_integral,
                                           double strike, double horizon, double vol);

// Rule-form strategy (hindsight factor int log S ds) plus the value
// functional for derivative cross-checks.
struct GeometricAsianOption {
  BSVStrategy bsv;
  NonAnticipativeFunctional value_functional;
  double strike, vol, horizon;
};
GeometricAsianOption geometric_asian_option(double horizon, double strike, double vol);

}  // namespace pathlab
