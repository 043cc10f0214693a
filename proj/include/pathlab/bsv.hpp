#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathlab/f_sigma.hpp"
#include "pathlab/path.hpp"

namespace pathlab {

// An adapted, continuous, bounded-variation statistic of the past path
// (running average, maximum, integrated log, ...). variation_tag documents
// the variation/Lipschitz constant where known.
struct HindsightFactor {
  std::string name;
  std::function<double(const PathSlice&)> eval;
  std::string variation_tag;
};

// Trading rule phi(t, x(t), g_1(t, x_t), ..., g_n(t, x_t)). Partials are
// optional; finite differences with the module bump rules fill in.
struct BSVStrategy {
  std::string name;
  std::function<double(double, double, std::span<const double>)> phi;
  std::function<double(double, double, std::span<const double>)> dphi_dx;
  std::function<double(double, double, std::span<const double>)> dphi_dt;
  std::vector<std::function<double(double, double, std::span<const double>)>> dphi_dy;
  std::vector<HindsightFactor> factors;
  std::optional<double> nds_floor;  // admissibility bound a > 0

  double position(const PathSlice& slice) const;
};

// Wealth of a smooth strategy along a path, built from the primitive
// u(t, x, y) = int_{s0}^x phi(t, xi, y) dxi and its correction integrals
// (time drift, factor drift, and the volatility term), with no stochastic
// integration anywhere:
//   v(t) = u(t, eta(t), g(t)) - sum_j int ∂_{y_j}u dg_j - int ∂_t u dr
//          - 1/2 int ∂_x phi sigma^2(eta) dr.
// The dg_j integrals are trapezoid Stieltjes sums on the factor paths.
double wealth_functional(double t, const PathSlice& eta, const BSVStrategy& strategy,
                         const SigmaFunction& sigma);

// running maximum / running integral factors used by tests and options
HindsightFactor running_integral_factor();
HindsightFactor running_log_integral_factor();
HindsightFactor running_maximum_factor();

}  // namespace pathlab
