#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathlab/numerics.hpp"
#include "pathlab/path.hpp"

namespace pathlab {

// A time-indexed family of maps on path restrictions that sees only the
// past: eval(slice) may depend on the slice up to its time and nothing else.
// Analytic derivative maps are optional; finite differences fill the gaps.
// regularity_tags records declared class memberships (left-continuity,
// boundedness preservation, ...) as documentation, not runtime checks.
struct NonAnticipativeFunctional {
  std::string name;
  std::function<double(const PathSlice&)> eval;
  std::function<double(const PathSlice&)> vd;   // endpoint sensitivity
  std::function<double(const PathSlice&)> vd2;  // second endpoint sensitivity
  std::function<double(const PathSlice&)> hd;   // time-flow (frozen path) sensitivity
  std::optional<Interval> state_space;
  std::vector<std::string> regularity_tags;

  double operator()(const PathSlice& s) const { return eval(s); }
};

enum class DerivativeMode { PreferAnalytic, FiniteDifference };

namespace fd {
// Bump rules: first derivative ~ eps^(1/2)-ish scaled, second coarser, time
// step proportional to the horizon.
inline double bump_first(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }
inline double bump_second(double x) { return 1e-3 * std::max(1.0, std::abs(x)); }
inline double bump_horizontal(double horizon) { return 1e-4 * horizon; }

inline constexpr double tol_rel_first = 1e-4;
inline constexpr double tol_abs_first = 1e-6;
inline constexpr double tol_rel_second = 1e-2;
}  // namespace fd

// Central difference (F(x^{+h}) - F(x^{-h})) / 2h of the endpoint bump.
// h = 0 picks the default bump rule. If a bump leaves the declared state
// space, h shrinks once by a factor 10 before giving up.
double vertical_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                              double h = 0.0);

// Second-order central difference (F(x^{+h}) - 2F(x) + F(x^{-h})) / h^2.
double second_vertical_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                     double h = 0.0);

// Forward difference (F_{t+h}(frozen extension) - F_t(x_t)) / h. h shrinks
// to fit when t + h > horizon; t = horizon is out of range.
double horizontal_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                double horizon, double h = 0.0);

// Analytic map when present (and mode allows), else finite difference.
double vertical_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                           DerivativeMode mode = DerivativeMode::PreferAnalytic);
double second_vertical_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                  DerivativeMode mode = DerivativeMode::PreferAnalytic);
double horizontal_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                             double horizon, DerivativeMode mode = DerivativeMode::PreferAnalytic);

// ---- stock functionals -------------------------------------------------

// (1/T) int_0^t x ds + ((T-t)/T) x(t): running average pinned to the endpoint.
NonAnticipativeFunctional running_average_functional(double horizon);

// int_0^t x ds + (T-t) x(t): unnormalized variant.
NonAnticipativeFunctional integral_plus_tail_functional(double horizon);

// x(t)^p with analytic derivatives.
NonAnticipativeFunctional endpoint_power_functional(int p);

NonAnticipativeFunctional constant_functional(double c);
NonAnticipativeFunctional endpoint_functional();

}  // namespace pathlab
