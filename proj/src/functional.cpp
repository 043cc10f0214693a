#include "pathlab/functional.hpp"

#include <cmath>

#include "pathlab/errors.hpp"

namespace pathlab {

namespace {

bool in_space(const NonAnticipativeFunctional& F, const PathSlice& slice, double value) {
  if (F.state_space && !F.state_space->contains(value)) return false;
  const auto& ps = slice.base().state_space();
  if (ps && !ps->contains(value)) return false;
  return true;
}

// pick a bump that keeps both endpoints inside the state space, shrinking
// once by a factor 10 before giving up
double fit_bump(const NonAnticipativeFunctional& F, const PathSlice& slice, double h) {
  const double x = slice.endpoint();
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (in_space(F, slice, x + h) && in_space(F, slice, x - h)) return h;
    h *= 0.1;
  }
  throw DomainViolation("finite difference bump left the declared state space", x);
}

double checked(double value, double t, const char* what) {
  if (!std::isfinite(value)) throw EvaluationError(what, t);
  return value;
}

}  // namespace

double vertical_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                              double h) {
  if (h <= 0.0) h = fd::bump_first(slice.endpoint());
  h = fit_bump(F, slice, h);
  const double up = checked(F.eval(vertical_perturb(slice, h)), slice.time(),
                            "functional evaluation not finite (up bump)");
  const double dn = checked(F.eval(vertical_perturb(slice, -h)), slice.time(),
                            "functional evaluation not finite (down bump)");
  return (up - dn) / (2.0 * h);
}

double second_vertical_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                     double h) {
  if (h <= 0.0) h = fd::bump_second(slice.endpoint());
  h = fit_bump(F, slice, h);
  const double t = slice.time();
  const double up = checked(F.eval(vertical_perturb(slice, h)), t,
                            "functional evaluation not finite (up bump)");
  const double mid = checked(F.eval(slice), t, "functional evaluation not finite");
  const double dn = checked(F.eval(vertical_perturb(slice, -h)), t,
                            "functional evaluation not finite (down bump)");
  return (up - 2.0 * mid + dn) / (h * h);
}

double horizontal_derivative_fd(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                double horizon, double h) {
  const double t = slice.time();
  if (t >= horizon) {
    throw std::out_of_range("horizontal_derivative_fd: no room to the right of t");
  }
  if (h <= 0.0) h = fd::bump_horizontal(horizon);
  if (t + h > horizon) h = horizon - t;
  const double here = checked(F.eval(slice), t, "functional evaluation not finite");
  const double ahead = checked(F.eval(horizontal_extend(slice, h, horizon)), t,
                               "functional evaluation not finite (extension)");
  return (ahead - here) / h;
}

double vertical_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                           DerivativeMode mode) {
  if (mode == DerivativeMode::PreferAnalytic && F.vd) {
    return F.vd(slice);
  }
  return vertical_derivative_fd(F, slice);
}

double second_vertical_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                                  DerivativeMode mode) {
  if (mode == DerivativeMode::PreferAnalytic && F.vd2) {
    return F.vd2(slice);
  }
  return second_vertical_derivative_fd(F, slice);
}

double horizontal_derivative(const NonAnticipativeFunctional& F, const PathSlice& slice,
                             double horizon, DerivativeMode mode) {
  if (mode == DerivativeMode::PreferAnalytic && F.hd) {
    return F.hd(slice);
  }
  return horizontal_derivative_fd(F, slice, horizon);
}

// ---- stock functionals ---------------------------------------------------

NonAnticipativeFunctional running_average_functional(double horizon) {
  NonAnticipativeFunctional F;
  F.name = "running-average";
  const double T = horizon;
  F.eval = [T](const PathSlice& s) {
    return s.integral() / T + (T - s.time()) / T * s.endpoint();
  };
  F.vd = [T](const PathSlice& s) { return (T - s.time()) / T; };
  F.vd2 = [](const PathSlice&) { return 0.0; };
  F.hd = [](const PathSlice&) { return 0.0; };
  F.regularity_tags = {"left-continuous", "boundedness-preserving"};
  return F;
}

NonAnticipativeFunctional integral_plus_tail_functional(double horizon) {
  NonAnticipativeFunctional F;
  F.name = "integral-plus-tail";
  const double T = horizon;
  F.eval = [T](const PathSlice& s) { return s.integral() + (T - s.time()) * s.endpoint(); };
  F.vd = [T](const PathSlice& s) { return T - s.time(); };
  F.vd2 = [](const PathSlice&) { return 0.0; };
  F.hd = [](const PathSlice&) { return 0.0; };
  F.regularity_tags = {"left-continuous", "boundedness-preserving"};
  return F;
}

NonAnticipativeFunctional endpoint_power_functional(int p) {
  NonAnticipativeFunctional F;
  F.name = "endpoint-power-" + std::to_string(p);
  F.eval = [p](const PathSlice& s) { return std::pow(s.endpoint(), p); };
  F.vd = [p](const PathSlice& s) { return p * std::pow(s.endpoint(), p - 1); };
  F.vd2 = [p](const PathSlice& s) {
    return p * (p - 1) * std::pow(s.endpoint(), p - 2);
  };
  F.hd = [](const PathSlice&) { return 0.0; };
  F.regularity_tags = {"left-continuous", "boundedness-preserving"};
  return F;
}

NonAnticipativeFunctional constant_functional(double c) {
  NonAnticipativeFunctional F;
  F.name = "constant";
  F.eval = [c](const PathSlice&) { return c; };
  F.vd = [](const PathSlice&) { return 0.0; };
  F.vd2 = [](const PathSlice&) { return 0.0; };
  F.hd = [](const PathSlice&) { return 0.0; };
  return F;
}

NonAnticipativeFunctional endpoint_functional() {
  NonAnticipativeFunctional F;
  F.name = "endpoint";
  F.eval = [](const PathSlice& s) { return s.endpoint(); };
  F.vd = [](const PathSlice&) { return 1.0; };
  F.vd2 = [](const PathSlice&) { return 0.0; };
  F.hd = [](const PathSlice&) { return 0.0; };
  return F;
}

}  // namespace pathlab
