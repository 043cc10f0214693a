#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/numerics.hpp"

namespace pathlab {

// Volatility shape sigma(price). Linear and Constant have closed-form price
// maps; Custom goes through the ODE-solved table.
struct SigmaFunction {
  enum class Kind { Linear, Constant, Custom };

  Kind kind = Kind::Linear;
  double param = 1.0;  // Linear: sigma(x) = param * x ; Constant: sigma(x) = param
  std::function<double(double)> fn;  // Custom only

  double operator()(double x) const {
    switch (kind) {
      case Kind::Linear: return param * x;
      case Kind::Constant: return param;
      case Kind::Custom:
        if (!fn) throw std::invalid_argument("volatility shape has no evaluation map");
        return fn(x);
    }
    return 0.0;
  }

  static SigmaFunction linear(double alpha) { return {Kind::Linear, alpha, {}}; }
  static SigmaFunction constant(double c) { return {Kind::Constant, c, {}}; }
  static SigmaFunction custom(std::function<double(double)> f) {
    return {Kind::Custom, 0.0, std::move(f)};
  }
  std::string describe() const;
};

// Dense table of the solution to f' = sigma(f), f(0) = s0, on [x_lo, x_hi],
// with cubic Hermite evaluation between nodes (the node derivatives
// sigma(f) come for free from the ODE). Evaluation outside the table range
// throws DomainViolation carrying the offending coordinate.
class FSigmaTable {
 public:
  FSigmaTable(std::vector<double> xs, std::vector<double> fs, std::vector<double> dfs);

  double operator()(double x) const;
  double derivative(double x) const;  // sigma(f(x)) by the same interpolation
  double x_lo() const { return xs_->front(); }
  double x_hi() const { return xs_->back(); }

 private:
  std::size_t cell_of(double x) const;
  std::shared_ptr<const std::vector<double>> xs_, fs_, dfs_;
};

// Fixed-step 4th-order integration in both directions from 0. If the
// solution leaves the declared state space or stops being finite inside the
// requested range, throws DomainViolation carrying the exit point.
FSigmaTable f_sigma_solve(const SigmaFunction& sigma, double s0, double x_lo, double x_hi,
                          double step = 1e-3,
                          std::optional<Interval> state_space = std::nullopt);

// Price map driver -> price: closed form for the Linear and Constant
// families, ODE table for Custom. An explicit domain restricts evaluation
// even for closed forms.
class FSigmaMap {
 public:
  static FSigmaMap exponential(double s0, double alpha);     // s0 * exp(alpha x)
  static FSigmaMap shifted_linear(double s0, double c);      // s0 + c x
  static FSigmaMap from_table(FSigmaTable table);

  double operator()(double x) const;
  double s0() const { return s0_; }
  void set_domain(Interval domain) { domain_ = domain; }
  const std::optional<Interval>& domain() const { return domain_; }
  std::optional<Interval> range_state_space() const;  // e.g. positivity for exponential

 private:
  enum class Kind { Exponential, ShiftedLinear, Table } kind_ = Kind::Exponential;
  double s0_ = 1.0;
  double alpha_ = 1.0;
  std::optional<FSigmaTable> table_;
  std::optional<Interval> domain_;
};

// Builds the price map for a sigma shape; Custom solves the ODE over
// [x_lo, x_hi].
FSigmaMap make_price_map(const SigmaFunction& sigma, double s0, double x_lo, double x_hi);

}  // namespace pathlab
