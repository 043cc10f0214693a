#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pathlab/numerics.hpp"

namespace pathlab {

// How sampled values extend to the whole interval.
//   ContinuousLinear: straight lines between samples.
//   PiecewiseConstantForward: the value x(t_{j+1}) is carried on
//   [t_j, t_{j+1}) and x(t_end) holds at t_end, i.e. the cadlag step
//   approximation used by the discretized integrands.
enum class Interp { ContinuousLinear, PiecewiseConstantForward };

// A path observed on a finite grid, immutable after construction. Copies are
// cheap (shared storage), so slices and ensembles can pass paths around
// freely and evaluation is safe from any thread.
class SampledPath {
 public:
  SampledPath() = default;
  SampledPath(std::vector<double> grid, std::vector<double> values,
              Interp interp = Interp::ContinuousLinear,
              std::optional<Interval> state_space = std::nullopt);

  std::size_t size() const { return data_->grid.size(); }
  double t_end() const { return data_->grid.back(); }
  std::span<const double> grid() const { return data_->grid; }
  std::span<const double> values() const { return data_->values; }
  Interp interp() const { return interp_; }
  const std::optional<Interval>& state_space() const { return state_space_; }

  // value at u in [0, t_end] under the interpolation rule
  double operator()(double u) const;

  // lim_{srise u} x(s); equals the value for continuous interpolation
  double left_limit(double u) const;

  // index of u in the stored grid when it is an exact grid point
  std::optional<std::size_t> grid_index_of(double u) const;

  // exact integral of the interpolated path over [0, t]
  double integral_to(double t) const;

  bool shares_storage_with(const SampledPath& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::vector<double> grid;
    std::vector<double> values;
  };
  std::shared_ptr<const Data> data_;
  Interp interp_ = Interp::ContinuousLinear;
  std::optional<Interval> state_space_;
};

// A path restricted to [0, t], with an optional replacement of the value at
// the right endpoint. The override carries both vertical perturbations and
// the pre-limit evaluation point of discretized integrands; everything on
// [0, t) is always read from the base path.
class PathSlice {
 public:
  PathSlice(SampledPath base, double t,
            std::optional<double> endpoint_override = std::nullopt);

  double time() const { return t_; }
  const SampledPath& base() const { return base_; }
  const std::optional<double>& endpoint_override() const { return override_; }

  double operator()(double u) const;
  double endpoint() const { return override_ ? *override_ : base_(t_); }

  // left limit of the slice at its own time; ignores the override since the
  // override only changes the single point value at t
  double left_limit_end() const { return base_.left_limit(t_); }

  // Recorded sample at u: the stored grid sample when u is a grid point,
  // otherwise the interpolated value. Endpoint overrides are not consulted;
  // anchors of piecewise definitions are information recorded when the
  // rebalance happened, not the currently perturbed endpoint.
  double anchor_value(double u) const;

  // Recorded-sample statistics: trapezoid over the stored samples up to t,
  // bridged linearly. On a step approximation built from a path's samples
  // this reproduces the raw path's statistic, so sampled-data functionals
  // see the same information through either carrier. The endpoint override
  // never enters (a single point carries no mass).
  double integral() const;
  double transformed_integral(const std::function<double(double)>& f) const;

 private:
  SampledPath base_;
  double t_;
  std::optional<double> override_;
};

// ---- path surgery -----------------------------------------------------

// Restriction to [0, t]; t need not be a grid point.
PathSlice restrict_to(const SampledPath& path, double t);
PathSlice restrict_to(const PathSlice& slice, double t);

// Extends by h >= 0, freezing the current endpoint value on (t, t+h].
// horizon bounds the move: t + h must not exceed it.
PathSlice horizontal_extend(const PathSlice& slice, double h, double horizon);

// Bumps the endpoint value by h; everything before t is untouched.
PathSlice vertical_perturb(const PathSlice& slice, double h);

// Replaces the endpoint by the left limit at t.
PathSlice pre_limit(const PathSlice& slice);

// sup-distance of two slices after horizontally extending the shorter one,
// plus the time gap. Computed exactly over the union of both grids.
double d_infinity(const PathSlice& a, const PathSlice& b);

}  // namespace pathlab
