#include "pathlab/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathlab/errors.hpp"

namespace pathlab {

SampledPath::SampledPath(std::vector<double> grid, std::vector<double> values, Interp interp,
                         std::optional<Interval> state_space)
    : interp_(interp), state_space_(state_space) {
  if (grid.empty() || grid.size() != values.size()) {
    throw std::invalid_argument("SampledPath: grid and values must have equal length >= 1");
  }
  if (grid.front() != 0.0) {
    throw std::invalid_argument("SampledPath: grid must start at 0");
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      throw std::invalid_argument("SampledPath: grid must be strictly increasing");
    }
  }
  auto d = std::make_shared<Data>();
  d->grid = std::move(grid);
  d->values = std::move(values);
  data_ = std::move(d);
}

double SampledPath::operator()(double u) const {
  const auto& g = data_->grid;
  const auto& v = data_->values;
  if (u < 0.0 || u > g.back()) {
    throw std::out_of_range("SampledPath: evaluation outside [0, t_end]");
  }
  if (g.size() == 1) return v[0];
  if (u >= g.back()) return v.back();
  // first index with g[idx] > u; u lives in [g[idx-1], g[idx])
  const std::size_t idx =
      static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), u) - g.begin());
  if (interp_ == Interp::PiecewiseConstantForward) {
    return v[idx];
  }
  const std::size_t j = idx - 1;
  if (u == g[j]) return v[j];
  const double w = (u - g[j]) / (g[idx] - g[j]);
  return v[j] + w * (v[idx] - v[j]);
}

double SampledPath::left_limit(double u) const {
  if (interp_ == Interp::ContinuousLinear) return (*this)(u);
  const auto& g = data_->grid;
  const auto& v = data_->values;
  if (u < 0.0 || u > g.back()) {
    throw std::out_of_range("SampledPath: evaluation outside [0, t_end]");
  }
  if (g.size() == 1 || u == 0.0) return (*this)(u);
  // u in (g[idx-1], g[idx]]; the cell to the left of u carries v[idx]
  const std::size_t idx =
      static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), u) - g.begin());
  return v[idx];
}

std::optional<std::size_t> SampledPath::grid_index_of(double u) const {
  const auto& g = data_->grid;
  const auto it = std::lower_bound(g.begin(), g.end(), u);
  if (it != g.end() && *it == u) return static_cast<std::size_t>(it - g.begin());
  return std::nullopt;
}

double SampledPath::integral_to(double t) const {
  const auto& g = data_->grid;
  const auto& v = data_->values;
  if (t < 0.0 || t > g.back()) {
    throw std::out_of_range("SampledPath: integral bound outside [0, t_end]");
  }
  KahanSum acc;
  for (std::size_t j = 0; j + 1 < g.size() && g[j] < t; ++j) {
    if (g[j + 1] <= t) {
      if (interp_ == Interp::PiecewiseConstantForward) {
        acc.add(v[j + 1] * (g[j + 1] - g[j]));
      } else {
        acc.add(0.5 * (v[j] + v[j + 1]) * (g[j + 1] - g[j]));
      }
    } else {
      if (interp_ == Interp::PiecewiseConstantForward) {
        acc.add(v[j + 1] * (t - g[j]));
      } else {
        acc.add(0.5 * (v[j] + (*this)(t)) * (t - g[j]));
      }
      break;
    }
  }
  return acc.value();
}

// ---- PathSlice ----------------------------------------------------------

PathSlice::PathSlice(SampledPath base, double t, std::optional<double> endpoint_override)
    : base_(std::move(base)), t_(t), override_(endpoint_override) {
  if (t_ < 0.0 || t_ > base_.t_end()) {
    throw std::out_of_range("PathSlice: time outside [0, t_end]");
  }
}

double PathSlice::operator()(double u) const {
  if (u < 0.0 || u > t_) {
    throw std::out_of_range("PathSlice: evaluation outside [0, t]");
  }
  if (u == t_ && override_) return *override_;
  return base_(u);
}

double PathSlice::anchor_value(double u) const {
  if (u < 0.0 || u > t_) {
    throw std::out_of_range("PathSlice: anchor outside [0, t]");
  }
  if (auto idx = base_.grid_index_of(u)) return base_.values()[*idx];
  return base_(u);
}

double PathSlice::integral() const {
  return transformed_integral([](double x) { return x; });
}

double PathSlice::transformed_integral(const std::function<double(double)>& f) const {
  const auto g = base_.grid();
  const auto v = base_.values();
  KahanSum acc;
  for (std::size_t j = 0; j + 1 < g.size() && g[j] < t_; ++j) {
    if (g[j + 1] <= t_) {
      acc.add(0.5 * (f(v[j]) + f(v[j + 1])) * (g[j + 1] - g[j]));
    } else {
      // partial cell: bridge the samples linearly up to t
      const double w = (t_ - g[j]) / (g[j + 1] - g[j]);
      const double sample_at_t = v[j] + w * (v[j + 1] - v[j]);
      acc.add(0.5 * (f(v[j]) + f(sample_at_t)) * (t_ - g[j]));
      break;
    }
  }
  return acc.value();
}

// ---- surgery ------------------------------------------------------------

PathSlice restrict_to(const SampledPath& path, double t) {
  if (t < 0.0 || t > path.t_end()) {
    throw std::out_of_range("restrict_to: time outside [0, t_end]");
  }
  return PathSlice(path, t);
}

PathSlice restrict_to(const PathSlice& slice, double t) {
  if (t < 0.0 || t > slice.time()) {
    throw std::out_of_range("restrict_to: time outside [0, slice time]");
  }
  if (t == slice.time()) return slice;
  return PathSlice(slice.base(), t);
}

PathSlice horizontal_extend(const PathSlice& slice, double h, double horizon) {
  if (h < 0.0) throw std::invalid_argument("horizontal_extend: h must be nonnegative");
  const double t = slice.time();
  if (t + h > horizon) throw std::out_of_range("horizontal_extend: t + h exceeds the horizon");
  if (h == 0.0 || t + h == t) return slice;

  // Materialize [0, t] followed by the frozen endpoint on (t, t+h]. A jump
  // at t (endpoint override) is representable exactly for step paths; for
  // linear paths it becomes a ramp on the final sub-cell.
  const auto g = slice.base().grid();
  const auto v = slice.base().values();
  const bool step = slice.base().interp() == Interp::PiecewiseConstantForward;
  std::vector<double> grid, values;
  grid.reserve(g.size() + 2);
  values.reserve(g.size() + 2);
  for (std::size_t j = 0; j < g.size() && g[j] < t; ++j) {
    grid.push_back(g[j]);
    values.push_back(v[j]);
  }
  if (t > 0.0) {
    grid.push_back(t);
    // step paths keep the carried value on the preceding cell; the frozen
    // region (t, t+h] reads from the entry at t+h
    values.push_back(step ? slice.base().left_limit(t) : slice.endpoint());
  } else {
    grid.push_back(0.0);
    values.push_back(slice.endpoint());
  }
  grid.push_back(t + h);
  values.push_back(slice.endpoint());

  SampledPath extended(std::move(grid), std::move(values), slice.base().interp(),
                       slice.base().state_space());
  return PathSlice(std::move(extended), t + h);
}

PathSlice vertical_perturb(const PathSlice& slice, double h) {
  const double bumped = slice.endpoint() + h;
  const auto& space = slice.base().state_space();
  if (space && !space->contains(bumped)) {
    throw DomainViolation("vertical_perturb: endpoint left the declared state space", bumped);
  }
  return PathSlice(slice.base(), slice.time(), bumped);
}

PathSlice pre_limit(const PathSlice& slice) {
  return PathSlice(slice.base(), slice.time(), slice.left_limit_end());
}

namespace {

// evaluation of a slice horizontally extended (by freezing) to tmax
double eval_extended(const PathSlice& s, double u) {
  return u <= s.time() ? s(u) : s.endpoint();
}

double left_limit_extended(const PathSlice& s, double u) {
  if (u <= 0.0) return eval_extended(s, 0.0);
  if (u <= s.time()) return s.base().left_limit(u);
  return s.endpoint();
}

}  // namespace

double d_infinity(const PathSlice& a, const PathSlice& b) {
  const PathSlice& shorter = a.time() <= b.time() ? a : b;
  const PathSlice& longer = a.time() <= b.time() ? b : a;
  const double h = longer.time() - shorter.time();

  std::vector<double> candidates;
  auto collect = [&](const PathSlice& s) {
    for (double g : s.base().grid()) {
      if (g <= s.time()) candidates.push_back(g);
    }
    candidates.push_back(s.time());
  };
  collect(shorter);
  collect(longer);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  double sup = 0.0;
  for (double u : candidates) {
    sup = std::max(sup, std::abs(eval_extended(shorter, u) - eval_extended(longer, u)));
    sup = std::max(sup, std::abs(left_limit_extended(shorter, u) - left_limit_extended(longer, u)));
  }
  return sup + h;
}

}  // namespace pathlab
