#include "pathlab/bsv.hpp"

#include <cmath>

#include "pathlab/errors.hpp"
#include "pathlab/functional.hpp"
#include "pathlab/numerics.hpp"

namespace pathlab {

double BSVStrategy::position(const PathSlice& slice) const {
  std::vector<double> ys(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) ys[j] = factors[j].eval(slice);
  return phi(slice.time(), slice.endpoint(), ys);
}

namespace {

struct Partials {
  // u(t, x, y) = int_{s0}^x phi(t, xi, y) dxi and its t / y_j sensitivities;
  // analytic partials of phi integrate directly, otherwise u is bumped.
  const BSVStrategy& phi;
  double s0;

  double u(double t, double x, std::span<const double> y) const {
    return integrate_adaptive([&](double xi) { return phi.phi(t, xi, y); }, s0, x);
  }
  double du_dt(double t, double x, std::span<const double> y) const {
    if (phi.dphi_dt) {
      return integrate_adaptive([&](double xi) { return phi.dphi_dt(t, xi, y); }, s0, x);
    }
    const double h = fd::bump_first(t);
    return (u(t + h, x, y) - u(t - h, x, y)) / (2.0 * h);
  }
  double du_dy(std::size_t j, double t, double x, std::span<const double> y) const {
    if (j < phi.dphi_dy.size() && phi.dphi_dy[j]) {
      return integrate_adaptive([&](double xi) { return phi.dphi_dy[j](t, xi, y); }, s0, x);
    }
    std::vector<double> bumped(y.begin(), y.end());
    const double h = fd::bump_first(y[j]);
    bumped[j] = y[j] + h;
    const double up = u(t, x, bumped);
    bumped[j] = y[j] - h;
    const double dn = u(t, x, bumped);
    return (up - dn) / (2.0 * h);
  }
  double dphi_dx(double t, double x, std::span<const double> y) const {
    if (phi.dphi_dx) return phi.dphi_dx(t, x, y);
    const double h = fd::bump_first(x);
    return (phi.phi(t, x + h, y) - phi.phi(t, x - h, y)) / (2.0 * h);
  }
};

}  // namespace

double wealth_functional(double t, const PathSlice& eta, const BSVStrategy& strategy,
                         const SigmaFunction& sigma) {
  if (t > eta.time()) {
    throw std::out_of_range("wealth_functional: t beyond the observed slice");
  }
  const auto& grid = eta.base().grid();
  const double s0 = eta(0.0);
  Partials P{strategy, s0};

  // sample times: grid points up to t, plus t itself
  std::vector<double> times;
  for (double g : grid) {
    if (g < t) times.push_back(g);
  }
  times.push_back(t);

  const std::size_t n = times.size();
  const std::size_t nf = strategy.factors.size();
  std::vector<double> xs(n);
  std::vector<std::vector<double>> ys(n, std::vector<double>(nf));
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = eta(times[k]);
    PathSlice sub = restrict_to(eta, times[k]);
    for (std::size_t j = 0; j < nf; ++j) ys[k][j] = strategy.factors[j].eval(sub);
  }

  const double head = P.u(t, xs[n - 1], ys[n - 1]);

  // trapezoid Stieltjes sums against the factor paths, trapezoid in time for
  // the drift and volatility corrections
  KahanSum factor_term, time_term, vol_term;
  std::vector<double> w_prev(nf), w_cur(nf);
  double dt_prev = 0.0, vol_prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < nf; ++j) w_cur[j] = P.du_dy(j, times[k], xs[k], ys[k]);
    const double dt_cur = P.du_dt(times[k], xs[k], ys[k]);
    const double s = sigma(xs[k]);
    const double vol_cur = P.dphi_dx(times[k], xs[k], ys[k]) * s * s;
    if (k > 0) {
      const double dr = times[k] - times[k - 1];
      for (std::size_t j = 0; j < nf; ++j) {
        factor_term.add(0.5 * (w_prev[j] + w_cur[j]) * (ys[k][j] - ys[k - 1][j]));
      }
      time_term.add(0.5 * (dt_prev + dt_cur) * dr);
      vol_term.add(0.5 * (vol_prev + vol_cur) * dr);
    }
    w_prev = w_cur;
    dt_prev = dt_cur;
    vol_prev = vol_cur;
  }

  return head - factor_term.value() - time_term.value() - 0.5 * vol_term.value();
}

HindsightFactor running_integral_factor() {
  HindsightFactor g;
  g.name = "running-integral";
  g.eval = [](const PathSlice& s) { return s.integral(); };
  g.variation_tag = "bounded variation on bounded paths; Lipschitz in sup norm with K = t";
  return g;
}

HindsightFactor running_log_integral_factor() {
  HindsightFactor g;
  g.name = "running-log-integral";
  g.eval = [](const PathSlice& s) {
    return s.transformed_integral([](double x) { return std::log(x); });
  };
  g.variation_tag = "bounded variation for paths bounded away from 0";
  return g;
}

HindsightFactor running_maximum_factor() {
  HindsightFactor g;
  g.name = "running-maximum";
  g.eval = [](const PathSlice& s) {
    const auto& grid = s.base().grid();
    double m = s(0.0);
    for (double u : grid) {
      if (u > s.time()) break;
      m = std::max(m, s(u));
    }
    return std::max(m, s.endpoint());
  };
  g.variation_tag = "nondecreasing, hence bounded variation; K = 1";
  return g;
}

}  // namespace pathlab
