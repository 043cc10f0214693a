#include "pathlab/options.hpp"

#include <cmath>
#include <stdexcept>

#include "pathlab/numerics.hpp"
#include "pathlab/partition.hpp"

namespace pathlab {

ContinuousAverageOption continuous_average_option(double horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("continuous_average_option: horizon > 0");
  ContinuousAverageOption opt;
  opt.horizon = horizon;
  opt.value_functional = running_average_functional(horizon);

  const double T = horizon;
  opt.bsv.name = "continuous-average-hedge";
  opt.bsv.phi = [T](double t, double, std::span<const double>) { return (T - t) / T; };
  opt.bsv.dphi_dx = [](double, double, std::span<const double>) { return 0.0; };
  opt.bsv.dphi_dt = [T](double, double, std::span<const double>) { return -1.0 / T; };
  opt.bsv.nds_floor = std::nullopt;
  return opt;
}

DiscreteAverageOption discrete_average_option(double horizon, int n_fixings) {
  if (!(horizon > 0.0) || n_fixings < 1) {
    throw std::invalid_argument("discrete_average_option: horizon > 0, n_fixings >= 1");
  }
  const std::vector<double> fixing_grid = uniform_grid(horizon, static_cast<std::size_t>(n_fixings));

  const double T = horizon;
  const int N = n_fixings;
  const double w = 1.0 / (N + 1);

  // grid-anchored average: (1/(N+1)) (sum of recorded fixings + ramp * x(t))
  CylindricalSpec spec;
  spec.grid = fixing_grid;
  spec.pieces.resize(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) {
    const double lo = fixing_grid[static_cast<std::size_t>(i - 1)];
    const double cell = fixing_grid[static_cast<std::size_t>(i)] - lo;
    auto& piece = spec.pieces[static_cast<std::size_t>(i - 1)];
    piece.f = [w, lo, cell](std::span<const double> anchors, double x, double t) {
      KahanSum s;
      for (double a : anchors) s.add(a);
      return w * (s.value() + (t - lo) / cell * x);
    };
    piece.df_dx = [w, lo, cell](std::span<const double>, double, double t) {
      return w * (t - lo) / cell;
    };
    piece.d2f_dx2 = [](std::span<const double>, double, double) { return 0.0; };
    piece.df_dt = [w, cell](std::span<const double>, double x, double) { return w * x / cell; };
  }
  NonAnticipativeFunctional raw = make_cylindrical_functional(spec);
  raw.name = "discrete-average";

  // martingale-value form: raw + N/((N+1)T) (T-t) x(t); the drift terms of
  // the raw functional are exactly offset, so the derivative hedge
  // replicates the terminal average
  const double c = static_cast<double>(N) / ((N + 1.0) * T);
  NonAnticipativeFunctional G;
  G.name = "discrete-average-replicating";
  G.eval = [raw, c, T](const PathSlice& s) {
    return raw.eval(s) + c * (T - s.time()) * s.endpoint();
  };
  G.vd = [raw, c, T](const PathSlice& s) { return raw.vd(s) + c * (T - s.time()); };
  G.vd2 = [](const PathSlice&) { return 0.0; };
  G.hd = [](const PathSlice&) { return 0.0; };
  G.regularity_tags = {"left-continuous", "boundedness-preserving"};

  // the same hedge as an explicit trading rule
  BSVStrategy bsv;
  bsv.name = "discrete-average-hedge";
  bsv.phi = [c, T, fixing_grid](double t, double, std::span<const double>) {
    // ramp slope of the active cell plus the tail weight
    std::size_t i = 1;
    while (i < fixing_grid.size() - 1 && t > fixing_grid[i]) ++i;
    const double lo = fixing_grid[i - 1];
    const double cell = fixing_grid[i] - lo;
    const double w = 1.0 / static_cast<double>(fixing_grid.size());  // = 1/(N+1)
    return w * (t - lo) / cell + c * (T - t);
  };
  bsv.dphi_dx = [](double, double, std::span<const double>) { return 0.0; };

  // simplified per-cell constants: position (N-i+1)/(N+1) on cell i
  CylindricalIntegrandSpec cyl;
  cyl.grid = fixing_grid;
  cyl.pieces.resize(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) {
    const double increment =
        j == 1 ? static_cast<double>(N) / (N + 1.0) : -1.0 / (N + 1.0);
    cyl.pieces[static_cast<std::size_t>(j - 1)].f = [increment](std::span<const double>) {
      return increment;
    };
  }

  return DiscreteAverageOption{std::move(raw),
                               std::move(G),
                               std::move(bsv),
                               make_cylindrical_integrand(std::move(cyl)),
                               fixing_grid,
                               horizon,
                               n_fixings};
}

AsianQuote geometric_asian_value_and_hedge(double t, double spot, double log_integral,
                                           double strike, double horizon, double vol) {
  if (!(spot > 0.0) || !(strike > 0.0) || !(vol > 0.0) || !(horizon > 0.0) || t < 0.0 ||
      t >= horizon) {
    throw std::invalid_argument("geometric_asian_value_and_hedge: bad arguments");
  }
  const double T = horizon;
  const double rem = T - t;
  const double m = (log_integral + rem * std::log(spot)) / T - vol * vol * rem * rem / (4.0 * T);
  const double v = vol * vol * rem * rem * rem / (3.0 * T * T);

  AsianQuote q;
  if (v <= 0.0) {
    const double mean = std::exp(m);
    q.value = std::max(mean - strike, 0.0);
    q.delta = (mean > strike) ? mean * rem / (T * spot) : 0.0;
    return q;
  }
  const double sv = std::sqrt(v);
  const double d2 = (m - std::log(strike)) / sv;
  const double d1 = d2 + sv;
  const double growth = std::exp(m + 0.5 * v);
  q.value = growth * normal_cdf(d1) - strike * normal_cdf(d2);
  q.delta = growth * normal_cdf(d1) * rem / (T * spot);
  return q;
}

GeometricAsianOption geometric_asian_option(double horizon, double strike, double vol) {
  GeometricAsianOption opt;
  opt.horizon = horizon;
  opt.strike = strike;
  opt.vol = vol;

  opt.bsv.name = "geometric-asian-hedge";
  opt.bsv.factors = {running_log_integral_factor()};
  opt.bsv.phi = [horizon, strike, vol](double t, double x, std::span<const double> ys) {
    return geometric_asian_value_and_hedge(t, x, ys[0], strike, horizon, vol).delta;
  };

  opt.value_functional.name = "geometric-asian-value";
  opt.value_functional.state_space = Interval::positive();
  opt.value_functional.eval = [horizon, strike, vol](const PathSlice& s) {
    const double g = s.transformed_integral([](double x) { return std::log(x); });
    if (s.time() >= horizon) {
      return std::max(std::exp(g / horizon) - strike, 0.0);
    }
    return geometric_asian_value_and_hedge(s.time(), s.endpoint(), g, strike, horizon, vol).value;
  };
  // endpoint sensitivity left to finite differences on purpose: the closed
  // form is the rule side of the comparison, not both sides
  return opt;
}

}  // namespace pathlab
