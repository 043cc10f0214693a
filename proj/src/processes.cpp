#include "pathlab/processes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "pathlab/errors.hpp"
#include "pathlab/numerics.hpp"

namespace pathlab {

namespace {

// in-place radix-2 forward transform, sum_k a_k e^{-2 pi i jk/m}
void fft_pow2(std::vector<std::complex<double>>& a) {
  const std::size_t m = a.size();
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < m; i += len) {
      std::complex<double> w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// autocovariance of stationary-increment noise at lags 0..n
std::vector<double> fgn_autocov(double hurst, std::size_t n, double dt) {
  const double twoH = 2.0 * hurst;
  const double scale = 0.5 * std::pow(dt, twoH);
  std::vector<double> gamma(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    gamma[k] = scale * (std::pow(kk + 1.0, twoH) - 2.0 * std::pow(kk, twoH) +
                        std::pow(std::abs(kk - 1.0), twoH));
  }
  return gamma;
}

std::vector<double> fgn_by_cholesky(Rng& rng, double hurst, std::size_t n, double dt) {
  constexpr std::size_t kDenseLimit = 2048;
  if (n > kDenseLimit) {
    throw GenerationError("noise synthesis failed and the sequence is too long for the dense fallback");
  }
  const auto gamma = fgn_autocov(hurst, n, dt);
  // Toeplitz covariance, in-place lower Cholesky
  std::vector<double> L(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = gamma[i - j];
      for (std::size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      if (i == j) {
        if (s <= 0.0) throw GenerationError("noise covariance is not positive definite");
        L[i * n + i] = std::sqrt(s);
      } else {
        L[i * n + j] = s / L[j * n + j];
      }
    }
  }
  std::vector<double> g(n), out(n);
  for (auto& z : g) z = rng.gaussian();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += L[i * n + j] * g[j];
    out[i] = s;
  }
  return out;
}

std::vector<double> cumulative_path_values(const std::vector<double>& increments) {
  std::vector<double> v(increments.size() + 1, 0.0);
  KahanSum acc;
  for (std::size_t k = 0; k < increments.size(); ++k) {
    acc.add(increments[k]);
    v[k + 1] = acc.value();
  }
  return v;
}

double grid_dt(const std::vector<double>& grid) {
  return grid.back() / static_cast<double>(grid.size() - 1);
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

struct JumpSet {
  std::vector<double> times;
  std::vector<double> sizes;
};

// Poisson jump times via exponential interarrivals, heavy-tailed sizes drawn
// jump by jump from the same stream.
JumpSet draw_jumps(Rng& rng, double lambda, double alpha, double horizon) {
  JumpSet js;
  double tau = 0.0;
  while (true) {
    tau += -std::log(rng.uniform()) / lambda;
    if (tau > horizon) break;
    js.times.push_back(tau);
    js.sizes.push_back(std::pow(rng.uniform(), -1.0 / alpha));
  }
  return js;
}

// Z(t_j) = sum_{tau_k <= t_j} U_k (t_j - tau_k), exact between jumps
std::vector<double> integrated_jump_values(const JumpSet& js, const std::vector<double>& grid) {
  std::vector<double> z(grid.size(), 0.0);
  KahanSum weight, moment;
  std::size_t k = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    while (k < js.times.size() && js.times[k] <= grid[j]) {
      weight.add(js.sizes[k]);
      moment.add(js.sizes[k] * js.times[k]);
      ++k;
    }
    z[j] = grid[j] * weight.value() - moment.value();
  }
  return z;
}

}  // namespace

std::vector<double> pareto_sample(Rng& rng, double alpha, std::size_t n) {
  check_positive(alpha, "tail index");
  std::vector<double> out(n);
  for (auto& x : out) x = std::pow(rng.uniform(), -1.0 / alpha);
  return out;
}

std::vector<double> fgn_increments(Rng& rng, double hurst, std::size_t n, double dt) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::invalid_argument("hurst index must lie in (0, 1)");
  }
  if (n == 0) return {};
  const std::size_t m = next_pow2(2 * n);
  const auto gamma = fgn_autocov(hurst, m / 2, dt);

  std::vector<std::complex<double>> c(m);
  for (std::size_t j = 0; j <= m / 2; ++j) c[j] = gamma[j];
  for (std::size_t j = m / 2 + 1; j < m; ++j) c[j] = gamma[m - j];
  fft_pow2(c);

  double lam_min = 0.0, lam_max = 0.0;
  for (const auto& l : c) {
    lam_min = std::min(lam_min, l.real());
    lam_max = std::max(lam_max, l.real());
  }
  if (lam_min < -1e-9 * lam_max) {
    return fgn_by_cholesky(rng, hurst, n, dt);  // embedding failed; go dense
  }

  const double md = static_cast<double>(m);
  std::vector<std::complex<double>> a(m);
  a[0] = std::sqrt(std::max(0.0, c[0].real()) / md) * rng.gaussian();
  for (std::size_t k = 1; k < m / 2; ++k) {
    const double r = std::sqrt(std::max(0.0, c[k].real()) / (2.0 * md));
    const double u = rng.gaussian();
    const double v = rng.gaussian();
    a[k] = std::complex<double>(r * u, r * v);
    a[m - k] = std::conj(a[k]);
  }
  a[m / 2] = std::sqrt(std::max(0.0, c[m / 2].real()) / md) * rng.gaussian();
  fft_pow2(a);

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k].real();
  return out;
}

SampledPath sample_brownian(const GeneratorConfig& cfg) {
  const auto& grid = cfg.scheme.level(cfg.level);
  const double sdt = std::sqrt(grid_dt(grid));
  Rng rng(derive_stream(cfg.seed, "w"));
  std::vector<double> inc(grid.size() - 1);
  for (auto& d : inc) d = sdt * rng.gaussian();
  return SampledPath(grid, cumulative_path_values(inc));
}

SampledPath sample_fbm(const GeneratorConfig& cfg) {
  const auto& grid = cfg.scheme.level(cfg.level);
  Rng rng(derive_stream(cfg.seed, "z"));
  auto inc = fgn_increments(rng, cfg.hurst, grid.size() - 1, grid_dt(grid));
  return SampledPath(grid, cumulative_path_values(inc));
}

SampledPath sample_fou(const GeneratorConfig& cfg) {
  check_positive(cfg.theta, "mean reversion");
  const auto& grid = cfg.scheme.level(cfg.level);
  const double dt = grid_dt(grid);
  Rng rng(derive_stream(cfg.seed, "z"));  // same noise stream as the plain fractional path
  auto inc = fgn_increments(rng, cfg.hurst, grid.size() - 1, dt);
  // Euler on the reverting form, accumulated like the plain fractional path
  // so the theta -> 0 limit reproduces it exactly
  std::vector<double> v(grid.size(), 0.0);
  KahanSum acc;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    acc.add(inc[k] - cfg.theta * v[k] * dt);
    v[k + 1] = acc.value();
  }
  return SampledPath(grid, std::move(v));
}

SampledPath sample_icp(const GeneratorConfig& cfg) {
  check_positive(cfg.lambda, "jump intensity");
  check_positive(cfg.alpha, "tail index");
  const auto& grid = cfg.scheme.level(cfg.level);
  Rng rng(derive_stream(cfg.seed, "z"));
  const auto js = draw_jumps(rng, cfg.lambda, cfg.alpha, grid.back());
  return SampledPath(grid, integrated_jump_values(js, grid));
}

SampledPath sample_sicp(const GeneratorConfig& cfg) {
  check_positive(cfg.lambda, "jump intensity");
  if (!(cfg.alpha > 2.0)) {
    throw std::invalid_argument(
        "scaled integrated jump paths need tail index > 2 (finite jump variance)");
  }
  const auto& grid = cfg.scheme.level(cfg.level);
  Rng rng(derive_stream(cfg.seed, "z"));
  const auto js = draw_jumps(rng, cfg.lambda, cfg.alpha, grid.back());
  auto z = integrated_jump_values(js, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) z[j] *= std::exp(-grid[j]);
  return SampledPath(grid, std::move(z));
}

SampledPath sample_line(const GeneratorConfig& cfg) {
  const auto& grid = cfg.scheme.level(cfg.level);
  return SampledPath(grid, grid);
}

SampledPath sample_by_kind(const GeneratorConfig& cfg, ZKind kind) {
  switch (kind) {
    case ZKind::None: break;
    case ZKind::Fbm: return sample_fbm(cfg);
    case ZKind::Fou: return sample_fou(cfg);
    case ZKind::Icp: return sample_icp(cfg);
    case ZKind::Sicp: return sample_sicp(cfg);
  }
  throw std::invalid_argument("sample_by_kind: no mixing component requested");
}

SampledPath sample_model_path(const GeneratorConfig& cfg) {
  check_positive(cfg.epsilon, "driving-noise scale");
  const auto& grid = cfg.scheme.level(cfg.level);
  const auto w = sample_brownian(cfg);

  std::vector<double> driver(grid.size());
  if (cfg.z_kind == ZKind::None) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      driver[j] = cfg.epsilon * w.values()[j] + cfg.drift * grid[j];
    }
  } else {
    const auto z = sample_by_kind(cfg, cfg.z_kind);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      driver[j] = cfg.epsilon * w.values()[j] + cfg.z_scale * z.values()[j] + cfg.drift * grid[j];
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(driver.begin(), driver.end());
  const double margin = 0.5 + 0.1 * (*hi_it - *lo_it);
  FSigmaMap map = make_price_map(cfg.sigma, cfg.s0, *lo_it - margin, *hi_it + margin);
  if (cfg.driver_range) map.set_domain(*cfg.driver_range);

  std::vector<double> s(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) s[j] = map(driver[j]);
  return SampledPath(grid, std::move(s), Interp::ContinuousLinear, map.range_state_space());
}

namespace testing {

SampledPath fbm_by_factorization(const GeneratorConfig& cfg) {
  const auto& grid = cfg.scheme.level(cfg.level);
  Rng rng(derive_stream(cfg.seed, "z"));
  auto inc = fgn_by_cholesky(rng, cfg.hurst, grid.size() - 1, grid_dt(grid));
  return SampledPath(grid, cumulative_path_values(inc));
}

Jumps jumps_of(const GeneratorConfig& cfg) {
  Rng rng(derive_stream(cfg.seed, "z"));
  const auto js = draw_jumps(rng, cfg.lambda, cfg.alpha, cfg.scheme.horizon());
  return Jumps{js.times, js.sizes};
}

}  // namespace testing

}  // namespace pathlab
