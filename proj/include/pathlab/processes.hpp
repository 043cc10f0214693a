#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathlab/f_sigma.hpp"
#include "pathlab/partition.hpp"
#include "pathlab/path.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

enum class ZKind { None, Fbm, Fou, Icp, Sicp };

// Everything a generator needs. Identical configs produce bit-identical
// paths; the driving noise and the mixing component use disjoint substreams
// derived from the master seed, so changing z_kind never changes the
// driving noise path.
struct GeneratorConfig {
  std::uint64_t seed = 1;
  PartitionScheme scheme = make_dyadic_scheme(1.0, 1, 256);
  std::size_t level = 0;

  double hurst = 0.75;    // fbm / fou
  double theta = 1.0;     // fou mean reversion
  double lambda = 5.0;    // jump intensity
  double alpha = 3.0;     // jump tail index
  double epsilon = 0.2;   // driving-noise scale in mixed models
  double z_scale = 1.0;   // mixing-component scale
  double drift = 0.0;     // mixed-model drift

  ZKind z_kind = ZKind::None;
  SigmaFunction sigma = SigmaFunction::linear(1.0);
  double s0 = 1.0;
  std::optional<Interval> driver_range;  // explicit price-map domain; default auto-sized
};

SampledPath sample_brownian(const GeneratorConfig& cfg);
SampledPath sample_fbm(const GeneratorConfig& cfg);
SampledPath sample_fou(const GeneratorConfig& cfg);
SampledPath sample_icp(const GeneratorConfig& cfg);
SampledPath sample_sicp(const GeneratorConfig& cfg);

// S(t) = f_sigma(eps W(t) + z_scale Z(t) + mu t): a price path whose squared
// increments are governed by the driving noise alone, since Z contributes
// none.
SampledPath sample_model_path(const GeneratorConfig& cfg);

// deterministic x(u) = u, for exact-arithmetic checks and the CLI
SampledPath sample_line(const GeneratorConfig& cfg);

SampledPath sample_by_kind(const GeneratorConfig& cfg, ZKind kind);

// i.i.d. sizes with P(U >= x) = x^{-alpha}, x >= 1 (inverse transform)
std::vector<double> pareto_sample(Rng& rng, double alpha, std::size_t n);

// Stationary-increment Gaussian noise for the given Hurst index on a
// uniform grid: circulant embedding, with a dense factorization fallback
// when the embedding produces materially negative eigenvalues.
std::vector<double> fgn_increments(Rng& rng, double hurst, std::size_t n, double dt);

namespace testing {
// direct covariance-factorization generator, for cross-validation only
SampledPath fbm_by_factorization(const GeneratorConfig& cfg);

// the exact jump times/sizes behind sample_icp / sample_sicp at this config
struct Jumps {
  std::vector<double> times;
  std::vector<double> sizes;
};
Jumps jumps_of(const GeneratorConfig& cfg);
}  // namespace testing

}  // namespace pathlab
