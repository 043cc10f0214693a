#include "pathlab/partition.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pathlab {

std::vector<double> uniform_grid(double horizon, std::size_t n_intervals) {
  if (!(horizon > 0.0) || n_intervals == 0) {
    throw std::invalid_argument("uniform_grid: need horizon > 0 and at least one interval");
  }
  std::vector<double> g(n_intervals + 1);
  const double n = static_cast<double>(n_intervals);
  for (std::size_t j = 0; j <= n_intervals; ++j) {
    g[j] = (horizon * static_cast<double>(j)) / n;
  }
  g.front() = 0.0;
  g.back() = horizon;  // pin the endpoint exactly
  return g;
}

PartitionScheme::PartitionScheme(double horizon, std::vector<std::vector<double>> levels)
    : horizon_(horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("PartitionScheme: horizon must be positive");
  if (levels.empty()) throw std::invalid_argument("PartitionScheme: need at least one level");
  double prev_mesh = std::numeric_limits<double>::infinity();
  for (const auto& grid : levels) {
    if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != horizon) {
      throw std::invalid_argument("PartitionScheme: every level must run from 0 to the horizon");
    }
    double mesh = 0.0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
      const double d = grid[j] - grid[j - 1];
      if (!(d > 0.0)) {
        throw std::invalid_argument("PartitionScheme: grids must be strictly increasing");
      }
      mesh = std::max(mesh, d);
    }
    if (!(mesh < prev_mesh)) {
      throw std::invalid_argument("PartitionScheme: mesh must strictly decrease across levels");
    }
    prev_mesh = mesh;
  }
  levels_ = std::make_shared<const std::vector<std::vector<double>>>(std::move(levels));
}

const std::vector<double>& PartitionScheme::level(std::size_t i) const {
  if (i >= levels_->size()) throw std::invalid_argument("PartitionScheme: level out of range");
  return (*levels_)[i];
}

double PartitionScheme::mesh(std::size_t i) const {
  const auto& grid = level(i);
  double m = 0.0;
  for (std::size_t j = 1; j < grid.size(); ++j) m = std::max(m, grid[j] - grid[j - 1]);
  return m;
}

PartitionScheme make_dyadic_scheme(double horizon, int n_levels, int base_k) {
  if (!(horizon > 0.0)) throw std::invalid_argument("make_dyadic_scheme: horizon must be positive");
  if (n_levels < 1 || base_k < 1) {
    throw std::invalid_argument("make_dyadic_scheme: level and interval counts must be positive");
  }
  std::vector<std::vector<double>> levels;
  levels.reserve(static_cast<std::size_t>(n_levels));
  std::size_t k = static_cast<std::size_t>(base_k);
  for (int i = 0; i < n_levels; ++i, k *= 2) {
    levels.push_back(uniform_grid(horizon, k));
  }
  return PartitionScheme(horizon, std::move(levels));
}

}  // namespace pathlab
