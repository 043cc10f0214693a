#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace pathlab {

// Uniform grid 0 = t_0 < ... < t_n = T built so that refinements by a
// power-of-two factor reproduce coarse points bit-for-bit.
std::vector<double> uniform_grid(double horizon, std::size_t n_intervals);

// A refining sequence of partitions of [0, T]. Every level starts at 0 and
// ends at T, grids are strictly increasing, and mesh strictly decreases
// across levels. All refinement limits in this library are taken along the
// levels of one scheme.
class PartitionScheme {
 public:
  PartitionScheme(double horizon, std::vector<std::vector<double>> levels);

  double horizon() const { return horizon_; }
  std::size_t level_count() const { return levels_->size(); }
  const std::vector<double>& level(std::size_t i) const;
  double mesh(std::size_t i) const;
  std::size_t finest() const { return level_count() - 1; }

 private:
  double horizon_;
  std::shared_ptr<const std::vector<std::vector<double>>> levels_;
};

// Level i is the uniform grid with base_k * 2^i intervals on [0, T]; every
// coarse point reappears exactly in all finer grids.
PartitionScheme make_dyadic_scheme(double horizon, int n_levels, int base_k);

}  // namespace pathlab
