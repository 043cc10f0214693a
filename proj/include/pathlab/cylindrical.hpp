#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pathlab/functional.hpp"

namespace pathlab {

// Piece of a grid-anchored functional: f_i(anchors, x, t) where anchors are
// the path values at the grid times before the active piece and x is the
// current endpoint. Partial derivatives are optional.
struct CylFunctionalPiece {
  std::function<double(std::span<const double>, double, double)> f;
  std::function<double(std::span<const double>, double, double)> df_dx;
  std::function<double(std::span<const double>, double, double)> d2f_dx2;
  std::function<double(std::span<const double>, double, double)> df_dt;
};

struct CylindricalSpec {
  std::vector<double> grid;  // 0 = t_0 < ... < t_n = T
  std::vector<CylFunctionalPiece> pieces;
};

// F_t = f_i(x(t_0),...,x(t_{i-1}), x(t), t) on (t_{i-1}, t_i], with the first
// piece extended to t = 0 by continuity. Seam continuity of consecutive
// pieces is validated numerically on sampled arguments; a mismatch throws
// InvalidSpec. Derivative maps are wired when every piece supplies the
// corresponding partials.
NonAnticipativeFunctional make_cylindrical_functional(const CylindricalSpec& spec);

// Piece of a rebalance-schedule integrand: f_j of the anchor values
// x(t_0),...,x(t_{j-1}) only.
struct CylIntegrandPiece {
  std::function<double(std::span<const double>)> f;
};

struct CylindricalIntegrandSpec {
  std::vector<double> grid;
  std::vector<CylIntegrandPiece> pieces;
};

// A trading integrand that rebalances at the grid times: the position
// established at t_{j-1} is f_j(anchor values) and is held on the whole cell
// up to t_j. node_value at time t returns the position held on the cell
// containing t (a rebalance instant returns the just-established position),
// which is the sampling that makes the elementary integral telescope
// exactly whenever the integration grid refines the rebalance grid.
class CylindricalIntegrand {
 public:
  explicit CylindricalIntegrand(CylindricalIntegrandSpec spec);

  const CylindricalIntegrandSpec& spec() const { return spec_; }

  // position on the cell [t_{j-1}, t_j) containing the slice time
  double node_value(const PathSlice& slice) const;

  // Primitive functional F_t = sum_j [t_{j-1} <= t] f_j(anchors) (x(t) - x(t_{j-1})),
  // with vd = cumulative position, vd2 = 0, hd = 0.
  const NonAnticipativeFunctional& primitive() const { return primitive_; }

 private:
  CylindricalIntegrandSpec spec_;
  NonAnticipativeFunctional primitive_;
};

CylindricalIntegrand make_cylindrical_integrand(CylindricalIntegrandSpec spec);

}  // namespace pathlab
