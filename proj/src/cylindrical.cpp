#include "pathlab/cylindrical.hpp"

#include <algorithm>
#include <cmath>

#include "pathlab/errors.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

namespace {

void validate_grid(const std::vector<double>& grid, std::size_t n_pieces) {
  if (grid.size() < 2 || grid.front() != 0.0) {
    throw InvalidSpec("cylindrical grid must start at 0 and have at least two points");
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      throw InvalidSpec("cylindrical grid must be strictly increasing");
    }
  }
  if (n_pieces + 1 != grid.size()) {
    throw InvalidSpec("cylindrical definition needs one piece per grid cell");
  }
}

// 1-based index of the piece active at t: t in (t_{i-1}, t_i], with t = 0
// handled by the first piece (continuity extension).
std::size_t piece_at(const std::vector<double>& grid, double t) {
  const auto it = std::lower_bound(grid.begin(), grid.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - grid.begin());
  return std::max<std::size_t>(1, idx);
}

std::vector<double> anchors_of(const PathSlice& slice, const std::vector<double>& grid,
                               std::size_t count) {
  std::vector<double> a(count);
  for (std::size_t q = 0; q < count; ++q) a[q] = slice.anchor_value(grid[q]);
  return a;
}

// Seam continuity: approaching a seam from the right with the endpoint glued
// to the newest anchor must reproduce the previous piece's value there.
void validate_seams(const CylindricalSpec& spec) {
  Rng rng(0xC31A5EEDull);
  const std::size_t n = spec.pieces.size();
  for (std::size_t i = 2; i <= n; ++i) {
    const double seam = spec.grid[i - 1];
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> args(i);
      for (auto& a : args) a = 0.25 + 1.5 * rng.uniform();
      const double endpoint = args.back();
      const double incoming =
          spec.pieces[i - 1].f(std::span<const double>(args.data(), i), endpoint, seam);
      const double outgoing =
          spec.pieces[i - 2].f(std::span<const double>(args.data(), i - 1), endpoint, seam);
      const double scale = std::max({1.0, std::abs(incoming), std::abs(outgoing)});
      if (std::abs(incoming - outgoing) > 1e-9 * scale) {
        throw InvalidSpec("cylindrical pieces disagree at a seam");
      }
    }
  }
}

}  // namespace

NonAnticipativeFunctional make_cylindrical_functional(const CylindricalSpec& spec) {
  validate_grid(spec.grid, spec.pieces.size());
  for (const auto& p : spec.pieces) {
    if (!p.f) throw InvalidSpec("cylindrical piece without an evaluation map");
  }
  validate_seams(spec);

  auto shared = std::make_shared<const CylindricalSpec>(spec);
  NonAnticipativeFunctional F;
  F.name = "cylindrical";
  F.eval = [shared](const PathSlice& s) {
    const std::size_t i = piece_at(shared->grid, s.time());
    const auto a = anchors_of(s, shared->grid, i);
    return shared->pieces[i - 1].f(a, s.endpoint(), s.time());
  };

  bool all_dx = true, all_dxx = true, all_dt = true;
  for (const auto& p : spec.pieces) {
    all_dx = all_dx && static_cast<bool>(p.df_dx);
    all_dxx = all_dxx && static_cast<bool>(p.d2f_dx2);
    all_dt = all_dt && static_cast<bool>(p.df_dt);
  }
  if (all_dx) {
    F.vd = [shared](const PathSlice& s) {
      const std::size_t i = piece_at(shared->grid, s.time());
      const auto a = anchors_of(s, shared->grid, i);
      return shared->pieces[i - 1].df_dx(a, s.endpoint(), s.time());
    };
  }
  if (all_dxx) {
    F.vd2 = [shared](const PathSlice& s) {
      const std::size_t i = piece_at(shared->grid, s.time());
      const auto a = anchors_of(s, shared->grid, i);
      return shared->pieces[i - 1].d2f_dx2(a, s.endpoint(), s.time());
    };
  }
  if (all_dt) {
    F.hd = [shared](const PathSlice& s) {
      const std::size_t i = piece_at(shared->grid, s.time());
      const auto a = anchors_of(s, shared->grid, i);
      return shared->pieces[i - 1].df_dt(a, s.endpoint(), s.time());
    };
  }
  F.regularity_tags = {"left-continuous"};
  return F;
}

// ---- rebalance-schedule integrands ---------------------------------------

CylindricalIntegrand::CylindricalIntegrand(CylindricalIntegrandSpec spec) : spec_(std::move(spec)) {
  validate_grid(spec_.grid, spec_.pieces.size());
  for (const auto& p : spec_.pieces) {
    if (!p.f) throw InvalidSpec("integrand piece without an evaluation map");
  }

  auto shared = std::make_shared<const CylindricalIntegrandSpec>(spec_);
  // cumulative position of every piece established at or before t
  auto position = [shared](const PathSlice& s) {
    const double t = s.time();
    double pos = 0.0;
    for (std::size_t j = 1; j <= shared->pieces.size() && shared->grid[j - 1] <= t; ++j) {
      const auto a = anchors_of(s, shared->grid, j);
      pos += shared->pieces[j - 1].f(a);
    }
    return pos;
  };

  primitive_.name = "rebalance-primitive";
  primitive_.eval = [shared](const PathSlice& s) {
    // pieces anchored exactly at the evaluation time are included; their
    // increment term vanishes on unperturbed paths
    const double t = s.time();
    const double xt = s.endpoint();
    double total = 0.0;
    for (std::size_t j = 1; j <= shared->pieces.size() && shared->grid[j - 1] <= t; ++j) {
      const auto a = anchors_of(s, shared->grid, j);
      total += shared->pieces[j - 1].f(a) * (xt - s.anchor_value(shared->grid[j - 1]));
    }
    return total;
  };
  primitive_.vd = position;
  primitive_.vd2 = [](const PathSlice&) { return 0.0; };
  primitive_.hd = [](const PathSlice&) { return 0.0; };
  primitive_.regularity_tags = {"left-continuous", "boundedness-preserving"};
}

double CylindricalIntegrand::node_value(const PathSlice& slice) const {
  return primitive_.vd(slice);
}

CylindricalIntegrand make_cylindrical_integrand(CylindricalIntegrandSpec spec) {
  return CylindricalIntegrand(std::move(spec));
}

}  // namespace pathlab
