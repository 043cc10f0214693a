#include "pathlab/f_sigma.hpp"

#include <cmath>
#include <stdexcept>

#include "pathlab/errors.hpp"

namespace pathlab {

std::string SigmaFunction::describe() const {
  switch (kind) {
    case Kind::Linear: return "linear:" + std::to_string(param);
    case Kind::Constant: return "const:" + std::to_string(param);
    case Kind::Custom: return "custom";
  }
  return "?";
}

FSigmaTable::FSigmaTable(std::vector<double> xs, std::vector<double> fs, std::vector<double> dfs) {
  if (xs.size() < 2 || xs.size() != fs.size() || xs.size() != dfs.size()) {
    throw std::invalid_argument("FSigmaTable: inconsistent table sizes");
  }
  xs_ = std::make_shared<const std::vector<double>>(std::move(xs));
  fs_ = std::make_shared<const std::vector<double>>(std::move(fs));
  dfs_ = std::make_shared<const std::vector<double>>(std::move(dfs));
}

std::size_t FSigmaTable::cell_of(double x) const {
  const auto& xs = *xs_;
  if (x < xs.front() || x > xs.back()) {
    throw DomainViolation("FSigmaTable: evaluation outside the solved range", x);
  }
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t j = static_cast<std::size_t>(it - xs.begin());
  if (j == 0) return 0;
  if (j >= xs.size()) return xs.size() - 2;
  return j - 1;
}

double FSigmaTable::operator()(double x) const {
  const auto& xs = *xs_;
  const auto& fs = *fs_;
  const auto& ds = *dfs_;
  const std::size_t j = cell_of(x);
  const double hcell = xs[j + 1] - xs[j];
  const double s = (x - xs[j]) / hcell;
  // cubic Hermite: node values + node derivatives (which the ODE supplies)
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * fs[j] + h10 * hcell * ds[j] + h01 * fs[j + 1] + h11 * hcell * ds[j + 1];
}

double FSigmaTable::derivative(double x) const {
  const auto& xs = *xs_;
  const auto& ds = *dfs_;
  const std::size_t j = cell_of(x);
  const double s = (x - xs[j]) / (xs[j + 1] - xs[j]);
  return ds[j] + s * (ds[j + 1] - ds[j]);
}

FSigmaTable f_sigma_solve(const SigmaFunction& sigma, double s0, double x_lo, double x_hi,
                          double step, std::optional<Interval> state_space) {
  if (!(x_lo <= 0.0 && 0.0 <= x_hi) || !(x_hi > x_lo)) {
    throw std::invalid_argument("f_sigma_solve: range must contain 0");
  }
  if (!(step > 0.0)) throw std::invalid_argument("f_sigma_solve: step must be positive");

  const double blow_up = 1e12;
  auto ok = [&](double f) {
    if (!std::isfinite(f) || std::abs(f) > blow_up) return false;
    if (state_space && !state_space->contains(f)) return false;
    return true;
  };
  auto rk4 = [&](double f, double h) {
    const double k1 = sigma(f);
    const double k2 = sigma(f + 0.5 * h * k1);
    const double k3 = sigma(f + 0.5 * h * k2);
    const double k4 = sigma(f + h * k3);
    return f + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  // march both directions from x = 0, then assemble the ordered table
  auto march = [&](double limit, double dir) {
    std::vector<double> xs{0.0}, fs{s0};
    double x = 0.0, f = s0;
    while (dir * (limit - x) > 1e-15) {
      const double h = dir * std::min(step, dir * (limit - x));
      const double fn = rk4(f, h);
      if (!ok(fn)) {
        throw DomainViolation("f_sigma_solve: solution left the admissible range", x + h);
      }
      x += h;
      f = fn;
      xs.push_back(x);
      fs.push_back(f);
    }
    return std::pair{xs, fs};
  };

  auto [xs_up, fs_up] = march(x_hi, 1.0);
  auto [xs_dn, fs_dn] = march(x_lo, -1.0);

  std::vector<double> xs, fs;
  xs.reserve(xs_up.size() + xs_dn.size());
  fs.reserve(xs.capacity());
  for (std::size_t k = xs_dn.size(); k-- > 1;) {
    xs.push_back(xs_dn[k]);
    fs.push_back(fs_dn[k]);
  }
  xs.insert(xs.end(), xs_up.begin(), xs_up.end());
  fs.insert(fs.end(), fs_up.begin(), fs_up.end());

  std::vector<double> dfs(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) dfs[k] = sigma(fs[k]);
  return FSigmaTable(std::move(xs), std::move(fs), std::move(dfs));
}

// ---- price maps -----------------------------------------------------------

FSigmaMap FSigmaMap::exponential(double s0, double alpha) {
  if (!(s0 > 0.0)) throw std::invalid_argument("exponential price map needs s0 > 0");
  FSigmaMap m;
  m.kind_ = Kind::Exponential;
  m.s0_ = s0;
  m.alpha_ = alpha;
  return m;
}

FSigmaMap FSigmaMap::shifted_linear(double s0, double c) {
  FSigmaMap m;
  m.kind_ = Kind::ShiftedLinear;
  m.s0_ = s0;
  m.alpha_ = c;
  return m;
}

FSigmaMap FSigmaMap::from_table(FSigmaTable table) {
  FSigmaMap m;
  m.kind_ = Kind::Table;
  m.s0_ = table(0.0);
  m.table_ = std::move(table);
  return m;
}

double FSigmaMap::operator()(double x) const {
  if (domain_ && !domain_->contains(x)) {
    throw DomainViolation("price map: driver left the declared domain", x);
  }
  switch (kind_) {
    case Kind::Exponential: return s0_ * std::exp(alpha_ * x);
    case Kind::ShiftedLinear: return s0_ + alpha_ * x;
    case Kind::Table: return (*table_)(x);
  }
  return 0.0;
}

std::optional<Interval> FSigmaMap::range_state_space() const {
  if (kind_ == Kind::Exponential) return Interval::positive();
  return std::nullopt;
}

FSigmaMap make_price_map(const SigmaFunction& sigma, double s0, double x_lo, double x_hi) {
  switch (sigma.kind) {
    case SigmaFunction::Kind::Linear: return FSigmaMap::exponential(s0, sigma.param);
    case SigmaFunction::Kind::Constant: return FSigmaMap::shifted_linear(s0, sigma.param);
    case SigmaFunction::Kind::Custom:
      return FSigmaMap::from_table(f_sigma_solve(sigma, s0, x_lo, x_hi));
  }
  throw std::invalid_argument("make_price_map: unknown sigma kind");
}

}  // namespace pathlab
