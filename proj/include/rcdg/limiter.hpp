#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rcdg/basis.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/quadrature.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

/// Basis values at a fixed set of reference points, [point][mode].
struct PointTable {
  int modes = 0;
  int points = 0;
  std::vector<double> phi;

  const double* row(int pt) const { return phi.data() + static_cast<std::ptrdiff_t>(pt) * modes; }
};

/// Reference positions of the limiter control set in 1D: Gauss-Lobatto and
/// Gauss nodes of both half cells.
inline std::vector<double> control_points_1d(const QuadratureSet& quad) {
  std::vector<double> xs;
  for (int h = 0; h < 2; ++h) {
    for (int a = 0; a < quad.l(); ++a) xs.push_back(quad.lobatto_xi(h, a));
    for (int a = 0; a < quad.q(); ++a) xs.push_back(quad.gauss_xi(h, a));
  }
  return xs;
}

inline PointTable control_table_1d(const Basis1d& basis, const QuadratureSet& quad) {
  PointTable t;
  t.modes = basis.size();
  for (double xi : control_points_1d(quad)) {
    for (int m = 0; m < t.modes; ++m) t.phi.push_back(Basis1d::value(m, xi));
    ++t.points;
  }
  return t;
}

/// 2D control set (lobatto_x x gauss_y) U (gauss_x x lobatto_y) U (gauss_x x gauss_y),
/// each factor taken over both half cells.
inline PointTable control_table_2d(const Basis2d& basis, const QuadratureSet& quad) {
  std::vector<double> gl;
  std::vector<double> g;
  for (int h = 0; h < 2; ++h) {
    for (int a = 0; a < quad.l(); ++a) gl.push_back(quad.lobatto_xi(h, a));
    for (int a = 0; a < quad.q(); ++a) g.push_back(quad.gauss_xi(h, a));
  }
  PointTable t;
  t.modes = basis.size();
  auto add = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    for (double y : ys) {
      for (double x : xs) {
        for (int m = 0; m < t.modes; ++m) t.phi.push_back(Basis2d::value(m, x, y));
        ++t.points;
      }
    }
  };
  add(gl, g);
  add(g, gl);
  add(g, g);
  return t;
}

struct PcpOutcome {
  double theta_density = 1.0;
  double theta_energy = 1.0;
  bool modified() const { return theta_density < 1.0 || theta_energy < 1.0; }
};

namespace detail {

template <int Dim>
Conserved<Dim> control_value(const double* coeffs, const double* phi, int modes) {
  constexpr int nc = Dim + 2;
  Conserved<Dim> u;
  for (int m = 0; m < modes; ++m)
    for (int k = 0; k < nc; ++k) u[k] += coeffs[m * nc + k] * phi[m];
  return u;
}

/// Multiplies the selected slots of modes >= 1 by theta. The scaled values
/// reach eps only up to rounding, so the minimum is recomputed; when it is
/// not positive or more than a few ulps of `scale` below eps (this happens
/// once eps is under the rounding level of E), theta is halved a few times
/// and finally set to 0.
template <int Dim, class Measure>
double scale_high_modes(double* coeffs, const PointTable& table, double eps, double scale, double theta, int first,
                        int count, Measure&& measure) {
  constexpr int nc = Dim + 2;
  std::vector<double> saved(coeffs + nc, coeffs + table.modes * nc);
  auto apply = [&](double t) {
    for (int m = 1; m < table.modes; ++m)
      for (int k = first; k < first + count; ++k)
        coeffs[m * nc + k] = t * saved[static_cast<std::size_t>((m - 1) * nc + k)];
  };
  auto minimum = [&] {
    double lo = std::numeric_limits<double>::infinity();
    for (int pt = 0; pt < table.points; ++pt)
      lo = std::min(lo, measure(control_value<Dim>(coeffs, table.row(pt), table.modes)));
    return lo;
  };
  const double floor = eps - 4.0 * std::numeric_limits<double>::epsilon() * scale;
  auto acceptable = [&] {
    const double lo = minimum();
    return lo > 0.0 && lo >= floor;
  };
  apply(theta);
  for (int pass = 0; pass < 8 && !acceptable(); ++pass) {
    theta *= 0.5;
    apply(theta);
  }
  if (!acceptable()) {
    theta = 0.0;
    apply(theta);
  }
  return theta;
}

}  // namespace detail

/// Scales the cell polynomial toward its mean so that D >= eps and
/// q >= eps at every control point. `coeffs` is [mode][component].
/// Throws PreconditionViolation when the mean itself is not in G_eps.
template <int Dim>
PcpOutcome pcp_limit_cell(double* coeffs, const PointTable& table, double eps) {
  constexpr int nc = Dim + 2;
  const int modes = table.modes;
  Conserved<Dim> mean;
  for (int k = 0; k < nc; ++k) mean[k] = coeffs[k];
  const double q_mean = q_value(mean);
  if (!(mean.D() >= eps) || !(q_mean >= eps)) {
    throw PreconditionViolation("cell average outside G_eps " + describe(mean) +
                                "; the time step restriction of the positivity theorem is violated");
  }
  PcpOutcome out;
  if (modes == 1) return out;

  auto density = [](const Conserved<Dim>& u) { return u.D(); };
  auto q = [](const Conserved<Dim>& u) { return q_value(u); };

  double d_min = std::numeric_limits<double>::infinity();
  for (int pt = 0; pt < table.points; ++pt)
    d_min = std::min(d_min, detail::control_value<Dim>(coeffs, table.row(pt), modes).D());
  if (d_min < eps) {
    const double theta = (mean.D() - eps) / (mean.D() - d_min);
    out.theta_density = detail::scale_high_modes<Dim>(coeffs, table, eps, mean.D(), theta, 0, 1, density);
  }

  double q_min = std::numeric_limits<double>::infinity();
  for (int pt = 0; pt < table.points; ++pt)
    q_min = std::min(q_min, q_value(detail::control_value<Dim>(coeffs, table.row(pt), modes)));
  if (q_min < eps) {
    const double theta = (q_mean - eps) / (q_mean - q_min);
    out.theta_energy = detail::scale_high_modes<Dim>(coeffs, table, eps, mean.E(), theta, 0, nc, q);
  }
  return out;
}

/// Smallest D and q over the control points of one cell.
template <int Dim>
std::pair<double, double> control_minima(const double* coeffs, const PointTable& table) {
  double d_min = std::numeric_limits<double>::infinity();
  double q_min = d_min;
  for (int pt = 0; pt < table.points; ++pt) {
    const Conserved<Dim> u = detail::control_value<Dim>(coeffs, table.row(pt), table.modes);
    d_min = std::min(d_min, u.D());
    q_min = std::min(q_min, q_value(u));
  }
  return {d_min, q_min};
}

inline double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

/// TVB-modified minmod: a is kept when |a| <= m h^2.
inline double tvb_minmod(double a, double b, double c, double m, double h) {
  if (std::abs(a) <= m * h * h) return a;
  return minmod(a, b, c);
}

}  // namespace rcdg
