#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rcdg/basis.hpp"
#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/limiter.hpp"
#include "rcdg/mesh.hpp"
#include "rcdg/quadrature.hpp"
#include "rcdg/recovery.hpp"
#include "rcdg/scheme.hpp"
#include "rcdg/solution.hpp"

namespace rcdg {

namespace detail {

/// Mirror image of a cell polynomial across a boundary normal to `axis`;
/// `parity` gives the sign of each mode under the reflection.
template <int Dim, class Parity>
void mirror_cell(const double* src, double* dst, int modes, Parity parity, int normal_momentum) {
  constexpr int nc = Dim + 2;
  for (int m = 0; m < modes; ++m) {
    const double s = parity(m);
    for (int k = 0; k < nc; ++k) {
      double v = s * src[m * nc + k];
      if (k == normal_momentum) v = -v;
      dst[m * nc + k] = v;
    }
  }
}

template <int Dim>
void constant_cell(const Conserved<Dim>& state, double* dst, int modes) {
  constexpr int nc = Dim + 2;
  std::fill(dst, dst + modes * nc, 0.0);
  for (int k = 0; k < nc; ++k) dst[k] = state[k];
}

}  // namespace detail

/// Central DG discretisation on overlapping primal/dual meshes in 1D.
class CentralDg1d {
 public:
  static constexpr int kDim = 1;
  static constexpr int kComponents = 3;
  using State = Conserved<1>;
  using Solution = DgSolution<1>;

  CentralDg1d(EosModel eos, Mesh1d mesh, Boundaries<1> bc, SchemeOptions options)
      : eos_(eos), mesh_(mesh), bc_(bc), options_(options), basis_(options.degree),
        quad_(build_quadrature(options.degree)) {
    bc_.validate();
    if (bc_.periodic(0) != mesh_.periodic) throw ConfigError("mesh periodicity does not match boundaries");
    modes_ = basis_.size();
    stride_ = modes_ * kComponents;
    npts_ = 2 * quad_.q();
    for (int h = 0; h < 2; ++h) {
      for (int a = 0; a < quad_.q(); ++a) {
        const double xi = quad_.gauss_xi(h, a);
        weights_.push_back(0.5 * quad_.gauss.weights[static_cast<std::size_t>(a)]);
        for (int m = 0; m < modes_; ++m) {
          phi_.push_back(Basis1d::value(m, xi));
          dphi_.push_back(Basis1d::slope(m, xi));
        }
      }
    }
    for (int m = 0; m < modes_; ++m) {
      phi_center_.push_back(Basis1d::value(m, 0.0));
      phi_left_.push_back(Basis1d::value(m, -0.5));
      phi_right_.push_back(Basis1d::value(m, 0.5));
    }
    control_ = control_table_1d(basis_, quad_);
    ext_.assign(static_cast<std::size_t>((mesh_.n + 2) * stride_), 0.0);
    primal_pts_.resize(mesh_.n + 2, npts_);
    dual_pts_.resize(mesh_.cells(MeshKind::kDual), npts_);
  }

  const EosModel& eos() const { return eos_; }
  const Mesh1d& mesh() const { return mesh_; }
  const Boundaries<1>& boundaries() const { return bc_; }
  const SchemeOptions& options() const { return options_; }
  const Basis1d& basis() const { return basis_; }
  const QuadratureSet& quadrature() const { return quad_; }
  const PointTable& control_table() const { return control_; }
  int modes() const { return modes_; }

  double inverse_spacing_sum() const { return 1.0 / mesh_.dx(); }

  Solution make_solution() const {
    return Solution(modes_, mesh_.cells(MeshKind::kPrimal), mesh_.cells(MeshKind::kDual));
  }

  /// L2 projection of a conserved-variable field onto both meshes.
  template <class Field>
  void project(Solution& u, Field&& field) const {
    const QuadratureRule rule = gauss_legendre(5);
    const double dx = mesh_.dx();
    for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
      for (int c = 0; c < mesh_.cells(kind); ++c) {
        double* out = u.cell(kind, c);
        std::fill(out, out + stride_, 0.0);
        const double xc = mesh_.center(kind, c);
        for (int h = 0; h < 2; ++h) {
          for (int a = 0; a < rule.size(); ++a) {
            const double xi = 0.5 * (h - 1) + 0.5 * rule.nodes[static_cast<std::size_t>(a)];
            const double w = 0.5 * rule.weights[static_cast<std::size_t>(a)];
            const State s = field(xc + xi * dx);
            for (int m = 0; m < modes_; ++m) {
              const double f = w * Basis1d::value(m, xi) / Basis1d::mass_factor(m);
              for (int k = 0; k < kComponents; ++k) out[m * kComponents + k] += f * s[k];
            }
          }
        }
      }
    }
  }

  /// Value of the cell polynomial at reference coordinate xi.
  State evaluate(const Solution& u, MeshKind kind, int c, double xi) const {
    const double* coeffs = u.cell(kind, c);
    State s;
    for (int m = 0; m < modes_; ++m) {
      const double phi = Basis1d::value(m, xi);
      for (int k = 0; k < kComponents; ++k) s[k] += coeffs[m * kComponents + k] * phi;
    }
    return s;
  }

  /// Semi-discrete right-hand side dU/dt for both meshes.
  /// `dissipation_rate` is 1 / tau_max = theta / dt.
  void residual(const Solution& u, double dissipation_rate, Solution& out) {
    if (out.modes != modes_ || out.mesh(MeshKind::kPrimal).size() != u.mesh(MeshKind::kPrimal).size()) {
      out = make_solution();
    }
    fill_ghosts(u);
    compute_points(ext_.data(), mesh_.n + 2, primal_pts_, MeshKind::kPrimal, -1);
    compute_points(u.mesh(MeshKind::kDual).data(), mesh_.cells(MeshKind::kDual), dual_pts_, MeshKind::kDual, 0);

    const int n = mesh_.n;
    const int nd = mesh_.cells(MeshKind::kDual);
    const bool periodic = mesh_.periodic;
    for (int c = 0; c < n; ++c) {
      const int left = c;
      const int right = periodic ? (c + 1) % nd : c + 1;
      assemble(primal_pts_, c + 1, dual_pts_, left, right, dissipation_rate, out.cell(MeshKind::kPrimal, c));
    }
    for (int c = 0; c < nd; ++c) {
      assemble(dual_pts_, c, primal_pts_, c, c + 1, dissipation_rate, out.cell(MeshKind::kDual, c));
    }
  }

  /// Oscillation limiter (when enabled) then positivity limiter (when enabled).
  LimiterStats limit(Solution& u) const {
    LimiterStats stats;
    for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
      if (options_.tvb && modes_ > 1) stats.tvb_components += tvb_limit(u, kind);
      for (int c = 0; c < mesh_.cells(kind); ++c) {
        double* coeffs = u.cell(kind, c);
        const State mean = u.average(kind, c);
        stats.min_average_density = std::min(stats.min_average_density, mean.D());
        stats.min_average_q = std::min(stats.min_average_q, q_value(mean));
        if (options_.pcp) {
          try {
            const PcpOutcome r = pcp_limit_cell<1>(coeffs, control_, options_.eps);
            if (r.modified()) {
              ++stats.pcp_cells;
              stats.min_theta = std::min({stats.min_theta, r.theta_density, r.theta_energy});
            }
          } catch (const PreconditionViolation& e) {
            throw PreconditionViolation(std::string(e.what()) + " at " + where(kind, c));
          }
        }
        if (options_.track_control_points) {
          const auto [dc, qc] = rcdg::control_minima<1>(coeffs, control_);
          stats.min_control_density = std::min(stats.min_control_density, dc);
          stats.min_control_q = std::min(stats.min_control_q, qc);
          stats.record_shortfall(options_.eps, dc, mean.D(), qc, mean.E());
        }
      }
    }
    return stats;
  }

  /// Smallest D and q over all control points of both meshes.
  std::pair<double, double> control_minima(const Solution& u) const {
    double d = std::numeric_limits<double>::infinity();
    double q = d;
    for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
      for (int c = 0; c < mesh_.cells(kind); ++c) {
        const auto [dc, qc] = rcdg::control_minima<1>(u.cell(kind, c), control_);
        d = std::min(d, dc);
        q = std::min(q, qc);
      }
    }
    return {d, q};
  }

  std::string where(MeshKind kind, int c) const {
    return std::string(kind == MeshKind::kPrimal ? "primal" : "dual") + " cell " + std::to_string(c) +
           " (x=" + std::to_string(mesh_.center(kind, c)) + ")";
  }

 private:
  struct PointData {
    int per_cell = 0;
    std::vector<State> value;
    std::vector<State> flux;
    std::vector<double> pressure;
    std::vector<State> center_flux;
    std::vector<double> center_pressure;

    void resize(int cells, int pts) {
      per_cell = pts;
      value.assign(static_cast<std::size_t>(cells * pts), State{});
      flux.assign(static_cast<std::size_t>(cells * pts), State{});
      pressure.assign(static_cast<std::size_t>(cells * pts), 0.0);
      center_flux.assign(static_cast<std::size_t>(cells), State{});
      center_pressure.assign(static_cast<std::size_t>(cells), 0.0);
    }
  };

  void fill_ghosts(const Solution& u) {
    const int n = mesh_.n;
    std::copy(u.mesh(MeshKind::kPrimal).begin(), u.mesh(MeshKind::kPrimal).end(), ext_.begin() + stride_);
    double* left = ext_.data();
    double* right = ext_.data() + static_cast<std::ptrdiff_t>(n + 1) * stride_;
    if (mesh_.periodic) {
      std::copy(u.cell(MeshKind::kPrimal, n - 1), u.cell(MeshKind::kPrimal, n - 1) + stride_, left);
      std::copy(u.cell(MeshKind::kPrimal, 0), u.cell(MeshKind::kPrimal, 0) + stride_, right);
      return;
    }
    ghost(bc_.side[0], u.cell(MeshKind::kPrimal, 0), left);
    ghost(bc_.side[1], u.cell(MeshKind::kPrimal, n - 1), right);
  }

  void ghost(const BoundaryCondition<1>& side, const double* inner, double* dst) const {
    switch (side.kind) {
      case BoundaryKind::kInflow:
        detail::constant_cell<1>(side.inflow_state, dst, modes_);
        return;
      case BoundaryKind::kReflecting:
        detail::mirror_cell<1>(inner, dst, modes_, Basis1d::parity, 1);
        return;
      default:
        detail::mirror_cell<1>(inner, dst, modes_, Basis1d::parity, -1);
        return;
    }
  }

  /// Average of the neighbour of cell c on `side` (0 left, 1 right), using
  /// the boundary rule when the neighbour is outside the mesh.
  State neighbour_average(const Solution& u, MeshKind kind, int c, int side) const {
    const int cells = mesh_.cells(kind);
    const int nb = side == 0 ? c - 1 : c + 1;
    if (nb >= 0 && nb < cells) return u.average(kind, nb);
    if (mesh_.periodic) return u.average(kind, (nb + cells) % cells);
    const BoundaryCondition<1>& bc = bc_.side[static_cast<std::size_t>(side)];
    // The primal ghost mirrors the boundary cell itself; the dual boundary
    // cell is centered on the wall, so its ghost mirrors the next cell in.
    int src = kind == MeshKind::kPrimal ? c : (side == 0 ? c + 1 : c - 1);
    src = std::clamp(src, 0, cells - 1);
    State s = u.average(kind, src);
    if (bc.kind == BoundaryKind::kInflow) return bc.inflow_state;
    if (bc.kind == BoundaryKind::kReflecting) s.m(0) = -s.m(0);
    return s;
  }

  long tvb_limit(Solution& u, MeshKind kind) const {
    long changed = 0;
    const double dx = mesh_.dx();
    std::vector<State> left(static_cast<std::size_t>(mesh_.cells(kind)));
    std::vector<State> right(left.size());
    for (int c = 0; c < mesh_.cells(kind); ++c) {
      left[static_cast<std::size_t>(c)] = neighbour_average(u, kind, c, 0);
      right[static_cast<std::size_t>(c)] = neighbour_average(u, kind, c, 1);
    }
    for (int c = 0; c < mesh_.cells(kind); ++c) {
      double* coeffs = u.cell(kind, c);
      for (int k = 0; k < kComponents; ++k) {
        const double mean = coeffs[k];
        const double slope = coeffs[kComponents + k];
        const double limited = tvb_minmod(slope, right[static_cast<std::size_t>(c)][k] - mean,
                                          mean - left[static_cast<std::size_t>(c)][k], options_.tvb_m, dx);
        if (limited != slope) {
          ++changed;
          coeffs[kComponents + k] = limited;
          for (int m = 2; m < modes_; ++m) coeffs[m * kComponents + k] = 0.0;
        }
      }
    }
    return changed;
  }

  /// Point values and fluxes of every cell of one mesh. `index_shift`
  /// converts the storage index to the mesh cell index for messages.
  void compute_points(const double* base, int cells, PointData& pd, MeshKind kind, int index_shift) {
    for (int c = 0; c < cells; ++c) {
      const double* coeffs = base + static_cast<std::ptrdiff_t>(c) * stride_;
      for (int p = 0; p < npts_; ++p) {
        const std::size_t idx = static_cast<std::size_t>(c * npts_ + p);
        pd.value[idx] = point_value(coeffs, phi_.data() + p * modes_);
        pd.pressure[idx] = recover(pd.value[idx], pd.pressure[idx], kind, c + index_shift);
        pd.flux[idx] = flux_from_primitive(pd.value[idx], primitive_from_pressure(pd.value[idx], pd.pressure[idx]), 0);
      }
      const State uc = point_value(coeffs, phi_center_.data());
      const auto cu = static_cast<std::size_t>(c);
      pd.center_pressure[cu] = recover(uc, pd.center_pressure[cu], kind, c + index_shift);
      pd.center_flux[cu] = flux_from_primitive(uc, primitive_from_pressure(uc, pd.center_pressure[cu]), 0);
    }
  }

  double recover(const State& s, double hint, MeshKind kind, int c) const {
    try {
      return solve_pressure(eos_, s, hint).p;
    } catch (const InadmissibleState& e) {
      throw InadmissibleState(std::string(e.what()) + " at " + where(kind, c));
    }
  }

  State point_value(const double* coeffs, const double* phi) const {
    State s;
    for (int m = 0; m < modes_; ++m)
      for (int k = 0; k < kComponents; ++k) s[k] += coeffs[m * kComponents + k] * phi[m];
    return s;
  }

  /// Right-hand side of one cell. `own` indexes this mesh's point data;
  /// `left`/`right` index the overlapping cells of the other mesh.
  void assemble(const PointData& own, int own_index, const PointData& other, int left, int right,
                double rate, double* out) const {
    const int q = quad_.q();
    const double inv_dx = 1.0 / mesh_.dx();
    std::fill(out, out + stride_, 0.0);
    for (int h = 0; h < 2; ++h) {
      const int nb = h == 0 ? left : right;
      for (int a = 0; a < q; ++a) {
        const int p_own = h * q + a;
        const int p_other = (1 - h) * q + a;
        const State& uo = other.value[static_cast<std::size_t>(nb * npts_ + p_other)];
        const State& fo = other.flux[static_cast<std::size_t>(nb * npts_ + p_other)];
        const State& us = own.value[static_cast<std::size_t>(own_index * npts_ + p_own)];
        const double w = weights_[static_cast<std::size_t>(p_own)];
        const double* phi = phi_.data() + p_own * modes_;
        const double* dphi = dphi_.data() + p_own * modes_;
        for (int m = 0; m < modes_; ++m) {
          const double a_diss = rate * w * phi[m];
          const double a_vol = inv_dx * w * dphi[m];
          for (int k = 0; k < kComponents; ++k) {
            out[m * kComponents + k] += a_diss * (uo[k] - us[k]) + a_vol * fo[k];
          }
        }
      }
    }
    const State& fl = other.center_flux[static_cast<std::size_t>(left)];
    const State& fr = other.center_flux[static_cast<std::size_t>(right)];
    for (int m = 0; m < modes_; ++m) {
      const double inv_mass = 1.0 / Basis1d::mass_factor(m);
      for (int k = 0; k < kComponents; ++k) {
        double& o = out[m * kComponents + k];
        o = inv_mass * (o + inv_dx * (fl[k] * phi_left_[static_cast<std::size_t>(m)] -
                                      fr[k] * phi_right_[static_cast<std::size_t>(m)]));
      }
    }
  }

  EosModel eos_;
  Mesh1d mesh_;
  Boundaries<1> bc_;
  SchemeOptions options_;
  Basis1d basis_;
  QuadratureSet quad_;
  PointTable control_;
  int modes_ = 0;
  int stride_ = 0;
  int npts_ = 0;
  std::vector<double> weights_;
  std::vector<double> phi_;
  std::vector<double> dphi_;
  std::vector<double> phi_center_;
  std::vector<double> phi_left_;
  std::vector<double> phi_right_;
  std::vector<double> ext_;
  PointData primal_pts_;
  PointData dual_pts_;
};

}  // namespace rcdg
