#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rcdg/basis.hpp"
#include "rcdg/central_dg1d.hpp"
#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/limiter.hpp"
#include "rcdg/mesh.hpp"
#include "rcdg/quadrature.hpp"
#include "rcdg/recovery.hpp"
#include "rcdg/scheme.hpp"
#include "rcdg/solution.hpp"

namespace rcdg {

/// Central DG discretisation on overlapping primal/dual meshes in 2D.
///
/// Each cell is split into four quarters; every quarter of a primal cell is
/// a quarter of exactly one dual cell and vice versa. Point data of one mesh
/// (values at the quarter Gauss points, x-fluxes on the vertical center
/// line, y-fluxes on the horizontal center line) feed the residual of the
/// other mesh.
class CentralDg2d {
 public:
  static constexpr int kDim = 2;
  static constexpr int kComponents = 4;
  using State = Conserved<2>;
  using Solution = DgSolution<2>;

  CentralDg2d(EosModel eos, Mesh2d mesh, Boundaries<2> bc, SchemeOptions options)
      : eos_(eos), mesh_(mesh), bc_(bc), options_(options), basis_(options.degree),
        quad_(build_quadrature(options.degree)) {
    bc_.validate();
    if (bc_.periodic(0) != mesh_.x.periodic || bc_.periodic(1) != mesh_.y.periodic) {
      throw ConfigError("mesh periodicity does not match boundaries");
    }
    modes_ = basis_.size();
    stride_ = modes_ * kComponents;
    q_ = quad_.q();
    line_ = 2 * q_;
    npts_ = line_ * line_;
    for (int h = 0; h < 2; ++h) {
      for (int a = 0; a < q_; ++a) {
        xi_.push_back(quad_.gauss_xi(h, a));
        w_.push_back(0.5 * quad_.gauss.weights[static_cast<std::size_t>(a)]);
      }
    }
    for (int iy = 0; iy < line_; ++iy) {
      for (int ix = 0; ix < line_; ++ix) {
        const double x = xi_[static_cast<std::size_t>(ix)];
        const double y = xi_[static_cast<std::size_t>(iy)];
        for (int m = 0; m < modes_; ++m) {
          phi_.push_back(Basis2d::value(m, x, y));
          dphi_x_.push_back(Basis2d::slope_xi(m, x, y));
          dphi_y_.push_back(Basis2d::slope_eta(m, x, y));
        }
      }
    }
    for (int i = 0; i < line_; ++i) {
      const double s = xi_[static_cast<std::size_t>(i)];
      for (int m = 0; m < modes_; ++m) {
        phi_xline_.push_back(Basis2d::value(m, 0.0, s));
        phi_yline_.push_back(Basis2d::value(m, s, 0.0));
        phi_edge_x_[0].push_back(Basis2d::value(m, -0.5, s));
        phi_edge_x_[1].push_back(Basis2d::value(m, 0.5, s));
        phi_edge_y_[0].push_back(Basis2d::value(m, s, -0.5));
        phi_edge_y_[1].push_back(Basis2d::value(m, s, 0.5));
      }
    }
    control_ = control_table_2d(basis_, quad_);
    ext_nx_ = mesh_.x.n + 2;
    ext_ny_ = mesh_.y.n + 2;
    ext_.assign(static_cast<std::size_t>(ext_nx_ * ext_ny_ * stride_), 0.0);
    primal_pts_.resize(ext_nx_ * ext_ny_, npts_, line_);
    dual_pts_.resize(mesh_.cells(MeshKind::kDual), npts_, line_);
  }

  const EosModel& eos() const { return eos_; }
  const Mesh2d& mesh() const { return mesh_; }
  const Boundaries<2>& boundaries() const { return bc_; }
  const SchemeOptions& options() const { return options_; }
  const QuadratureSet& quadrature() const { return quad_; }
  const PointTable& control_table() const { return control_; }
  int modes() const { return modes_; }

  double inverse_spacing_sum() const { return 1.0 / mesh_.x.dx() + 1.0 / mesh_.y.dx(); }

  Solution make_solution() const {
    return Solution(modes_, mesh_.cells(MeshKind::kPrimal), mesh_.cells(MeshKind::kDual));
  }

  /// L2 projection of a conserved-variable field f(x, y) onto both meshes.
  template <class Field>
  void project(Solution& u, Field&& field) const {
    const QuadratureRule rule = gauss_legendre(5);
    std::vector<double> s;
    std::vector<double> w;
    for (int h = 0; h < 2; ++h) {
      for (int a = 0; a < rule.size(); ++a) {
        s.push_back(0.5 * (h - 1) + 0.5 * rule.nodes[static_cast<std::size_t>(a)]);
        w.push_back(0.5 * rule.weights[static_cast<std::size_t>(a)]);
      }
    }
    const double hx = mesh_.x.dx();
    const double hy = mesh_.y.dx();
    for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
      for (int j = 0; j < mesh_.cells_y(kind); ++j) {
        for (int i = 0; i < mesh_.cells_x(kind); ++i) {
          double* out = u.cell(kind, mesh_.index(kind, i, j));
          std::fill(out, out + stride_, 0.0);
          const auto c = mesh_.center(kind, i, j);
          for (std::size_t b = 0; b < s.size(); ++b) {
            for (std::size_t a = 0; a < s.size(); ++a) {
              const State st = field(c[0] + s[a] * hx, c[1] + s[b] * hy);
              for (int m = 0; m < modes_; ++m) {
                const double f = w[a] * w[b] * Basis2d::value(m, s[a], s[b]) / Basis2d::mass_factor(m);
                for (int k = 0; k < kComponents; ++k) out[m * kComponents + k] += f * st[k];
              }
            }
          }
        }
      }
    }
  }

  State evaluate(const Solution& u, MeshKind kind, int cell, double xi, double eta) const {
    const double* coeffs = u.cell(kind, cell);
    State s;
    for (int m = 0; m < modes_; ++m) {
      const double phi = Basis2d::value(m, xi, eta);
      for (int k = 0; k < kComponents; ++k) s[k] += coeffs[m * kComponents + k] * phi;
    }
    return s;
  }

  void residual(const Solution& u, double dissipation_rate, Solution& out) {
    if (out.modes != modes_ || out.mesh(MeshKind::kPrimal).size() != u.mesh(MeshKind::kPrimal).size()) {
      out = make_solution();
    }
    fill_ghosts(u);
    compute_points(ext_.data(), ext_nx_, ext_ny_, primal_pts_, MeshKind::kPrimal, -1);
    const int ndx = mesh_.cells_x(MeshKind::kDual);
    const int ndy = mesh_.cells_y(MeshKind::kDual);
    compute_points(u.mesh(MeshKind::kDual).data(), ndx, ndy, dual_pts_, MeshKind::kDual, 0);

    const int nx = mesh_.x.n;
    const int ny = mesh_.y.n;
    std::array<int, 4> nb{};
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        for (int oy = 0; oy < 2; ++oy) {
          for (int ox = 0; ox < 2; ++ox) {
            const int k = mesh_.x.periodic ? (i + ox) % ndx : i + ox;
            const int l = mesh_.y.periodic ? (j + oy) % ndy : j + oy;
            nb[static_cast<std::size_t>(oy * 2 + ox)] = k + l * ndx;
          }
        }
        assemble(primal_pts_, (i + 1) + (j + 1) * ext_nx_, dual_pts_, nb, dissipation_rate,
                 out.cell(MeshKind::kPrimal, mesh_.index(MeshKind::kPrimal, i, j)));
      }
    }
    for (int l = 0; l < ndy; ++l) {
      for (int k = 0; k < ndx; ++k) {
        for (int oy = 0; oy < 2; ++oy)
          for (int ox = 0; ox < 2; ++ox) nb[static_cast<std::size_t>(oy * 2 + ox)] = (k + ox) + (l + oy) * ext_nx_;
        assemble(dual_pts_, k + l * ndx, primal_pts_, nb, dissipation_rate,
                 out.cell(MeshKind::kDual, mesh_.index(MeshKind::kDual, k, l)));
      }
    }
  }

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
            const PcpOutcome r = pcp_limit_cell<2>(coeffs, control_, options_.eps);
            if (r.modified()) {
              ++stats.pcp_cells;
              stats.min_theta = std::min({stats.min_theta, r.theta_density, r.theta_energy});
            }
          } catch (const PreconditionViolation& e) {
            throw PreconditionViolation(std::string(e.what()) + " at " + where(kind, c));
          }
        }
        if (options_.track_control_points) {
          const auto [dc, qc] = rcdg::control_minima<2>(coeffs, control_);
          stats.min_control_density = std::min(stats.min_control_density, dc);
          stats.min_control_q = std::min(stats.min_control_q, qc);
          stats.record_shortfall(options_.eps, dc, mean.D(), qc, mean.E());
        }
      }
    }
    return stats;
  }

  std::pair<double, double> control_minima(const Solution& u) const {
    double d = std::numeric_limits<double>::infinity();
    double q = d;
    for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
      for (int c = 0; c < mesh_.cells(kind); ++c) {
        const auto [dc, qc] = rcdg::control_minima<2>(u.cell(kind, c), control_);
        d = std::min(d, dc);
        q = std::min(q, qc);
      }
    }
    return {d, q};
  }

  std::string where(MeshKind kind, int c) const {
    const int nx = mesh_.cells_x(kind);
    const int i = c % nx;
    const int j = c / nx;
    const auto x = mesh_.center(kind, i, j);
    return std::string(kind == MeshKind::kPrimal ? "primal" : "dual") + " cell (" + std::to_string(i) + "," +
           std::to_string(j) + ") at (" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ")";
  }

 private:
  struct PointData {
    int per_cell = 0;
    int per_line = 0;
    std::vector<State> value;
    std::vector<State> flux_x;
    std::vector<State> flux_y;
    std::vector<double> pressure;
    std::vector<State> xline_flux;
    std::vector<double> xline_pressure;
    std::vector<State> yline_flux;
    std::vector<double> yline_pressure;

    void resize(int cells, int pts, int line) {
      per_cell = pts;
      per_line = line;
      const auto n = static_cast<std::size_t>(cells * pts);
      const auto nl = static_cast<std::size_t>(cells * line);
      value.assign(n, State{});
      flux_x.assign(n, State{});
      flux_y.assign(n, State{});
      pressure.assign(n, 0.0);
      xline_flux.assign(nl, State{});
      xline_pressure.assign(nl, 0.0);
      yline_flux.assign(nl, State{});
      yline_pressure.assign(nl, 0.0);
    }
  };

  double* ext_cell(int i, int j) { return ext_.data() + static_cast<std::ptrdiff_t>((i + 1) + (j + 1) * ext_nx_) * stride_; }

  void fill_ghosts(const Solution& u) {
    const int nx = mesh_.x.n;
    const int ny = mesh_.y.n;
    for (int j = 0; j < ny; ++j) {
      const double* src = u.cell(MeshKind::kPrimal, mesh_.index(MeshKind::kPrimal, 0, j));
      std::copy(src, src + nx * stride_, ext_cell(0, j));
    }
    for (int j = 0; j < ny; ++j) {
      const double y = mesh_.y.center(MeshKind::kPrimal, j);
      if (mesh_.x.periodic) {
        std::copy(ext_cell(nx - 1, j), ext_cell(nx - 1, j) + stride_, ext_cell(-1, j));
        std::copy(ext_cell(0, j), ext_cell(0, j) + stride_, ext_cell(nx, j));
      } else {
        ghost(bc_.side[0], y, 0, ext_cell(0, j), ext_cell(-1, j));
        ghost(bc_.side[1], y, 0, ext_cell(nx - 1, j), ext_cell(nx, j));
      }
    }
    for (int i = -1; i <= nx; ++i) {
      const double x = mesh_.x.a + (i + 0.5) * mesh_.x.dx();
      if (mesh_.y.periodic) {
        std::copy(ext_cell(i, ny - 1), ext_cell(i, ny - 1) + stride_, ext_cell(i, -1));
        std::copy(ext_cell(i, 0), ext_cell(i, 0) + stride_, ext_cell(i, ny));
      } else {
        ghost(bc_.side[2], x, 1, ext_cell(i, 0), ext_cell(i, -1));
        ghost(bc_.side[3], x, 1, ext_cell(i, ny - 1), ext_cell(i, ny));
      }
    }
  }

  void ghost(const BoundaryCondition<2>& side, double tangential, int axis, const double* inner, double* dst) const {
    const bool inflow = side.kind == BoundaryKind::kInflow && tangential >= side.inflow_lo && tangential <= side.inflow_hi;
    if (inflow) {
      detail::constant_cell<2>(side.inflow_state, dst, modes_);
      return;
    }
    const int normal = side.kind == BoundaryKind::kReflecting ? 1 + axis : -1;
    if (axis == 0) {
      detail::mirror_cell<2>(inner, dst, modes_, Basis2d::parity_xi, normal);
    } else {
      detail::mirror_cell<2>(inner, dst, modes_, Basis2d::parity_eta, normal);
    }
  }

  State neighbour_average(const Solution& u, MeshKind kind, int i, int j, int axis, int side) const {
    const int nx = mesh_.cells_x(kind);
    const int ny = mesh_.cells_y(kind);
    int ni = i + (axis == 0 ? 2 * side - 1 : 0);
    int nj = j + (axis == 1 ? 2 * side - 1 : 0);
    const int n_axis = axis == 0 ? nx : ny;
    const int pos = axis == 0 ? ni : nj;
    if (pos >= 0 && pos < n_axis) return u.average(kind, mesh_.index(kind, ni, nj));
    const Mesh1d& m1 = axis == 0 ? mesh_.x : mesh_.y;
    if (m1.periodic) {
      (axis == 0 ? ni : nj) = (pos + n_axis) % n_axis;
      return u.average(kind, mesh_.index(kind, ni, nj));
    }
    const BoundaryCondition<2>& bc = bc_.side[static_cast<std::size_t>(2 * axis + side)];
    const double tangential = axis == 0 ? mesh_.y.center(kind, j) : mesh_.x.center(kind, i);
    if (bc.kind == BoundaryKind::kInflow && tangential >= bc.inflow_lo && tangential <= bc.inflow_hi) {
      return bc.inflow_state;
    }
    int si = i;
    int sj = j;
    if (kind == MeshKind::kDual) (axis == 0 ? si : sj) += side == 0 ? 1 : -1;
    si = std::clamp(si, 0, nx - 1);
    sj = std::clamp(sj, 0, ny - 1);
    State s = u.average(kind, mesh_.index(kind, si, sj));
    if (bc.kind == BoundaryKind::kReflecting) s.m(axis) = -s.m(axis);
    return s;
  }

  long tvb_limit(Solution& u, MeshKind kind) const {
    const int nx = mesh_.cells_x(kind);
    const int ny = mesh_.cells_y(kind);
    const std::array<double, 2> h{mesh_.x.dx(), mesh_.y.dx()};
    std::vector<std::array<State, 4>> nbs(static_cast<std::size_t>(nx * ny));
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        for (int axis = 0; axis < 2; ++axis)
          for (int side = 0; side < 2; ++side)
            nbs[static_cast<std::size_t>(i + j * nx)][static_cast<std::size_t>(2 * axis + side)] =
                neighbour_average(u, kind, i, j, axis, side);
    long changed = 0;
    for (int c = 0; c < nx * ny; ++c) {
      double* coeffs = u.cell(kind, c);
      const auto& nb = nbs[static_cast<std::size_t>(c)];
      for (int k = 0; k < kComponents; ++k) {
        const double mean = coeffs[k];
        bool limited_any = false;
        for (int axis = 0; axis < 2; ++axis) {
          double& slope = coeffs[(1 + axis) * kComponents + k];
          const double lim = tvb_minmod(slope, nb[static_cast<std::size_t>(2 * axis + 1)][k] - mean,
                                        mean - nb[static_cast<std::size_t>(2 * axis)][k], options_.tvb_m,
                                        h[static_cast<std::size_t>(axis)]);
          if (lim != slope) {
            slope = lim;
            limited_any = true;
          }
        }
        if (limited_any) {
          ++changed;
          for (int m = 3; m < modes_; ++m) coeffs[m * kComponents + k] = 0.0;
        }
      }
    }
    return changed;
  }

  void compute_points(const double* base, int cx, int cy, PointData& pd, MeshKind kind, int shift) {
    for (int j = 0; j < cy; ++j) {
      for (int i = 0; i < cx; ++i) {
        const int c = i + j * cx;
        const double* coeffs = base + static_cast<std::ptrdiff_t>(c) * stride_;
        for (int p = 0; p < npts_; ++p) {
          const auto idx = static_cast<std::size_t>(c * npts_ + p);
          const State s = point_value(coeffs, phi_.data() + p * modes_);
          const double pr = recover(s, pd.pressure[idx], kind, i + shift, j + shift);
          const Primitive<2> w = primitive_from_pressure(s, pr);
          pd.value[idx] = s;
          pd.pressure[idx] = pr;
          pd.flux_x[idx] = flux_from_primitive(s, w, 0);
          pd.flux_y[idx] = flux_from_primitive(s, w, 1);
        }
        for (int p = 0; p < line_; ++p) {
          const auto idx = static_cast<std::size_t>(c * line_ + p);
          const State sx = point_value(coeffs, phi_xline_.data() + p * modes_);
          const double px = recover(sx, pd.xline_pressure[idx], kind, i + shift, j + shift);
          pd.xline_pressure[idx] = px;
          pd.xline_flux[idx] = flux_from_primitive(sx, primitive_from_pressure(sx, px), 0);
          const State sy = point_value(coeffs, phi_yline_.data() + p * modes_);
          const double py = recover(sy, pd.yline_pressure[idx], kind, i + shift, j + shift);
          pd.yline_pressure[idx] = py;
          pd.yline_flux[idx] = flux_from_primitive(sy, primitive_from_pressure(sy, py), 1);
        }
      }
    }
  }

  double recover(const State& s, double hint, MeshKind kind, int i, int j) const {
    try {
      return solve_pressure(eos_, s, hint).p;
    } catch (const InadmissibleState& e) {
      const auto x = mesh_.center(kind, i, j);
      throw InadmissibleState(std::string(e.what()) + " at " + (kind == MeshKind::kPrimal ? "primal" : "dual") +
                              " cell (" + std::to_string(i) + "," + std::to_string(j) + ") at (" +
                              std::to_string(x[0]) + "," + std::to_string(x[1]) + ")");
    }
  }

  State point_value(const double* coeffs, const double* phi) const {
    State s;
    for (int m = 0; m < modes_; ++m)
      for (int k = 0; k < kComponents; ++k) s[k] += coeffs[m * kComponents + k] * phi[m];
    return s;
  }

  /// `nb[oy * 2 + ox]` is the other-mesh cell overlapping quarter (ox, oy).
  void assemble(const PointData& own, int own_index, const PointData& other, const std::array<int, 4>& nb,
                double rate, double* out) const {
    const double inv_dx = 1.0 / mesh_.x.dx();
    const double inv_dy = 1.0 / mesh_.y.dx();
    std::fill(out, out + stride_, 0.0);
    for (int iy = 0; iy < line_; ++iy) {
      const int hy = iy / q_;
      const int oy_idx = (iy + q_) % line_;
      for (int ix = 0; ix < line_; ++ix) {
        const int hx = ix / q_;
        const int ox_idx = (ix + q_) % line_;
        const int cell = nb[static_cast<std::size_t>(hy * 2 + hx)];
        const int p_own = iy * line_ + ix;
        const auto po = static_cast<std::size_t>(cell * npts_ + oy_idx * line_ + ox_idx);
        const State& uo = other.value[po];
        const State& fx = other.flux_x[po];
        const State& fy = other.flux_y[po];
        const State& us = own.value[static_cast<std::size_t>(own_index * npts_ + p_own)];
        const double w = w_[static_cast<std::size_t>(ix)] * w_[static_cast<std::size_t>(iy)];
        const double* phi = phi_.data() + p_own * modes_;
        const double* gx = dphi_x_.data() + p_own * modes_;
        const double* gy = dphi_y_.data() + p_own * modes_;
        for (int m = 0; m < modes_; ++m) {
          const double a_diss = rate * w * phi[m];
          const double a_x = inv_dx * w * gx[m];
          const double a_y = inv_dy * w * gy[m];
          for (int k = 0; k < kComponents; ++k) {
            out[m * kComponents + k] += a_diss * (uo[k] - us[k]) + a_x * fx[k] + a_y * fy[k];
          }
        }
      }
    }
    // Vertical edges xi = -1/2 (s = 0) and xi = +1/2 (s = 1): x-fluxes on the
    // center line of the other-mesh cells (s, hy).
    for (int s = 0; s < 2; ++s) {
      const double sign = s == 0 ? 1.0 : -1.0;
      for (int iy = 0; iy < line_; ++iy) {
        const int hy = iy / q_;
        const int cell = nb[static_cast<std::size_t>(hy * 2 + s)];
        const State& f = other.xline_flux[static_cast<std::size_t>(cell * line_ + (iy + q_) % line_)];
        const double c = sign * inv_dx * w_[static_cast<std::size_t>(iy)];
        const double* phi = phi_edge_x_[static_cast<std::size_t>(s)].data() + iy * modes_;
        for (int m = 0; m < modes_; ++m)
          for (int k = 0; k < kComponents; ++k) out[m * kComponents + k] += c * phi[m] * f[k];
      }
    }
    for (int s = 0; s < 2; ++s) {
      const double sign = s == 0 ? 1.0 : -1.0;
      for (int ix = 0; ix < line_; ++ix) {
        const int hx = ix / q_;
        const int cell = nb[static_cast<std::size_t>(s * 2 + hx)];
        const State& f = other.yline_flux[static_cast<std::size_t>(cell * line_ + (ix + q_) % line_)];
        const double c = sign * inv_dy * w_[static_cast<std::size_t>(ix)];
        const double* phi = phi_edge_y_[static_cast<std::size_t>(s)].data() + ix * modes_;
        for (int m = 0; m < modes_; ++m)
          for (int k = 0; k < kComponents; ++k) out[m * kComponents + k] += c * phi[m] * f[k];
      }
    }
    for (int m = 0; m < modes_; ++m) {
      const double inv_mass = 1.0 / Basis2d::mass_factor(m);
      for (int k = 0; k < kComponents; ++k) out[m * kComponents + k] *= inv_mass;
    }
  }

  EosModel eos_;
  Mesh2d mesh_;
  Boundaries<2> bc_;
  SchemeOptions options_;
  Basis2d basis_;
  QuadratureSet quad_;
  PointTable control_;
  int modes_ = 0;
  int stride_ = 0;
  int q_ = 0;
  int line_ = 0;
  int npts_ = 0;
  std::vector<double> xi_;
  std::vector<double> w_;
  std::vector<double> phi_;
  std::vector<double> dphi_x_;
  std::vector<double> dphi_y_;
  std::vector<double> phi_xline_;
  std::vector<double> phi_yline_;
  std::array<std::vector<double>, 2> phi_edge_x_;
  std::array<std::vector<double>, 2> phi_edge_y_;
  int ext_nx_ = 0;
  int ext_ny_ = 0;
  std::vector<double> ext_;
  PointData primal_pts_;
  PointData dual_pts_;
};

}  // namespace rcdg
