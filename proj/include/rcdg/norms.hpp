#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "rcdg/central_dg1d.hpp"
#include "rcdg/central_dg2d.hpp"
#include "rcdg/recovery.hpp"

namespace rcdg {

/// Visits every Gauss-Lobatto point of both half cells (quarters in 2D) on
/// both meshes with its quadrature weight (cell measure included).
template <class Visitor>
void for_each_lobatto_point(const CentralDg1d& s, const DgSolution<1>& u, Visitor&& visit) {
  const Mesh1d& mesh = s.mesh();
  const QuadratureSet& q = s.quadrature();
  const double dx = mesh.dx();
  for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
    for (int c = 0; c < mesh.cells(kind); ++c) {
      for (int h = 0; h < 2; ++h) {
        for (int a = 0; a < q.l(); ++a) {
          const double xi = q.lobatto_xi(h, a);
          const double w = 0.5 * dx * q.lobatto.weights[static_cast<std::size_t>(a)];
          visit(kind, std::array<double, 2>{mesh.center(kind, c) + xi * dx, 0.0}, w, s.evaluate(u, kind, c, xi));
        }
      }
    }
  }
}

template <class Visitor>
void for_each_lobatto_point(const CentralDg2d& s, const DgSolution<2>& u, Visitor&& visit) {
  const Mesh2d& mesh = s.mesh();
  const QuadratureSet& q = s.quadrature();
  const double dx = mesh.x.dx();
  const double dy = mesh.y.dx();
  const auto& wl = q.lobatto.weights;
  for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
    for (int j = 0; j < mesh.cells_y(kind); ++j) {
      for (int i = 0; i < mesh.cells_x(kind); ++i) {
        const auto centre = mesh.center(kind, i, j);
        const int cell = mesh.index(kind, i, j);
        for (int hy = 0; hy < 2; ++hy) {
          for (int b = 0; b < q.l(); ++b) {
            const double eta = q.lobatto_xi(hy, b);
            for (int hx = 0; hx < 2; ++hx) {
              for (int a = 0; a < q.l(); ++a) {
                const double xi = q.lobatto_xi(hx, a);
                const double w =
                    0.25 * dx * dy * wl[static_cast<std::size_t>(a)] * wl[static_cast<std::size_t>(b)];
                visit(kind, std::array<double, 2>{centre[0] + xi * dx, centre[1] + eta * dy}, w,
                      s.evaluate(u, kind, cell, xi, eta));
              }
            }
          }
        }
      }
    }
  }
}

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Density errors against rho_exact(x, y) using the Gauss-Lobatto sums over
/// both meshes, halved so that the result is comparable to a single mesh.
template <class Scheme, class Solution>
ErrorNorms density_error(const Scheme& s, const Solution& u, const std::function<double(double, double)>& rho_exact) {
  double l1 = 0.0;
  double l2 = 0.0;
  for_each_lobatto_point(s, u, [&](MeshKind, const std::array<double, 2>& x, double w, const auto& state) {
    const double err = conserved_to_primitive(s.eos(), state).rho - rho_exact(x[0], x[1]);
    l1 += w * std::abs(err);
    l2 += w * err * err;
  });
  return {0.5 * l1, std::sqrt(0.5 * l2)};
}

/// Sum over both meshes of the quadrature L1 norm of the full conserved
/// vector (componentwise absolute values).
template <class Scheme, class Solution>
double l1_stability_norm(const Scheme& s, const Solution& u) {
  double total = 0.0;
  for_each_lobatto_point(s, u, [&](MeshKind, const std::array<double, 2>&, double w, const auto& state) {
    double norm = 0.0;
    for (double v : state.u) norm += std::abs(v);
    total += w * norm;
  });
  return total;
}

/// Integral of one conserved component over the domain, summed over both meshes.
template <int Dim>
double both_mesh_total(const DgSolution<Dim>& u, int component, double cell_measure) {
  return cell_measure * (u.total(MeshKind::kPrimal, component) + u.total(MeshKind::kDual, component));
}

/// Observed order log2(e_coarse / e_fine) for a mesh refinement by two.
inline double convergence_order(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

}  // namespace rcdg
