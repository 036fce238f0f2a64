#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "rcdg/central_dg1d.hpp"
#include "rcdg/central_dg2d.hpp"
#include "rcdg/recovery.hpp"

namespace rcdg {

struct SnapshotOptions {
  /// All Gauss-Lobatto points of both half cells instead of cell centres.
  bool quad_points = false;
};

namespace detail {

inline std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<double> sample_offsets(const QuadratureSet& q, bool quad_points) {
  if (!quad_points) return {0.0};
  std::vector<double> xs;
  for (int h = 0; h < 2; ++h)
    for (int a = 0; a < q.l(); ++a) {
      const double xi = q.lobatto_xi(h, a);
      if (xs.empty() || xi != xs.back()) xs.push_back(xi);
    }
  return xs;
}

template <int Dim>
void write_row(std::ostream& out, const std::vector<double>& pos, const EosModel& eos, const Conserved<Dim>& u) {
  const Primitive<Dim> w = conserved_to_primitive(eos, u);
  for (double x : pos) out << g17(x) << ',';
  out << g17(w.rho);
  for (double v : w.v) out << ',' << g17(v);
  out << ',' << g17(w.p);
  for (double c : u.u) out << ',' << g17(c);
  out << '\n';
}

}  // namespace detail

inline void write_snapshot(const CentralDg1d& s, const DgSolution<1>& u, MeshKind kind, const std::filesystem::path& file,
                           const SnapshotOptions& opts = {}) {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write " + file.string());
  out << "x,rho,v,p,D,m,E\n";
  const auto xs = detail::sample_offsets(s.quadrature(), opts.quad_points);
  const double dx = s.mesh().dx();
  for (int c = 0; c < s.mesh().cells(kind); ++c)
    for (double xi : xs)
      detail::write_row<1>(out, {s.mesh().center(kind, c) + xi * dx}, s.eos(), s.evaluate(u, kind, c, xi));
}

inline void write_snapshot(const CentralDg2d& s, const DgSolution<2>& u, MeshKind kind, const std::filesystem::path& file,
                           const SnapshotOptions& opts = {}) {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write " + file.string());
  out << "x,y,rho,vx,vy,p,D,mx,my,E\n";
  const auto xs = detail::sample_offsets(s.quadrature(), opts.quad_points);
  const Mesh2d& mesh = s.mesh();
  for (int j = 0; j < mesh.cells_y(kind); ++j)
    for (double eta : xs)
      for (int i = 0; i < mesh.cells_x(kind); ++i)
        for (double xi : xs) {
          const auto c = mesh.center(kind, i, j);
          detail::write_row<2>(out, {c[0] + xi * mesh.x.dx(), c[1] + eta * mesh.y.dx()}, s.eos(),
                               s.evaluate(u, kind, mesh.index(kind, i, j), xi, eta));
        }
}

}  // namespace rcdg
