#pragma once

#include "rcdg/central_dg1d.hpp"
#include "rcdg/central_dg2d.hpp"
#include "rcdg/problems.hpp"

namespace rcdg {

inline Mesh1d make_mesh_1d(const ProblemSpec& spec, int nx) {
  return Mesh1d(spec.domain[0], spec.domain[1], nx, spec.sides[0].kind == BoundaryKind::kPeriodic);
}

inline Mesh2d make_mesh_2d(const ProblemSpec& spec, int nx, int ny) {
  return Mesh2d{Mesh1d(spec.domain[0], spec.domain[1], nx, spec.sides[0].kind == BoundaryKind::kPeriodic),
                Mesh1d(spec.domain[2], spec.domain[3], ny, spec.sides[2].kind == BoundaryKind::kPeriodic)};
}

inline CentralDg1d make_scheme_1d(const ProblemSpec& spec, const EosModel& eos, int nx, const SchemeOptions& opts) {
  if (spec.dimension != 1) throw ConfigError("problem '" + spec.name + "' is two-dimensional");
  return CentralDg1d(eos, make_mesh_1d(spec, nx), make_boundaries<1>(spec, eos), opts);
}

inline CentralDg2d make_scheme_2d(const ProblemSpec& spec, const EosModel& eos, int nx, int ny,
                                  const SchemeOptions& opts) {
  if (spec.dimension != 2) throw ConfigError("problem '" + spec.name + "' is one-dimensional");
  return CentralDg2d(eos, make_mesh_2d(spec, nx, ny), make_boundaries<2>(spec, eos), opts);
}

/// PCP scaling of every cell, independent of the scheme's limiter options.
template <int Dim>
void scale_into_admissible_set(DgSolution<Dim>& u, const PointTable& table, double eps) {
  for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual})
    for (int c = 0; c < u.cells(kind); ++c) pcp_limit_cell<Dim>(u.cell(kind, c), table, eps);
}

/// Projects the initial data on both meshes. The projection of steep data
/// can leave the admissible set at control points, so it is always scaled
/// back; the scheme's own limiter options only govern time stepping.
inline DgSolution<1> initial_solution(const CentralDg1d& s, const ProblemSpec& spec) {
  DgSolution<1> u = s.make_solution();
  s.project(u, [&](double x) { return primitive_to_conserved(s.eos(), reduce<1>(spec.initial(s.eos(), x, 0.0))); });
  scale_into_admissible_set(u, s.control_table(), s.options().eps);
  return u;
}

inline DgSolution<2> initial_solution(const CentralDg2d& s, const ProblemSpec& spec) {
  DgSolution<2> u = s.make_solution();
  s.project(u, [&](double x, double y) { return primitive_to_conserved(s.eos(), spec.initial(s.eos(), x, y)); });
  scale_into_admissible_set(u, s.control_table(), s.options().eps);
  return u;
}

}  // namespace rcdg
