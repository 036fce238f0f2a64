#pragma once

#include <array>
#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rcdg/mesh.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

/// Modal coefficients on the primal and the dual mesh.
/// Layout per mesh: [cell][mode][component].
template <int Dim>
struct DgSolution {
  static constexpr int kComponents = Dim + 2;

  int modes = 0;
  std::array<std::vector<double>, 2> data;

  DgSolution() = default;
  DgSolution(int n_modes, int primal_cells, int dual_cells) : modes(n_modes) {
    data[0].assign(static_cast<std::size_t>(primal_cells * n_modes * kComponents), 0.0);
    data[1].assign(static_cast<std::size_t>(dual_cells * n_modes * kComponents), 0.0);
  }

  int stride() const { return modes * kComponents; }
  int cells(MeshKind kind) const { return static_cast<int>(mesh(kind).size()) / stride(); }

  std::vector<double>& mesh(MeshKind kind) { return data[static_cast<std::size_t>(kind)]; }
  const std::vector<double>& mesh(MeshKind kind) const { return data[static_cast<std::size_t>(kind)]; }

  double* cell(MeshKind kind, int c) { return mesh(kind).data() + static_cast<std::ptrdiff_t>(c) * stride(); }
  const double* cell(MeshKind kind, int c) const {
    return mesh(kind).data() + static_cast<std::ptrdiff_t>(c) * stride();
  }

  Conserved<Dim> mode_state(MeshKind kind, int c, int mode) const {
    Conserved<Dim> s;
    const double* p = cell(kind, c) + mode * kComponents;
    for (int k = 0; k < kComponents; ++k) s[k] = p[k];
    return s;
  }
  Conserved<Dim> average(MeshKind kind, int c) const { return mode_state(kind, c, 0); }

  /// Sum of cell averages of one component on one mesh.
  double total(MeshKind kind, int component) const {
    double s = 0.0;
    const auto& v = mesh(kind);
    for (std::size_t i = static_cast<std::size_t>(component); i < v.size(); i += static_cast<std::size_t>(stride()))
      s += v[i];
    return s;
  }
};

/// out = sum_i c_i x_i over both meshes. `out` may alias one of the inputs.
template <int Dim>
void linear_combination(DgSolution<Dim>& out, std::initializer_list<std::pair<double, const DgSolution<Dim>*>> terms) {
  assert(terms.size() > 0);
  const DgSolution<Dim>& first = *terms.begin()->second;
  if (&out != &first && out.mesh(MeshKind::kPrimal).size() != first.mesh(MeshKind::kPrimal).size()) out = first;
  out.modes = first.modes;
  for (int m = 0; m < 2; ++m) {
    auto& o = out.data[static_cast<std::size_t>(m)];
    o.resize(first.data[static_cast<std::size_t>(m)].size());
    const std::size_t n = o.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const auto& [c, x] : terms) s += c * x->data[static_cast<std::size_t>(m)][i];
      o[i] = s;
    }
  }
}

}  // namespace rcdg
