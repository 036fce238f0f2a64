#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rcdg/errors.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

enum class MeshKind { kPrimal = 0, kDual = 1 };

/// Uniform primal cells I_j = (x_{j-1/2}, x_{j+1/2}) on [a, b].
///
/// Dual cell k is centered at a + k dx, so it straddles the primal
/// interface x_{k-1/2}. On a periodic domain there are n dual cells; on a
/// bounded one there are n + 1 and the two end cells stick out of the
/// domain by dx/2.
struct Mesh1d {
  double a = 0.0;
  double b = 1.0;
  int n = 1;
  bool periodic = false;

  Mesh1d() = default;
  Mesh1d(double lo, double hi, int cells, bool is_periodic) : a(lo), b(hi), n(cells), periodic(is_periodic) {
    if (!(hi > lo)) throw DomainError("mesh needs b > a");
    if (cells < 2) throw DomainError("mesh needs at least two cells");
  }

  double dx() const { return (b - a) / n; }
  int cells(MeshKind kind) const { return kind == MeshKind::kPrimal ? n : (periodic ? n : n + 1); }
  double center(MeshKind kind, int c) const {
    return kind == MeshKind::kPrimal ? a + (c + 0.5) * dx() : a + c * dx();
  }
};

/// Tensor-product version of Mesh1d; flat cell index is i + j * (cells in x).
struct Mesh2d {
  Mesh1d x;
  Mesh1d y;

  Mesh2d() = default;
  Mesh2d(Mesh1d mx, Mesh1d my) : x(mx), y(my) {}

  int cells_x(MeshKind kind) const { return x.cells(kind); }
  int cells_y(MeshKind kind) const { return y.cells(kind); }
  int cells(MeshKind kind) const { return cells_x(kind) * cells_y(kind); }
  int index(MeshKind kind, int i, int j) const { return i + j * cells_x(kind); }
  std::array<double, 2> center(MeshKind kind, int i, int j) const {
    return {x.center(kind, i), y.center(kind, j)};
  }
};

enum class BoundaryKind { kPeriodic, kOutflow, kReflecting, kInflow };

inline std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::kPeriodic: return "periodic";
    case BoundaryKind::kOutflow: return "outflow";
    case BoundaryKind::kReflecting: return "reflecting";
    case BoundaryKind::kInflow: return "inflow";
  }
  return "unknown";
}

/// Condition on one side of the domain. An inflow side prescribes
/// `inflow_state` where the tangential coordinate lies in
/// [inflow_lo, inflow_hi] and behaves as outflow elsewhere.
template <int Dim>
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::kOutflow;
  Conserved<Dim> inflow_state{};
  double inflow_lo = -std::numeric_limits<double>::infinity();
  double inflow_hi = std::numeric_limits<double>::infinity();
};

/// Sides ordered x-low, x-high, then y-low, y-high in 2D.
template <int Dim>
struct Boundaries {
  std::array<BoundaryCondition<Dim>, 2 * Dim> side{};

  static Boundaries uniform(BoundaryKind kind) {
    Boundaries b;
    for (auto& s : b.side) s.kind = kind;
    return b;
  }

  bool periodic(int axis) const { return side[static_cast<std::size_t>(2 * axis)].kind == BoundaryKind::kPeriodic; }

  void validate() const {
    for (int axis = 0; axis < Dim; ++axis) {
      const bool lo = side[static_cast<std::size_t>(2 * axis)].kind == BoundaryKind::kPeriodic;
      const bool hi = side[static_cast<std::size_t>(2 * axis + 1)].kind == BoundaryKind::kPeriodic;
      if (lo != hi) throw ConfigError("periodic boundaries must be paired on both sides of an axis");
    }
  }
};

}  // namespace rcdg
