#pragma once

#include <array>
#include <vector>

#include "rcdg/errors.hpp"

namespace rcdg {

/// Orthogonal modal basis {1, xi, 12 xi^2 - 1} on the reference cell
/// xi = (x - x_c) / dx in [-1/2, 1/2].
struct Basis1d {
  int degree = 2;

  explicit Basis1d(int k = 2) : degree(k) {
    if (k < 0 || k > 2) throw DomainError("polynomial degree K must be 0, 1 or 2");
  }

  int size() const { return degree + 1; }

  static double value(int mode, double xi) {
    switch (mode) {
      case 0: return 1.0;
      case 1: return xi;
      default: return 12.0 * xi * xi - 1.0;
    }
  }
  /// d/dxi of mode.
  static double slope(int mode, double xi) {
    switch (mode) {
      case 0: return 0.0;
      case 1: return 1.0;
      default: return 24.0 * xi;
    }
  }
  /// Diagonal of the mass matrix divided by dx.
  static double mass_factor(int mode) {
    static constexpr std::array<double, 3> kMass{1.0, 1.0 / 12.0, 0.8};
    return kMass[static_cast<std::size_t>(mode)];
  }
  /// Parity under xi -> -xi (+1 even, -1 odd).
  static int parity(int mode) { return mode == 1 ? -1 : 1; }
};

/// Complete P^K basis on a rectangle:
/// {1, xi, eta, 12 xi^2 - 1, xi eta, 12 eta^2 - 1} truncated to degree K.
struct Basis2d {
  int degree = 2;

  explicit Basis2d(int k = 2) : degree(k) {
    if (k < 0 || k > 2) throw DomainError("polynomial degree K must be 0, 1 or 2");
  }

  int size() const { return (degree + 1) * (degree + 2) / 2; }

  static double value(int mode, double xi, double eta) {
    switch (mode) {
      case 0: return 1.0;
      case 1: return xi;
      case 2: return eta;
      case 3: return 12.0 * xi * xi - 1.0;
      case 4: return xi * eta;
      default: return 12.0 * eta * eta - 1.0;
    }
  }
  static double slope_xi(int mode, double xi, double eta) {
    switch (mode) {
      case 1: return 1.0;
      case 3: return 24.0 * xi;
      case 4: return eta;
      default: return 0.0;
    }
  }
  static double slope_eta(int mode, double xi, double eta) {
    switch (mode) {
      case 2: return 1.0;
      case 4: return xi;
      case 5: return 24.0 * eta;
      default: return 0.0;
    }
  }
  /// Diagonal of the mass matrix divided by dx dy.
  static double mass_factor(int mode) {
    static constexpr std::array<double, 6> kMass{1.0, 1.0 / 12.0, 1.0 / 12.0, 0.8, 1.0 / 144.0, 0.8};
    return kMass[static_cast<std::size_t>(mode)];
  }
  static int parity_xi(int mode) { return (mode == 1 || mode == 4) ? -1 : 1; }
  static int parity_eta(int mode) { return (mode == 2 || mode == 4) ? -1 : 1; }
};

/// Values of every basis function of a 1D cell at physical x.
inline std::vector<double> evaluate_basis(const Basis1d& basis, double center, double dx, double x) {
  std::vector<double> out(static_cast<std::size_t>(basis.size()));
  const double xi = (x - center) / dx;
  for (int m = 0; m < basis.size(); ++m) out[static_cast<std::size_t>(m)] = Basis1d::value(m, xi);
  return out;
}

inline std::vector<double> evaluate_basis(const Basis2d& basis, std::array<double, 2> center,
                                          std::array<double, 2> h, std::array<double, 2> x) {
  std::vector<double> out(static_cast<std::size_t>(basis.size()));
  const double xi = (x[0] - center[0]) / h[0];
  const double eta = (x[1] - center[1]) / h[1];
  for (int m = 0; m < basis.size(); ++m) out[static_cast<std::size_t>(m)] = Basis2d::value(m, xi, eta);
  return out;
}

}  // namespace rcdg
