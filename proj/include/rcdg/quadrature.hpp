#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rcdg/errors.hpp"

namespace rcdg {

/// Rule on [0, 1]; weights sum to one.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule mapped to [0, 1].
inline QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre needs n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto k = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[k] = 0.5 * (1.0 + x);
    rule.weights[k] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

/// Gauss rule (Q = K + 1 points) and Gauss-Lobatto rule
/// (L = ceil((K + 3) / 2) points) used on each half cell for degree K.
struct QuadratureSet {
  int degree = 2;
  QuadratureRule gauss;
  QuadratureRule lobatto;

  int q() const { return gauss.size(); }
  int l() const { return lobatto.size(); }

  /// First Gauss-Lobatto weight; enters the time step restriction.
  double lobatto_first_weight() const { return lobatto.weights.front(); }

  /// Reference coordinate xi in [-1/2, 1/2] of node a in half `half` (0 left, 1 right).
  double gauss_xi(int half, int a) const { return 0.5 * (half - 1) + 0.5 * gauss.nodes[static_cast<std::size_t>(a)]; }
  double lobatto_xi(int half, int a) const {
    return 0.5 * (half - 1) + 0.5 * lobatto.nodes[static_cast<std::size_t>(a)];
  }
};

inline QuadratureSet build_quadrature(int degree) {
  QuadratureSet set;
  set.degree = degree;
  switch (degree) {
    case 0:
      // Both rules reduce to the midpoint rule.
      set.gauss = {{0.5}, {1.0}};
      set.lobatto = {{0.5}, {1.0}};
      break;
    case 1: {
      const double d = std::sqrt(3.0) / 6.0;
      set.gauss = {{0.5 - d, 0.5 + d}, {0.5, 0.5}};
      set.lobatto = {{0.0, 1.0}, {0.5, 0.5}};
      break;
    }
    case 2: {
      const double d = 0.5 * std::sqrt(0.6);
      set.gauss = {{0.5 - d, 0.5, 0.5 + d}, {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0}};
      set.lobatto = {{0.0, 0.5, 1.0}, {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0}};
      break;
    }
    default:
      throw DomainError("polynomial degree K must be 0, 1 or 2");
  }
  return set;
}

}  // namespace rcdg
