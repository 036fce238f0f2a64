#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

struct RecoveryOptions {
  double rel_tol = 1e-12;
  int max_iterations = 200;
};

struct PressureSolve {
  double p = 0.0;
  int iterations = 0;
  /// |Psi| / (E + p) at the last evaluated iterate.
  double scaled_residual = 0.0;
};

namespace detail {

struct PsiValue {
  double psi;
  double dpsi;
};

inline PsiValue psi_and_slope(const EosModel& eos, double D, double mabs, double E, double p) {
  const double S = E + p;
  const double inv = 1.0 / S;
  const double s2 = (S - mabs) * (S + mabs) * inv * inv;
  const double s = std::sqrt(s2);
  const double rho = D * s;
  const double r = p / rho;
  double h = 0.0;
  double slope = 0.0;
  eos.reduced_enthalpy_and_slope(r, h, slope);
  const double h_p = slope / rho;
  const double h_rho = -slope * r / rho;
  const double mm = mabs * mabs;
  const double c = D * mm * inv * inv * inv;
  return {D * h * s - S * s2, D * (h_p * s + c * h_rho) + c * h / s - mm * inv * inv - 1.0};
}

}  // namespace detail

/// Psi(p) whose unique positive root is the pressure of U.
template <int Dim>
double pressure_function(const EosModel& eos, const Conserved<Dim>& u, double p) {
  return detail::psi_and_slope(eos, u.D(), std::sqrt(u.momentum_sq()), u.E(), p).psi;
}

/// Safeguarded Newton iteration for Psi(p) = 0 on (0, inf).
///
/// Psi(0) < 0 for any U in G, so 0 is a lower bracket from the start; the
/// upper bracket is the first iterate with Psi > 0, found by quadrupling
/// when Newton would leave the bracket. `hint` seeds the iteration (for
/// example the pressure of a nearby state); without one the ideal-gas
/// estimate (gamma - 1)(E - D) is used.
template <int Dim>
PressureSolve solve_pressure(const EosModel& eos, const Conserved<Dim>& u, double hint = 0.0,
                             const RecoveryOptions& options = {}) {
  const double D = u.D();
  const double E = u.E();
  const double mabs = std::sqrt(u.momentum_sq());
  if (!(D > 0.0) || !(E - std::sqrt(D * D + mabs * mabs) > 0.0) || !std::isfinite(E)) {
    throw InadmissibleState("pressure recovery on inadmissible state " + describe(u));
  }
  double p = hint > 0.0 ? hint : (eos.effective_gamma() - 1.0) * (E - D);
  if (!(p > 0.0)) p = std::numeric_limits<double>::min();
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  constexpr double kRoundoff = 8.0 * std::numeric_limits<double>::epsilon();
  for (int it = 1; it <= options.max_iterations; ++it) {
    const auto [psi, dpsi] = detail::psi_and_slope(eos, D, mabs, E, p);
    const double scale = E + p;
    if (std::abs(psi) <= kRoundoff * scale) return {p, it, std::abs(psi) / scale};
    (psi < 0.0 ? lo : hi) = p;
    double next = p - psi / dpsi;
    if (!(dpsi > 0.0) || !(next > lo) || !(next < hi)) {
      next = std::isinf(hi) ? 4.0 * p : 0.5 * (lo + hi);
    }
    if (std::abs(next - p) <= options.rel_tol * next) return {next, it, std::abs(psi) / scale};
    p = next;
  }
  throw ConvergenceFailure("pressure recovery did not converge for " + describe(u));
}

template <int Dim>
double recover_pressure(const EosModel& eos, const Conserved<Dim>& u, double hint = 0.0) {
  return solve_pressure(eos, u, hint).p;
}

/// Primitive state from a recovered pressure.
template <int Dim>
Primitive<Dim> primitive_from_pressure(const Conserved<Dim>& u, double p) {
  const double S = u.E() + p;
  const double mabs = std::sqrt(u.momentum_sq());
  Primitive<Dim> w;
  w.p = p;
  for (int i = 0; i < Dim; ++i) w.v[static_cast<std::size_t>(i)] = u.m(i) / S;
  w.rho = u.D() * std::sqrt((S - mabs) * (S + mabs)) / S;
  return w;
}

template <int Dim>
Primitive<Dim> conserved_to_primitive(const EosModel& eos, const Conserved<Dim>& u, double hint = 0.0) {
  return primitive_from_pressure(u, recover_pressure(eos, u, hint));
}

template <int Dim>
Conserved<Dim> flux(const EosModel& eos, const Conserved<Dim>& u, int axis) {
  return flux_from_primitive(u, conserved_to_primitive(eos, u), axis);
}

/// U +/- F_axis(U) / alpha; both halves lie in G for alpha >= 1 (closure of G at alpha = 1).
template <int Dim>
std::pair<Conserved<Dim>, Conserved<Dim>> lax_friedrichs_split(const EosModel& eos, const Conserved<Dim>& u,
                                                               int axis, double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("Lax-Friedrichs splitting needs alpha >= 1");
  const Conserved<Dim> f = flux(eos, u, axis) * (1.0 / alpha);
  return {u + f, u - f};
}

}  // namespace rcdg
