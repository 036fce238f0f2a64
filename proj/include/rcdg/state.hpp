#pragma once

#include <array>
#include <cmath>
#include <string>

#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"

namespace rcdg {

/// Conserved variables U = (D, m_1..m_Dim, E).
template <int Dim>
struct Conserved {
  static_assert(Dim == 1 || Dim == 2);
  static constexpr int kComponents = Dim + 2;

  std::array<double, kComponents> u{};

  double& D() { return u[0]; }
  double D() const { return u[0]; }
  double& m(int i) { return u[1 + i]; }
  double m(int i) const { return u[1 + i]; }
  double& E() { return u[Dim + 1]; }
  double E() const { return u[Dim + 1]; }

  double momentum_sq() const {
    double s = 0.0;
    for (int i = 0; i < Dim; ++i) s += u[1 + i] * u[1 + i];
    return s;
  }

  double& operator[](int c) { return u[c]; }
  double operator[](int c) const { return u[c]; }

  Conserved& operator+=(const Conserved& o) {
    for (int c = 0; c < kComponents; ++c) u[c] += o.u[c];
    return *this;
  }
  Conserved& operator-=(const Conserved& o) {
    for (int c = 0; c < kComponents; ++c) u[c] -= o.u[c];
    return *this;
  }
  Conserved& operator*=(double s) {
    for (int c = 0; c < kComponents; ++c) u[c] *= s;
    return *this;
  }
  friend Conserved operator+(Conserved a, const Conserved& b) { return a += b; }
  friend Conserved operator-(Conserved a, const Conserved& b) { return a -= b; }
  friend Conserved operator*(double s, Conserved a) { return a *= s; }
  friend Conserved operator*(Conserved a, double s) { return a *= s; }
};

/// Primitive variables (rho, v, p).
template <int Dim>
struct Primitive {
  double rho = 1.0;
  std::array<double, Dim> v{};
  double p = 1.0;

  double speed_sq() const {
    double s = 0.0;
    for (double vi : v) s += vi * vi;
    return s;
  }
  double lorentz() const { return 1.0 / std::sqrt(1.0 - speed_sq()); }
};

/// Admissibility threshold epsilon of G_eps.
struct AdmissibilityEps {
  double value = 1e-13;
  AdmissibilityEps() = default;
  explicit AdmissibilityEps(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("admissibility epsilon must be positive");
  }
};

/// q(U) = E - sqrt(D^2 + |m|^2); concave in U.
template <int Dim>
double q_value(const Conserved<Dim>& u) {
  return u.E() - std::sqrt(u.D() * u.D() + u.momentum_sq());
}

/// Membership in G_eps = {D >= eps, q >= eps}.
template <int Dim>
bool is_admissible(const Conserved<Dim>& u, double eps) {
  return u.D() >= eps && q_value(u) >= eps;
}

template <int Dim>
bool is_admissible(const Conserved<Dim>& u, AdmissibilityEps eps) {
  return is_admissible(u, eps.value);
}

/// Membership in the open set G = {D > 0, q > 0}.
template <int Dim>
bool is_strictly_admissible(const Conserved<Dim>& u) {
  return u.D() > 0.0 && q_value(u) > 0.0;
}

template <int Dim>
std::string describe(const Conserved<Dim>& u) {
  std::string s = "(D=" + std::to_string(u.D());
  for (int i = 0; i < Dim; ++i) s += ", m" + std::to_string(i + 1) + "=" + std::to_string(u.m(i));
  return s + ", E=" + std::to_string(u.E()) + ", q=" + std::to_string(q_value(u)) + ")";
}

template <int Dim>
Conserved<Dim> primitive_to_conserved(const EosModel& eos, const Primitive<Dim>& w) {
  const double v2 = w.speed_sq();
  if (!(w.rho > 0.0) || !(w.p > 0.0) || !(v2 < 1.0)) {
    throw DomainError("primitive state needs rho > 0, p > 0, |v| < 1");
  }
  const double W2 = 1.0 / (1.0 - v2);
  const double W = std::sqrt(W2);
  const double h = eos.enthalpy(w.p, w.rho);
  const double D = w.rho * W;
  Conserved<Dim> u;
  u.D() = D;
  for (int i = 0; i < Dim; ++i) u.m(i) = D * h * W * w.v[static_cast<std::size_t>(i)];
  u.E() = D * h * W - w.p;
  return u;
}

/// Physical flux along `axis` given the matching primitive state.
template <int Dim>
Conserved<Dim> flux_from_primitive(const Conserved<Dim>& u, const Primitive<Dim>& w, int axis) {
  const double vi = w.v[static_cast<std::size_t>(axis)];
  Conserved<Dim> f;
  f.D() = u.D() * vi;
  for (int k = 0; k < Dim; ++k) f.m(k) = vi * u.m(k);
  f.m(axis) += w.p;
  f.E() = u.m(axis);
  return f;
}

}  // namespace rcdg
