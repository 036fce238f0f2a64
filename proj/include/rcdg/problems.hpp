#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/mesh.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

/// Primitive state in 2D form; 1D problems leave v[1] = 0.
using PrimitiveField = std::function<Primitive<2>(const EosModel&, double x, double y)>;

struct SideSpec {
  BoundaryKind kind = BoundaryKind::kOutflow;
  /// Inflow state (inflow sides only).
  std::function<Primitive<2>(const EosModel&)> inflow;
  double inflow_lo = -std::numeric_limits<double>::infinity();
  double inflow_hi = std::numeric_limits<double>::infinity();
};

struct ProblemSpec {
  std::string name;
  std::string summary;
  int dimension = 1;
  /// x-range then y-range.
  std::array<double, 4> domain{0.0, 1.0, 0.0, 1.0};
  std::array<SideSpec, 4> sides{};
  std::string default_eos = "ideal:1.6666666666666667";
  std::vector<std::string> eos_options;
  double t_final = 0.0;
  int default_nx = 100;
  int default_ny = 1;
  PrimitiveField initial;
  /// Exact solution (smooth problems and shock heating only).
  std::function<Primitive<2>(const EosModel&, double t, double x, double y)> exact;
  bool smooth = false;
  bool oscillation_limiter = false;
  double varpi = 1.0 / 6.0;
  bool long_running = false;
};

namespace detail {

inline Primitive<2> prim(double rho, double vx, double vy, double p) {
  Primitive<2> w;
  w.rho = rho;
  w.v = {vx, vy};
  w.p = p;
  return w;
}

inline std::array<SideSpec, 4> all_sides(BoundaryKind kind) {
  std::array<SideSpec, 4> s{};
  for (auto& side : s) side.kind = kind;
  return s;
}

}  // namespace detail

/// Beam pressure p with v_b / M_b equal to the beam sound speed at density rho_b.
inline double jet_pressure(const EosModel& eos, double rho_b, double v_b, double mach) {
  const double c2 = (v_b / mach) * (v_b / mach);
  double lo = 1e-14 * rho_b;
  double hi = rho_b;
  while (eos.sound_speed_sq(hi, rho_b) < c2) {
    hi *= 2.0;
    if (hi > 1e12 * rho_b) throw DomainError("beam Mach number not reachable for this EOS");
  }
  if (eos.sound_speed_sq(lo, rho_b) > c2) throw DomainError("beam Mach number too large for this EOS");
  // c_s^2 is increasing in p / rho for every supported closure.
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eos.sound_speed_sq(mid, rho_b) < c2 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct JetParameters {
  bool hot = true;
  double rho_b = 0.01;
  double v_b = 0.99;
  double mach = 1.72;
  double t_final = 30.0;
};

/// Relativistic Mach number M_b W_b / W_s of a jet.
inline double relativistic_mach(const EosModel& eos, const JetParameters& jet) {
  const double p = jet_pressure(eos, jet.rho_b, jet.v_b, jet.mach);
  const double c2 = eos.sound_speed_sq(p, jet.rho_b);
  const double wb = 1.0 / std::sqrt(1.0 - jet.v_b * jet.v_b);
  const double ws = 1.0 / std::sqrt(1.0 - c2);
  return jet.mach * wb / ws;
}

/// Shock-heating constants: Lorentz factor of the inflow, compression
/// ratio sigma = 4 W0 + 3 and speed of the reflected shock.
struct ShockHeating {
  static constexpr double kRho0 = 1.0;
  static constexpr double kV0 = 1.0 - 1e-8;
  static constexpr double kE0 = 1e-4;
  static double w0() { return 1.0 / std::sqrt(1.0 - kV0 * kV0); }
  static double sigma() { return 4.0 * w0() + 3.0; }
  /// From mass balance across the shock: W0 v0 = (sigma - W0) V_s.
  static double shock_speed() { return w0() * kV0 / (sigma() - w0()); }
};

inline std::vector<ProblemSpec> catalog() {
  using detail::prim;
  std::vector<ProblemSpec> out;
  const double two_pi = 2.0 * std::numbers::pi;

  {
    ProblemSpec s;
    s.name = "sine1d";
    s.summary = "smooth sine wave, rho = 1 + 0.99999 sin(2 pi x), v = 0.99, p = 0.01, periodic";
    s.sides = detail::all_sides(BoundaryKind::kPeriodic);
    s.eos_options = {"ideal:1.6666666666666667", "mathews", "sokolov", "ryu"};
    s.t_final = 0.2;
    s.default_nx = 80;
    s.smooth = true;
    s.initial = [two_pi](const EosModel&, double x, double) {
      return prim(1.0 + 0.99999 * std::sin(two_pi * x), 0.99, 0.0, 1e-2);
    };
    s.exact = [two_pi](const EosModel&, double t, double x, double) {
      return prim(1.0 + 0.99999 * std::sin(two_pi * (x - 0.99 * t)), 0.99, 0.0, 1e-2);
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "riemann1d";
    s.summary = "Riemann problem (1, 0, 1e4) | (1, 0, 1e-8) at x = 0.5";
    s.eos_options = {"ideal:1.6666666666666667", "sokolov"};
    s.t_final = 0.45;
    s.default_nx = 640;
    s.initial = [](const EosModel&, double x, double) {
      return x < 0.5 ? prim(1.0, 0.0, 0.0, 1e4) : prim(1.0, 0.0, 0.0, 1e-8);
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "shock-heating";
    s.summary = "cold gas (rho = 1, v = 1 - 1e-8, e = 1e-4) hitting a reflecting wall at x = 1";
    s.sides[1].kind = BoundaryKind::kReflecting;
    s.default_eos = "ideal:1.3333333333333333";
    s.eos_options = {"ideal:1.3333333333333333", "ryu"};
    s.t_final = 2.0;
    s.default_nx = 200;
    s.initial = [](const EosModel& eos, double, double) {
      const double p = eos.pressure_from_internal_energy(ShockHeating::kE0, ShockHeating::kRho0);
      return prim(ShockHeating::kRho0, ShockHeating::kV0, 0.0, p);
    };
    s.exact = [](const EosModel& eos, double t, double x, double) {
      if (x < 1.0 - ShockHeating::shock_speed() * t) {
        const double p = eos.pressure_from_internal_energy(ShockHeating::kE0, ShockHeating::kRho0);
        return prim(ShockHeating::kRho0, ShockHeating::kV0, 0.0, p);
      }
      const double rho = ShockHeating::sigma();
      return prim(rho, 0.0, 0.0, eos.pressure_from_internal_energy(ShockHeating::w0() - 1.0, rho));
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "blast-wave";
    s.summary = "interacting blast waves, p = 1000 | 0.01 | 100 with breaks at 0.1 and 0.9";
    s.default_eos = "ideal:1.4";
    s.eos_options = {"ideal:1.4", "mathews"};
    s.t_final = 0.43;
    s.default_nx = 4000;
    s.initial = [](const EosModel&, double x, double) {
      const double p = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
      return prim(1.0, 0.0, 0.0, p);
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "sine2d";
    s.summary = "smooth sine wave along the diagonal, periodic unit square";
    s.dimension = 2;
    s.sides = detail::all_sides(BoundaryKind::kPeriodic);
    s.eos_options = {"ideal:1.6666666666666667", "mathews", "sokolov", "ryu"};
    s.t_final = 0.2;
    s.default_nx = 40;
    s.default_ny = 40;
    s.smooth = true;
    const double vc = 0.99 / std::sqrt(2.0);
    s.initial = [two_pi, vc](const EosModel&, double x, double y) {
      return prim(1.0 + 0.99999 * std::sin(two_pi * (x + y)), vc, vc, 1e-2);
    };
    s.exact = [two_pi, vc](const EosModel&, double t, double x, double y) {
      return prim(1.0 + 0.99999 * std::sin(two_pi * (x + y - 2.0 * vc * t)), vc, vc, 1e-2);
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "riemann2d-1";
    s.summary = "2D Riemann problem with two contacts and two shocks on [-1,1]^2";
    s.dimension = 2;
    s.domain = {-1.0, 1.0, -1.0, 1.0};
    s.eos_options = {"ideal:1.6666666666666667", "sokolov"};
    s.t_final = 0.8;
    s.default_nx = 400;
    s.default_ny = 400;
    s.oscillation_limiter = true;
    s.varpi = 1.0;
    s.initial = [](const EosModel&, double x, double y) {
      if (x > 0.0 && y > 0.0) return prim(0.1, 0.0, 0.0, 0.01);
      if (x < 0.0 && y > 0.0) return prim(0.1, 0.99, 0.0, 1.0);
      if (x < 0.0 && y < 0.0) return prim(0.5, 0.0, 0.0, 1.0);
      return prim(0.1, 0.0, 0.99, 1.0);
    };
    out.push_back(s);
  }
  {
    ProblemSpec s;
    s.name = "riemann2d-2";
    s.summary = "2D Riemann problem with two contacts and two rarefactions on [0,1]^2";
    s.dimension = 2;
    s.domain = {0.0, 1.0, 0.0, 1.0};
    s.eos_options = {"ideal:1.6666666666666667", "mathews"};
    s.t_final = 0.8;
    s.default_nx = 400;
    s.default_ny = 400;
    s.oscillation_limiter = true;
    s.varpi = 1.0;
    s.initial = [](const EosModel&, double x, double y) {
      constexpr double rho_side = 0.00414329639576;
      constexpr double v_side = 0.9946418833556542;
      if (x > 0.5 && y > 0.5) return prim(0.1, 0.0, 0.0, 20.0);
      if (x < 0.5 && y > 0.5) return prim(rho_side, v_side, 0.0, 0.05);
      if (x < 0.5 && y < 0.5) return prim(0.01, 0.0, 0.0, 0.05);
      return prim(rho_side, 0.0, v_side, 0.05);
    };
    out.push_back(s);
  }

  const std::array<JetParameters, 6> jets{{
      {true, 0.01, 0.99, 1.72, 30.0},
      {true, 0.01, 0.999, 1.74, 30.0},
      {true, 0.01, 0.9999, 1.74, 30.0},
      {false, 0.1, 0.99, 50.0, 30.0},
      {false, 0.1, 0.999, 50.0, 25.0},
      {false, 0.1, 0.9999, 500.0, 23.0},
  }};
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const JetParameters jet = jets[i];
    ProblemSpec s;
    s.name = std::string(jet.hot ? "jet-hot-" : "jet-cold-") + std::to_string(i % 3 + 1);
    s.summary = std::string(jet.hot ? "pressure-matched hot jet" : "pressure-matched cold jet") +
                ", v_b = " + std::to_string(jet.v_b) + ", M_b = " + std::to_string(jet.mach) +
                "; ambient pressure from M_b = v_b / c_s";
    s.dimension = 2;
    s.domain = {0.0, 12.0, 0.0, jet.hot ? 30.0 : 25.0};
    s.sides[0].kind = BoundaryKind::kReflecting;
    s.sides[2].kind = BoundaryKind::kInflow;
    s.sides[2].inflow_lo = -0.5;
    s.sides[2].inflow_hi = 0.5;
    s.sides[2].inflow = [jet](const EosModel& eos) {
      return prim(jet.rho_b, 0.0, jet.v_b, jet_pressure(eos, jet.rho_b, jet.v_b, jet.mach));
    };
    s.default_eos = jet.hot ? "ryu" : "ideal:1.6666666666666667";
    s.eos_options = {s.default_eos};
    s.t_final = jet.t_final;
    s.default_nx = 240;
    s.default_ny = jet.hot ? 600 : 500;
    s.oscillation_limiter = true;
    s.varpi = 1.0;
    s.long_running = true;
    s.initial = [jet](const EosModel& eos, double, double) {
      return prim(1.0, 0.0, 0.0, jet_pressure(eos, jet.rho_b, jet.v_b, jet.mach));
    };
    out.push_back(s);
  }
  return out;
}

inline ProblemSpec find_problem(const std::string& name) {
  for (auto& s : catalog())
    if (s.name == name) return s;
  throw ConfigError("unknown problem '" + name + "' (see `list`)");
}

inline Primitive<2> exact_solution(const ProblemSpec& spec, const EosModel& eos, double t, double x, double y = 0.0) {
  if (!spec.exact) throw ConfigError("problem '" + spec.name + "' has no exact solution");
  return spec.exact(eos, t, x, y);
}

template <int Dim>
Primitive<Dim> reduce(const Primitive<2>& w) {
  Primitive<Dim> r;
  r.rho = w.rho;
  r.p = w.p;
  for (int i = 0; i < Dim; ++i) r.v[static_cast<std::size_t>(i)] = w.v[static_cast<std::size_t>(i)];
  return r;
}

template <int Dim>
Boundaries<Dim> make_boundaries(const ProblemSpec& spec, const EosModel& eos) {
  Boundaries<Dim> b;
  for (int i = 0; i < 2 * Dim; ++i) {
    const SideSpec& side = spec.sides[static_cast<std::size_t>(i)];
    auto& out = b.side[static_cast<std::size_t>(i)];
    out.kind = side.kind;
    out.inflow_lo = side.inflow_lo;
    out.inflow_hi = side.inflow_hi;
    if (side.kind == BoundaryKind::kInflow) {
      out.inflow_state = primitive_to_conserved(eos, reduce<Dim>(side.inflow(eos)));
    }
  }
  return b;
}

}  // namespace rcdg
