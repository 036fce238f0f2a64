#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "rcdg/errors.hpp"

namespace rcdg {

enum class EosKind { kIdeal, kMathews, kSokolov, kRyu };

struct EnthalpyPartials {
  double dh_dp;
  double dh_drho;
};

/// Equation of state giving the specific enthalpy h(p, rho).
///
/// Every supported closure depends on p and rho only through r = p / rho,
/// so the model stores H(r) and derives the partials from H'(r).
class EosModel {
 public:
  /// Ideal gas, gamma in (1, 2].
  static EosModel ideal(double gamma) {
    if (!(gamma > 1.0 && gamma <= 2.0)) {
      throw DomainError("ideal EOS requires gamma in (1, 2], got " + std::to_string(gamma));
    }
    return EosModel(EosKind::kIdeal, gamma);
  }

  /// Ideal gas with only gamma > 1 enforced. Used by the EOS validator to
  /// report on closures that fall outside the supported range.
  static EosModel ideal_unchecked(double gamma) {
    if (!(gamma > 1.0) || !std::isfinite(gamma)) {
      throw DomainError("ideal EOS requires gamma > 1, got " + std::to_string(gamma));
    }
    return EosModel(EosKind::kIdeal, gamma);
  }

  static EosModel mathews() { return EosModel(EosKind::kMathews, 0.0); }
  static EosModel sokolov() { return EosModel(EosKind::kSokolov, 0.0); }
  static EosModel ryu() { return EosModel(EosKind::kRyu, 0.0); }

  /// Parses "ideal:<gamma>", "mathews", "sokolov" or "ryu".
  static EosModel parse(std::string_view text, bool allow_unsupported_gamma = false) {
    if (text == "mathews") return mathews();
    if (text == "sokolov") return sokolov();
    if (text == "ryu") return ryu();
    constexpr std::string_view prefix = "ideal:";
    if (text.substr(0, prefix.size()) == prefix) {
      std::string number(text.substr(prefix.size()));
      std::size_t used = 0;
      double gamma = 0.0;
      try {
        gamma = std::stod(number, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != number.size()) {
        throw ConfigError("cannot parse gamma in EOS string '" + std::string(text) + "'");
      }
      return allow_unsupported_gamma ? ideal_unchecked(gamma) : ideal(gamma);
    }
    throw ConfigError("unknown EOS '" + std::string(text) +
                      "' (expected ideal:<gamma>, mathews, sokolov or ryu)");
  }

  EosKind kind() const { return kind_; }
  double gamma() const { return gamma_; }

  std::string name() const {
    switch (kind_) {
      case EosKind::kIdeal: {
        std::string g = std::to_string(gamma_);
        while (g.size() > 1 && g.back() == '0') g.pop_back();
        if (g.back() == '.') g.pop_back();
        return "ideal:" + g;
      }
      case EosKind::kMathews: return "mathews";
      case EosKind::kSokolov: return "sokolov";
      case EosKind::kRyu: return "ryu";
    }
    return "unknown";
  }

  /// Adiabatic index used for cheap pressure guesses.
  double effective_gamma() const { return kind_ == EosKind::kIdeal ? gamma_ : 4.0 / 3.0; }

  /// H(r) with r = p / rho.
  double reduced_enthalpy(double r) const {
    switch (kind_) {
      case EosKind::kIdeal: return 1.0 + ratio_ * r;
      case EosKind::kMathews: return 2.5 * r + std::sqrt(2.25 * r * r + 1.0);
      case EosKind::kSokolov: return 2.0 * r + std::sqrt(4.0 * r * r + 1.0);
      case EosKind::kRyu: return 2.0 * (6.0 * r * r + 4.0 * r + 1.0) / (3.0 * r + 2.0);
    }
    return 0.0;
  }

  /// dH/dr.
  double reduced_enthalpy_slope(double r) const {
    switch (kind_) {
      case EosKind::kIdeal: return ratio_;
      case EosKind::kMathews: return 2.5 + 2.25 * r / std::sqrt(2.25 * r * r + 1.0);
      case EosKind::kSokolov: return 2.0 + 4.0 * r / std::sqrt(4.0 * r * r + 1.0);
      case EosKind::kRyu: {
        const double d = 3.0 * r + 2.0;
        return 2.0 * (18.0 * r * r + 24.0 * r + 5.0) / (d * d);
      }
    }
    return 0.0;
  }

  /// H(r) and H'(r) together (shares the square root).
  void reduced_enthalpy_and_slope(double r, double& h, double& slope) const {
    switch (kind_) {
      case EosKind::kIdeal:
        h = 1.0 + ratio_ * r;
        slope = ratio_;
        return;
      case EosKind::kMathews: {
        const double s = std::sqrt(2.25 * r * r + 1.0);
        h = 2.5 * r + s;
        slope = 2.5 + 2.25 * r / s;
        return;
      }
      case EosKind::kSokolov: {
        const double s = std::sqrt(4.0 * r * r + 1.0);
        h = 2.0 * r + s;
        slope = 2.0 + 4.0 * r / s;
        return;
      }
      case EosKind::kRyu: {
        const double d = 3.0 * r + 2.0;
        h = 2.0 * (6.0 * r * r + 4.0 * r + 1.0) / d;
        slope = 2.0 * (18.0 * r * r + 24.0 * r + 5.0) / (d * d);
        return;
      }
    }
  }

  /// e(r) = H(r) - 1 - r, written without cancellation for small r.
  double reduced_internal_energy(double r) const {
    switch (kind_) {
      case EosKind::kIdeal: return r / (gamma_ - 1.0);
      case EosKind::kMathews: {
        const double s = std::sqrt(2.25 * r * r + 1.0);
        return 1.5 * r + 2.25 * r * r / (s + 1.0);
      }
      case EosKind::kSokolov: {
        const double s = std::sqrt(4.0 * r * r + 1.0);
        return r + 4.0 * r * r / (s + 1.0);
      }
      case EosKind::kRyu: return 3.0 * r * (3.0 * r + 1.0) / (3.0 * r + 2.0);
    }
    return 0.0;
  }

  double enthalpy(double p, double rho) const {
    check_domain(p, rho);
    return reduced_enthalpy(p / rho);
  }

  double internal_energy(double p, double rho) const {
    check_domain(p, rho);
    return reduced_internal_energy(p / rho);
  }

  EnthalpyPartials enthalpy_partials(double p, double rho) const {
    check_domain(p, rho);
    const double r = p / rho;
    const double slope = reduced_enthalpy_slope(r);
    return {slope / rho, -slope * r / rho};
  }

  /// c_s^2 = h_rho / (h (1/rho - h_p)), without the range check.
  double sound_speed_sq_unchecked(double p, double rho) const {
    check_domain(p, rho);
    const double h = enthalpy(p, rho);
    const EnthalpyPartials d = enthalpy_partials(p, rho);
    return d.dh_drho / (h * (1.0 / rho - d.dh_dp));
  }

  /// Squared sound speed; throws if it is not in (0, 1).
  double sound_speed_sq(double p, double rho) const {
    const double c2 = sound_speed_sq_unchecked(p, rho);
    if (!(c2 > 0.0 && c2 < 1.0)) {
      throw std::logic_error("sound speed squared " + std::to_string(c2) + " outside (0,1) for " +
                             name());
    }
    return c2;
  }

  /// Pressure with internal energy e at density rho (inverts e(p, rho)).
  double pressure_from_internal_energy(double e, double rho) const {
    if (!(e > 0.0) || !(rho > 0.0)) throw DomainError("pressure_from_internal_energy needs e, rho > 0");
    if (kind_ == EosKind::kIdeal) return (gamma_ - 1.0) * rho * e;
    // e(r) is increasing with e(0) = 0; bisect on r then polish with Newton.
    double lo = 0.0;
    double hi = e;
    while (reduced_internal_energy(hi) < e) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (reduced_internal_energy(mid) < e ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi) * rho;
  }

  bool operator==(const EosModel& other) const {
    return kind_ == other.kind_ && gamma_ == other.gamma_;
  }

 private:
  EosModel(EosKind kind, double gamma)
      : kind_(kind), gamma_(gamma), ratio_(kind == EosKind::kIdeal ? gamma / (gamma - 1.0) : 0.0) {}

  static void check_domain(double p, double rho) {
    if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(p) || !std::isfinite(rho)) {
      throw DomainError("EOS evaluated outside p > 0, rho > 0 (p=" + std::to_string(p) +
                        ", rho=" + std::to_string(rho) + ")");
    }
  }

  EosKind kind_;
  double gamma_;
  double ratio_;
};

/// Outcome of one structural check in validate_eos.
struct EosCheck {
  std::string name;
  bool passed = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_p = 0.0;
  double worst_rho = 0.0;
};

struct EosValidationReport {
  std::string eos_name;
  std::vector<EosCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
  return out;
}

/// Checks the enthalpy lower bound, the sign conditions on the partials,
/// causality and the limits of e on a logarithmic (p, rho) grid.
inline EosValidationReport validate_eos(const EosModel& eos, const std::vector<double>& pressures,
                                        const std::vector<double>& densities,
                                        double tolerance = 1e-12) {
  EosCheck bound{"enthalpy_lower_bound"};
  EosCheck partials{"partials_sign"};
  EosCheck causality{"causality"};
  EosCheck limits{"internal_energy_limits"};

  auto record = [](EosCheck& check, double margin, double p, double rho, double tol) {
    if (margin < check.worst_margin) {
      check.worst_margin = margin;
      check.worst_p = p;
      check.worst_rho = rho;
    }
    if (!(margin >= -tol)) check.passed = false;
  };

  for (double rho : densities) {
    for (double p : pressures) {
      const double r = p / rho;
      const double h = eos.reduced_enthalpy(r);
      const double slope = eos.reduced_enthalpy_slope(r);
      const double e = eos.reduced_internal_energy(r);
      // h - r - sqrt(1 + r^2) = e - r^2 / (1 + sqrt(1 + r^2))
      const double m_bound = (e - r * r / (1.0 + std::sqrt(1.0 + r * r))) / h;
      record(bound, m_bound, p, rho, tolerance);
      // h (1/rho - h_p) < h_rho < 0, multiplied through by rho / h
      const double upper = slope * r / h;
      const double lower = (h * (slope - 1.0) - slope * r) / h;
      record(partials, std::min(upper, lower), p, rho, 0.0);
      if (!(upper > 0.0 && lower > 0.0)) partials.passed = false;
      const double c2 = eos.sound_speed_sq_unchecked(p, rho);
      const double m_c = std::min(c2, 1.0 - c2);
      record(causality, m_c, p, rho, 0.0);
      if (!(c2 > 0.0 && c2 < 1.0)) causality.passed = false;
    }
    // e -> 0 as p -> 0+ and e -> infinity as p -> infinity
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int k = 0; k <= 16; ++k) {
      const double p = rho * std::pow(10.0, -k);
      const double e = eos.internal_energy(p, rho);
      if (!(e < prev)) monotone = false;
      prev = e;
    }
    const double e_small = prev;
    const double e_large = eos.internal_energy(rho * 1e12, rho);
    const double margin = std::min(1e-12 - e_small, e_large - 1e6);
    if (margin < limits.worst_margin) {
      limits.worst_margin = margin;
      limits.worst_rho = rho;
    }
    if (!monotone || margin < 0.0) limits.passed = false;
  }
  return {eos.name(), {bound, partials, causality, limits}};
}

inline EosValidationReport validate_eos(const EosModel& eos) {
  const auto grid = log_grid(1e-8, 1e4, 25);
  return validate_eos(eos, grid, grid);
}

}  // namespace rcdg
