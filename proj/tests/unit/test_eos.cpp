#include <gtest/gtest.h>

#include <cmath>

#include "rcdg/eos.hpp"

using namespace rcdg;

namespace {

std::vector<EosModel> all_models() {
  return {EosModel::ideal(5.0 / 3.0), EosModel::ideal(4.0 / 3.0), EosModel::mathews(), EosModel::sokolov(),
          EosModel::ryu()};
}

// Central differences with step 1e-6 max(1, |x|).
EnthalpyPartials finite_difference(const EosModel& eos, double p, double rho) {
  const double hp = 1e-6 * std::max(1.0, p);
  const double hr = 1e-6 * std::max(1.0, rho);
  return {(eos.enthalpy(p + hp, rho) - eos.enthalpy(p - hp, rho)) / (2.0 * hp),
          (eos.enthalpy(p, rho + hr) - eos.enthalpy(p, rho - hr)) / (2.0 * hr)};
}

}  // namespace

TEST(Eos, EnthalpyAtUnitState) {
  EXPECT_DOUBLE_EQ(EosModel::ideal(5.0 / 3.0).enthalpy(1.0, 1.0), 3.5);
  EXPECT_DOUBLE_EQ(EosModel::ryu().enthalpy(1.0, 1.0), 4.4);
  EXPECT_NEAR(EosModel::sokolov().enthalpy(1.0, 1.0), 2.0 + std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(EosModel::mathews().enthalpy(1.0, 1.0), 2.5 + std::sqrt(3.25), 1e-15);
}

TEST(Eos, InternalEnergyAtUnitState) {
  EXPECT_NEAR(EosModel::ideal(5.0 / 3.0).internal_energy(1.0, 1.0), 1.5, 1e-15);
  EXPECT_NEAR(EosModel::ryu().internal_energy(1.0, 1.0), 2.4, 1e-15);
  for (const auto& eos : all_models()) {
    const double e = eos.internal_energy(1.0, 1.0);
    EXPECT_NEAR(e, eos.enthalpy(1.0, 1.0) - 2.0, 1e-14) << eos.name();
  }
}

TEST(Eos, InternalEnergyVanishesAtZeroPressure) {
  for (const auto& eos : all_models()) {
    double prev = eos.internal_energy(1.0, 1.0);
    for (int k = 1; k <= 16; ++k) {
      const double e = eos.internal_energy(std::pow(10.0, -k), 1.0);
      EXPECT_GT(e, 0.0) << eos.name();
      EXPECT_LT(e, prev) << eos.name();
      prev = e;
    }
    EXPECT_LT(prev, 1e-15) << eos.name();
    EXPECT_GT(eos.internal_energy(1e12, 1.0), 1e6) << eos.name();
  }
}

TEST(Eos, IdealPartialsAreClosedForm) {
  const auto d = EosModel::ideal(5.0 / 3.0).enthalpy_partials(1.0, 1.0);
  EXPECT_DOUBLE_EQ(d.dh_dp, 2.5);
  EXPECT_DOUBLE_EQ(d.dh_drho, -2.5);
}

TEST(Eos, PartialsMatchFiniteDifferences) {
  const std::vector<std::pair<double, double>> points{{1.0, 1.0}, {2.0, 3.0}, {1e-3, 0.5}, {50.0, 2.0}};
  for (const auto& eos : all_models()) {
    for (const auto& [p, rho] : points) {
      const auto exact = eos.enthalpy_partials(p, rho);
      const auto fd = finite_difference(eos, p, rho);
      EXPECT_NEAR(exact.dh_dp, fd.dh_dp, 1e-6 * std::abs(exact.dh_dp)) << eos.name() << " p=" << p;
      EXPECT_NEAR(exact.dh_drho, fd.dh_drho, 1e-6 * std::abs(exact.dh_drho)) << eos.name() << " p=" << p;
    }
  }
}

TEST(Eos, IdealSoundSpeedIdentity) {
  for (double g : {1.1, 4.0 / 3.0, 1.4, 5.0 / 3.0, 2.0}) {
    const EosModel eos = EosModel::ideal(g);
    for (double p : {1e-8, 1e-2, 1.0, 1e4}) {
      for (double rho : {1e-8, 1.0, 1e4}) {
        const double expected = g * p / (rho * eos.enthalpy(p, rho));
        EXPECT_NEAR(eos.sound_speed_sq(p, rho), expected, 1e-12 * expected) << g << ' ' << p << ' ' << rho;
      }
    }
  }
  EXPECT_NEAR(EosModel::ideal(5.0 / 3.0).sound_speed_sq(1.0, 1.0), (5.0 / 3.0) / 3.5, 1e-15);
}

TEST(Eos, SoundSpeedIsCausal) {
  for (const auto& eos : all_models()) {
    for (double p : {1e-8, 1.0, 1e4}) {
      const double c2 = eos.sound_speed_sq(p, 1.0);
      EXPECT_GT(c2, 0.0) << eos.name();
      EXPECT_LT(c2, 1.0) << eos.name();
    }
  }
}

TEST(Eos, DomainErrors) {
  const EosModel eos = EosModel::ryu();
  EXPECT_THROW(eos.enthalpy(0.0, 1.0), DomainError);
  EXPECT_THROW(eos.enthalpy(1.0, -1.0), DomainError);
  EXPECT_THROW(eos.internal_energy(-1.0, 1.0), DomainError);
  EXPECT_THROW(eos.enthalpy_partials(1.0, 0.0), DomainError);
  EXPECT_THROW(eos.sound_speed_sq(0.0, 1.0), DomainError);
}

TEST(Eos, GammaRangeIsChecked) {
  EXPECT_THROW(EosModel::ideal(1.0), DomainError);
  EXPECT_THROW(EosModel::ideal(2.5), DomainError);
  EXPECT_NO_THROW(EosModel::ideal(2.0));
  EXPECT_THROW(EosModel::parse("ideal:3.0"), DomainError);
  EXPECT_NO_THROW(EosModel::parse("ideal:3.0", true));
}

TEST(Eos, ParseNames) {
  EXPECT_EQ(EosModel::parse("mathews").kind(), EosKind::kMathews);
  EXPECT_EQ(EosModel::parse("sokolov").kind(), EosKind::kSokolov);
  EXPECT_EQ(EosModel::parse("ryu").kind(), EosKind::kRyu);
  EXPECT_NEAR(EosModel::parse("ideal:1.4").effective_gamma(), 1.4, 1e-15);
  EXPECT_THROW(EosModel::parse("tabulated"), ConfigError);
  EXPECT_THROW(EosModel::parse("ideal:abc"), ConfigError);
}

TEST(Eos, PressureFromInternalEnergyInverts) {
  for (const auto& eos : all_models()) {
    for (double p : {1e-9, 1e-4, 1.0, 1e3}) {
      const double e = eos.internal_energy(p, 2.0);
      EXPECT_NEAR(eos.pressure_from_internal_energy(e, 2.0), p, 1e-10 * p) << eos.name();
    }
  }
}

TEST(EosValidation, SupportedModelsPass) {
  for (const auto& eos : {EosModel::ideal(5.0 / 3.0), EosModel::mathews(), EosModel::sokolov(), EosModel::ryu()}) {
    const auto rep = validate_eos(eos);
    EXPECT_TRUE(rep.passed()) << rep.eos_name;
    EXPECT_EQ(rep.checks.size(), 4u);
  }
}

TEST(EosValidation, GammaThreeViolatesEnthalpyBound) {
  // h = 1 + 1.5 r drops below sqrt(1 + r^2) + r for large r.
  const double r = 10.0;
  const double margin = 1.0 + 1.5 * r - std::sqrt(1.0 + r * r) - r;
  ASSERT_LT(margin, 0.0);
  const auto rep = validate_eos(EosModel::ideal_unchecked(3.0));
  EXPECT_FALSE(rep.passed());
  bool bound_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "enthalpy_lower_bound") bound_failed = !c.passed;
  EXPECT_TRUE(bound_failed);
}
