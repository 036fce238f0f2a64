#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rcdg/eos.hpp"
#include "rcdg/recovery.hpp"
#include "rcdg/state.hpp"

namespace rcdg {

/// Randomized checks of the admissible-state algebra. Every check reports a
/// normalized margin (value divided by the magnitude of the state involved);
/// a trial is a violation when its margin is below -slack.
struct PropertyResult {
  std::string name;
  long trials = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();

  void record(double margin, double slack) {
    ++trials;
    worst_margin = std::min(worst_margin, margin);
    if (margin < -slack) ++violations;
  }
  bool passed() const { return violations == 0; }
};

struct SamplingRange {
  double lo = 1e-8;
  double hi = 1e4;
  double max_speed = 1.0 - 1e-8;
};

class PrimitiveSampler {
 public:
  explicit PrimitiveSampler(std::uint64_t seed, SamplingRange range = {}) : rng_(seed), range_(range) {}

  double log_uniform() {
    std::uniform_real_distribution<double> u(std::log(range_.lo), std::log(range_.hi));
    return std::exp(u(rng_));
  }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  /// rho and p log-uniform, |v| uniform in [0, max_speed), direction uniform.
  Primitive<2> primitive2() {
    Primitive<2> w;
    w.rho = log_uniform();
    w.p = log_uniform();
    const double speed = uniform(0.0, range_.max_speed);
    const double angle = uniform(0.0, 2.0 * std::numbers::pi);
    w.v = {speed * std::cos(angle), speed * std::sin(angle)};
    return w;
  }

  Primitive<1> primitive1() {
    Primitive<1> w;
    w.rho = log_uniform();
    w.p = log_uniform();
    w.v[0] = uniform(-range_.max_speed, range_.max_speed);
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  SamplingRange range_;
};

struct PropertySuiteOptions {
  long trials = 100000;
  std::uint64_t seed = 20240611;
  double slack = 1e-12;
};

namespace detail {

template <int Dim>
double magnitude(const Conserved<Dim>& u) {
  return std::max({std::abs(u.D()), std::sqrt(u.momentum_sq()), std::abs(u.E())});
}

}  // namespace detail

/// Lemmas on the admissible set: necessity, concavity of q, convexity,
/// scaling, orthogonal invariance and Lax-Friedrichs splitting.
inline std::vector<PropertyResult> run_property_suite(const EosModel& eos, const PropertySuiteOptions& opt = {}) {
  PrimitiveSampler sampler(opt.seed);
  PropertyResult necessity{"necessity"};
  PropertyResult concavity{"concavity_of_q"};
  PropertyResult convexity{"convexity"};
  PropertyResult scaling{"scaling"};
  PropertyResult orthogonal{"orthogonal_invariance"};
  PropertyResult splitting{"lax_friedrichs_splitting"};

  for (long t = 0; t < opt.trials; ++t) {
    const Primitive<2> w0 = sampler.primitive2();
    const Primitive<2> w1 = sampler.primitive2();
    const Conserved<2> u0 = primitive_to_conserved(eos, w0);
    const Conserved<2> u1 = primitive_to_conserved(eos, w1);
    const double s0 = detail::magnitude(u0);
    const double s1 = detail::magnitude(u1);

    necessity.record(std::min(u0.D(), q_value(u0)) / s0, opt.slack);

    const double lambda = sampler.uniform(0.0, 1.0);
    const Conserved<2> mix = lambda * u1 + (1.0 - lambda) * u0;
    const double scale = lambda * s1 + (1.0 - lambda) * s0;
    concavity.record((q_value(mix) - lambda * q_value(u1) - (1.0 - lambda) * q_value(u0)) / scale, opt.slack);
    convexity.record(std::min(mix.D(), q_value(mix)) / scale, opt.slack);

    const double factor = std::exp(sampler.uniform(std::log(1e-6), std::log(1e6)));
    const Conserved<2> scaled = factor * u0;
    scaling.record(-std::abs(q_value(scaled) - factor * q_value(u0)) / (factor * s0), opt.slack);

    const double angle = sampler.uniform(0.0, 2.0 * std::numbers::pi);
    Conserved<2> rotated = u0;
    rotated.m(0) = std::cos(angle) * u0.m(0) - std::sin(angle) * u0.m(1);
    rotated.m(1) = std::sin(angle) * u0.m(0) + std::cos(angle) * u0.m(1);
    orthogonal.record(-std::abs(q_value(rotated) - q_value(u0)) / s0, opt.slack);

    const double alpha = 1.0 + std::exp(sampler.uniform(std::log(1e-6), std::log(1.0)));
    for (int axis = 0; axis < 2; ++axis) {
      const auto [plus, minus] = lax_friedrichs_split(eos, u0, axis, alpha);
      splitting.record(std::min({plus.D(), q_value(plus), minus.D(), q_value(minus)}) / s0, opt.slack);
    }
  }
  return {necessity, concavity, convexity, scaling, orthogonal, splitting};
}

/// Round trip primitive -> conserved -> primitive.
struct RoundTripReport {
  std::string eos_name;
  long samples = 0;
  long unrepresentable = 0;
  double max_relative_error = 0.0;
  double max_scaled_residual = 0.0;
  /// Largest error among samples whose pressure equation is well conditioned
  /// (E / q below 1e6).
  double max_relative_error_conditioned = 0.0;
  Primitive<1> worst{};
};

inline double relative_error(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// Componentwise relative error of rho, v and p. Samples whose conserved
/// state rounds out of the admissible set (q <= 0 in double precision) are
/// counted as unrepresentable rather than errors.
inline RoundTripReport run_round_trip(const EosModel& eos, long samples, std::uint64_t seed) {
  PrimitiveSampler sampler(seed);
  RoundTripReport rep;
  rep.eos_name = eos.name();
  for (long i = 0; i < samples; ++i) {
    const Primitive<1> w = sampler.primitive1();
    const Conserved<1> u = primitive_to_conserved(eos, w);
    ++rep.samples;
    if (!is_strictly_admissible(u)) {
      ++rep.unrepresentable;
      continue;
    }
    const PressureSolve solve = solve_pressure(eos, u);
    const Primitive<1> r = primitive_from_pressure(u, solve.p);
    const double err = std::max({relative_error(r.rho, w.rho), relative_error(r.p, w.p),
                                 w.v[0] == 0.0 ? std::abs(r.v[0]) : relative_error(r.v[0], w.v[0])});
    if (err > rep.max_relative_error) {
      rep.max_relative_error = err;
      rep.worst = w;
    }
    if (u.E() / q_value(u) < 1e6) rep.max_relative_error_conditioned = std::max(rep.max_relative_error_conditioned, err);
    rep.max_scaled_residual = std::max(rep.max_scaled_residual, solve.scaled_residual);
  }
  return rep;
}

}  // namespace rcdg
