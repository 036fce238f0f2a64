#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rcdg/errors.hpp"
#include "rcdg/scheme.hpp"
#include "rcdg/solution.hpp"

namespace rcdg {

enum class Integrator { kRk3, kMs3 };

inline Integrator parse_integrator(const std::string& s) {
  if (s == "rk3") return Integrator::kRk3;
  if (s == "ms3") return Integrator::kMs3;
  throw ConfigError("unknown integrator '" + s + "' (expected rk3 or ms3)");
}

inline std::string to_string(Integrator i) { return i == Integrator::kRk3 ? "rk3" : "ms3"; }

/// Largest theta = dt / tau_max covered by the positivity theorem.
inline double max_theta(Integrator i) { return i == Integrator::kRk3 ? 1.0 : 1.0 / 3.0; }

/// dt = varpi theta / (2 sum_i 1/dx_i).
inline double time_step(double varpi, double theta, double inv_h_sum) { return varpi * theta / (2.0 * inv_h_sum); }

/// Third-order SSP Runge-Kutta or SSP multistep stepping of a scheme that
/// provides residual(u, rate, out) and limit(u). The limiter runs after
/// every stage (Runge-Kutta) or every step (multistep).
template <class Scheme>
class TimeStepper {
 public:
  using Solution = typename Scheme::Solution;

  TimeStepper(Scheme& scheme, Integrator integrator, double theta)
      : scheme_(scheme), integrator_(integrator), theta_(theta) {}

  Integrator integrator() const { return integrator_; }
  double theta() const { return theta_; }

  /// Drops the multistep history; the next three steps use Runge-Kutta.
  void reset() { history_.clear(); }

  LimiterStats step(Solution& u, double dt) {
    if (dt != last_dt_) history_.clear();
    last_dt_ = dt;
    const double rate = theta_ / dt;
    Solution l0;
    scheme_.residual(u, rate, l0);
    LimiterStats stats;
    if (integrator_ == Integrator::kMs3) {
      history_.emplace_back(u, l0);
      if (history_.size() > 4) history_.pop_front();
      if (history_.size() == 4) {
        const auto& [u3, l3] = history_.front();
        linear_combination(u, {{16.0 / 27.0, &u}, {16.0 / 9.0 * dt, &l0}, {11.0 / 27.0, &u3}, {4.0 / 9.0 * dt, &l3}});
        stats.merge(scheme_.limit(u));
        return stats;
      }
    }
    Solution u1;
    linear_combination(u1, {{1.0, &u}, {dt, &l0}});
    stats.merge(scheme_.limit(u1));
    Solution l1;
    scheme_.residual(u1, rate, l1);
    linear_combination(u1, {{0.75, &u}, {0.25, &u1}, {0.25 * dt, &l1}});
    stats.merge(scheme_.limit(u1));
    scheme_.residual(u1, rate, l1);
    linear_combination(u, {{1.0 / 3.0, &u}, {2.0 / 3.0, &u1}, {2.0 / 3.0 * dt, &l1}});
    stats.merge(scheme_.limit(u));
    return stats;
  }

 private:
  Scheme& scheme_;
  Integrator integrator_;
  double theta_;
  double last_dt_ = -1.0;
  std::deque<std::pair<Solution, Solution>> history_;
};

struct RunSettings {
  Integrator integrator = Integrator::kMs3;
  double theta = 1.0 / 3.0;
  double varpi = 1.0 / 6.0;
  double t_final = 0.0;
  /// Extra times (inside (0, t_final)) where the observer sees a snapshot.
  std::vector<double> output_times;
  long max_steps = -1;
};

struct StepReport {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  bool output_time = false;
  LimiterStats stats;
};

struct RunResult {
  bool ok = true;
  std::string failure;
  long steps = 0;
  double t = 0.0;
  LimiterStats totals;
};

/// Advances u to settings.t_final. Each segment between output times uses a
/// uniform dt = segment / ceil(segment / dt_max), so the final time is hit
/// exactly without a short last step. The observer runs after every step
/// and may return false to stop early. Admissibility failures are returned
/// in the result, not thrown.
template <class Scheme, class Observer>
RunResult integrate(Scheme& scheme, typename Scheme::Solution& u, const RunSettings& settings, Observer&& observer) {
  TimeStepper<Scheme> stepper(scheme, settings.integrator, settings.theta);
  const double dt_max = time_step(settings.varpi, settings.theta, scheme.inverse_spacing_sum());
  std::vector<double> stops;
  for (double t : settings.output_times)
    if (t > 0.0 && t < settings.t_final) stops.push_back(t);
  stops.push_back(settings.t_final);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  RunResult result;
  double t0 = 0.0;
  try {
    for (double t1 : stops) {
      const double span = t1 - t0;
      if (span <= 0.0) continue;
      const long n = std::max(1L, static_cast<long>(std::ceil(span / dt_max - 1e-9)));
      const double dt = span / static_cast<double>(n);
      for (long i = 1; i <= n; ++i) {
        StepReport report;
        report.stats = stepper.step(u, dt);
        result.totals.merge(report.stats);
        ++result.steps;
        result.t = i == n ? t1 : t0 + static_cast<double>(i) * dt;
        report.step = result.steps;
        report.t = result.t;
        report.dt = dt;
        report.output_time = i == n;
        if (!observer(u, report)) return result;
        if (settings.max_steps > 0 && result.steps >= settings.max_steps) return result;
      }
      t0 = t1;
    }
  } catch (const InadmissibleState& e) {
    result.ok = false;
    result.failure = std::string("inadmissible state at step ") + std::to_string(result.steps + 1) + ": " + e.what();
  } catch (const PreconditionViolation& e) {
    result.ok = false;
    result.failure = std::string("limiter precondition failed at step ") + std::to_string(result.steps + 1) + ": " +
                     e.what();
  } catch (const ConvergenceFailure& e) {
    result.ok = false;
    result.failure = std::string("recovery failed at step ") + std::to_string(result.steps + 1) + ": " + e.what();
  }
  return result;
}

template <class Scheme>
RunResult integrate(Scheme& scheme, typename Scheme::Solution& u, const RunSettings& settings) {
  return integrate(scheme, u, settings, [](const auto&, const StepReport&) { return true; });
}

}  // namespace rcdg
