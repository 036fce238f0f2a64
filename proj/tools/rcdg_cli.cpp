#include <CLI11.hpp>
#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "rcdg.hpp"

namespace {

using namespace rcdg;
namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitProperty = 4;

struct Flags {
  std::string config;
  std::vector<std::pair<std::string, std::string>> settings;
};

void add_setting(CLI::App* app, Flags& flags, const std::string& name, const std::string& help) {
  app->add_option_function<std::string>(
      "--" + name, [&flags, name](const std::string& v) { flags.settings.emplace_back(name, v); }, help);
}

void add_switch(CLI::App* app, Flags& flags, const std::string& name, const std::string& help) {
  app->add_flag_function(
      "--" + name, [&flags, name](std::int64_t) { flags.settings.emplace_back(name, "true"); }, help);
}

void add_run_options(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config, "key = value config file; flags override its entries");
  add_setting(app, flags, "problem", "problem name (see `list`)");
  add_setting(app, flags, "eos", "ideal:<gamma>, mathews, sokolov or ryu");
  add_setting(app, flags, "n", "cells along x");
  add_setting(app, flags, "ny", "cells along y (2D problems)");
  add_setting(app, flags, "k", "polynomial degree (0, 1 or 2)");
  add_setting(app, flags, "integrator", "rk3 or ms3");
  add_setting(app, flags, "theta", "dt / tau_max (default 1 for rk3, 1/3 for ms3)");
  add_setting(app, flags, "varpi", "time step factor in dt = varpi theta / (2 sum 1/dx)");
  add_setting(app, flags, "tvb-m", "enable the TVB minmod limiter with this constant");
  add_switch(app, flags, "no-tvb", "disable the TVB limiter even where the problem enables it");
  add_switch(app, flags, "no-pcp", "disable the PCP limiter during time stepping");
  add_setting(app, flags, "eps", "admissibility threshold");
  add_setting(app, flags, "t-final", "final time");
  add_setting(app, flags, "out", "output directory");
  add_setting(app, flags, "seed", "random seed");
  add_switch(app, flags, "unsafe", "allow parameters outside the proven ranges");
  add_setting(app, flags, "max-steps", "stop after this many steps");
}

RunConfig build_config(const Flags& flags) {
  RunConfig c;
  if (!flags.config.empty()) load_config_file(c, flags.config);
  for (const auto& [k, v] : flags.settings) apply_setting(c, k, v);
  return c;
}

std::string time_tag(double t) { return fmt::format("{:.6g}", t); }

void print_header(const ResolvedRun& r) {
  fmt::print("problem {}  eos {}  cells {}{}  K={}  {} theta={:.6g} varpi={:.6g}  pcp={} tvb={}\n", r.spec.name,
             r.eos.name(), r.nx, r.spec.dimension == 2 ? fmt::format("x{}", r.ny) : std::string(), r.scheme.degree,
             to_string(r.settings.integrator), r.settings.theta, r.settings.varpi, r.scheme.pcp ? "on" : "off",
             r.scheme.tvb ? fmt::format("on (M={:g})", r.scheme.tvb_m) : std::string("off"));
  for (const auto& w : r.warnings) fmt::print(stderr, "warning: {}\n", w);
}

template <class Scheme>
int run_scheme(Scheme& s, const ResolvedRun& r, const RunConfig& c) {
  auto u = initial_solution(s, r.spec);
  const fs::path dir = c.out;
  fs::create_directories(dir);
  SnapshotOptions so;
  so.quad_points = c.quad_points;
  auto dump = [&](const auto& sol, double t) {
    const fs::path base = dir / (r.spec.name + "_t" + time_tag(t));
    write_snapshot(s, sol, MeshKind::kPrimal, base.string() + ".csv", so);
    if (c.dual) write_snapshot(s, sol, MeshKind::kDual, base.string() + "_dual.csv", so);
  };
  dump(u, 0.0);
  const auto start = std::chrono::steady_clock::now();
  const RunResult res = integrate(s, u, r.settings, [&](const auto& sol, const StepReport& rep) {
    if (rep.output_time) dump(sol, rep.t);
    return true;
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  fmt::print("steps {}  t {:.6g}  wall {:.2f}s  limited cells {}  min theta {:.3g}\n", res.steps, res.t, secs,
             res.totals.pcp_cells, res.totals.min_theta);
  fmt::print("min cell-average D {:.6e}  q {:.6e}\n", res.totals.min_average_density, res.totals.min_average_q);
  fmt::print("min control-point D {:.6e}  q {:.6e}\n", res.totals.min_control_density, res.totals.min_control_q);
  if (!res.ok) {
    fmt::print(stderr, "solver failure: {}\n", res.failure);
    return kExitSolver;
  }
  fmt::print("snapshots written to {}\n", dir.string());
  return 0;
}

int cmd_run(const RunConfig& c) {
  ResolvedRun r = resolve(c);
  r.scheme.track_control_points = true;
  print_header(r);
  if (r.spec.dimension == 1) {
    auto s = make_scheme_1d(r.spec, r.eos, r.nx, r.scheme);
    return run_scheme(s, r, c);
  }
  auto s = make_scheme_2d(r.spec, r.eos, r.nx, r.ny, r.scheme);
  return run_scheme(s, r, c);
}

int cmd_converge(const RunConfig& c) {
  ResolvedRun r0 = resolve(c);
  if (!r0.spec.smooth || !r0.spec.exact) throw ConfigError("problem '" + r0.spec.name + "' has no smooth exact solution");
  std::vector<int> ns = c.ns;
  if (ns.empty()) ns = r0.spec.dimension == 1 ? std::vector<int>{10, 20, 40, 80, 160, 320} : std::vector<int>{10, 20, 40, 80};
  print_header(r0);
  const fs::path dir = c.out;
  fs::create_directories(dir);
  std::ofstream csv(dir / (r0.spec.name + "_convergence.csv"));
  csv << "n,l1,l1_order,l2,l2_order\n";
  fmt::print("{:>6} {:>12} {:>8} {:>12} {:>8}\n", "N", "l1 error", "order", "l2 error", "order");
  ErrorNorms prev{};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    RunConfig ci = c;
    ci.nx = ns[i];
    ci.ny = ns[i];
    ResolvedRun r = resolve(ci);
    ErrorNorms e;
    RunResult res;
    auto rho = [&](double x, double y) { return r.spec.exact(r.eos, r.settings.t_final, x, y).rho; };
    if (r.spec.dimension == 1) {
      auto s = make_scheme_1d(r.spec, r.eos, r.nx, r.scheme);
      auto u = initial_solution(s, r.spec);
      res = integrate(s, u, r.settings);
      if (res.ok) e = density_error(s, u, rho);
    } else {
      auto s = make_scheme_2d(r.spec, r.eos, r.nx, r.ny, r.scheme);
      auto u = initial_solution(s, r.spec);
      res = integrate(s, u, r.settings);
      if (res.ok) e = density_error(s, u, rho);
    }
    if (!res.ok) {
      fmt::print(stderr, "solver failure at N={}: {}\n", ns[i], res.failure);
      return kExitSolver;
    }
    const bool has_order = i > 0 && ns[i] == 2 * ns[i - 1];
    const std::string o1 = has_order ? fmt::format("{:.2f}", convergence_order(prev.l1, e.l1)) : "";
    const std::string o2 = has_order ? fmt::format("{:.2f}", convergence_order(prev.l2, e.l2)) : "";
    fmt::print("{:>6} {:>12.4e} {:>8} {:>12.4e} {:>8}\n", ns[i], e.l1, o1, e.l2, o2);
    csv << ns[i] << ',' << detail::g17(e.l1) << ',' << o1 << ',' << detail::g17(e.l2) << ',' << o2 << '\n';
    prev = e;
  }
  return 0;
}

int cmd_validate(const std::string& eos_text, long trials, std::uint64_t seed) {
  const EosModel eos = EosModel::parse(eos_text, true);
  bool ok = true;
  const EosValidationReport rep = validate_eos(eos);
  fmt::print("EOS {}\n", rep.eos_name);
  for (const auto& chk : rep.checks) {
    fmt::print("  {:<24} {}  worst margin {:.3e} at p={:.3g} rho={:.3g}\n", chk.name, chk.passed ? "pass" : "FAIL",
               chk.worst_margin, chk.worst_p, chk.worst_rho);
    ok = ok && chk.passed;
  }
  PropertySuiteOptions po;
  po.trials = trials;
  po.seed = seed;
  fmt::print("admissible-set properties ({} trials, seed {})\n", trials, seed);
  for (const auto& p : run_property_suite(eos, po)) {
    fmt::print("  {:<24} {}  violations {}/{}  worst margin {:.3e}\n", p.name, p.passed() ? "pass" : "FAIL",
               p.violations, p.trials, p.worst_margin);
    ok = ok && p.passed();
  }
  return ok ? 0 : kExitProperty;
}

int cmd_reference(const RunConfig& c) {
  ResolvedRun r = resolve(c);
  const int n = c.nx.value_or(10000);
  fmt::print("Lax-Friedrichs reference: problem {}  eos {}  cells {}  t {:.6g}\n", r.spec.name, r.eos.name(), n,
             r.settings.t_final);
  const fs::path dir = c.out;
  const fs::path file = dir / reference_cache_name(r.spec.name, r.eos.name(), n);
  if (fs::exists(file) && !c.t_final) {
    fmt::print("cached: {}\n", file.string());
    return 0;
  }
  fs::create_directories(dir);
  write_reference(reference_lxf(r.spec, r.eos, n, 0.5, r.settings.t_final), file);
  fmt::print("written: {}\n", file.string());
  return 0;
}

int cmd_list() {
  for (const auto& s : catalog()) {
    fmt::print("{:<14} {}D  N={}{}  t={:g}  eos: ", s.name, s.dimension, s.default_nx,
               s.dimension == 2 ? fmt::format("x{}", s.default_ny) : std::string(), s.t_final);
    for (std::size_t i = 0; i < s.eos_options.size(); ++i) fmt::print("{}{}", i ? ", " : "", s.eos_options[i]);
    fmt::print("{}\n    {}\n", s.long_running ? "  [long running]" : "", s.summary);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central DG solver for special relativistic hydrodynamics"};
  app.require_subcommand(1);

  Flags run_flags;
  Flags conv_flags;
  Flags ref_flags;
  auto* run = app.add_subcommand("run", "run a problem and write CSV snapshots");
  add_run_options(run, run_flags);
  add_setting(run, run_flags, "output-times", "comma-separated snapshot times");
  add_switch(run, run_flags, "quad-points", "write every Gauss-Lobatto point instead of cell centres");
  add_switch(run, run_flags, "dual", "also write the dual mesh");

  auto* conv = app.add_subcommand("converge", "error table against the exact solution");
  add_run_options(conv, conv_flags);
  add_setting(conv, conv_flags, "ns", "comma-separated cell counts");

  std::string eos_text = "ideal:1.6666666666666667";
  long trials = 100000;
  std::uint64_t seed = 20240611;
  auto* val = app.add_subcommand("validate", "EOS conditions and admissible-set property checks");
  val->add_option("eos", eos_text, "EOS to check");
  val->add_option("--trials", trials, "randomized trials per property");
  val->add_option("--seed", seed, "random seed");

  auto* ref = app.add_subcommand("reference", "first-order Lax-Friedrichs reference on a fine mesh (cached)");
  add_run_options(ref, ref_flags);

  app.add_subcommand("list", "list the problem catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(build_config(run_flags));
    if (*conv) return cmd_converge(build_config(conv_flags));
    if (*val) return cmd_validate(eos_text, trials, seed);
    if (*ref) return cmd_reference(build_config(ref_flags));
    return cmd_list();
  } catch (const ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfig;
  } catch (const DomainError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfig;
  } catch (const InadmissibleState& e) {
    fmt::print(stderr, "solver failure: {}\n", e.what());
    return kExitSolver;
  } catch (const ConvergenceFailure& e) {
    fmt::print(stderr, "solver failure: {}\n", e.what());
    return kExitSolver;
  }
}
