#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcdg/problems.hpp"
#include "rcdg/recovery.hpp"

namespace rcdg {

/// Cell-centred first-order solution.
struct ReferenceSolution {
  std::string problem;
  std::string eos;
  int n = 0;
  double t = 0.0;
  std::vector<double> x;
  std::vector<Primitive<1>> w;
};

/// First-order Lax-Friedrichs finite volume scheme with dt = lambda dx.
/// Each update is the average of the split states U -+ lambda F(U) of the
/// two neighbours, so it stays admissible for lambda <= 1.
inline ReferenceSolution reference_lxf(const ProblemSpec& spec, const EosModel& eos, int n, double lambda = 0.5,
                                       double t_final = -1.0) {
  if (spec.dimension != 1) throw ConfigError("reference solutions are one-dimensional only");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ConfigError("Lax-Friedrichs ratio must lie in (0, 1]");
  const double a = spec.domain[0];
  const double b = spec.domain[1];
  const double dx = (b - a) / n;
  const double tf = t_final >= 0.0 ? t_final : spec.t_final;
  using State = Conserved<1>;

  std::vector<State> u(static_cast<std::size_t>(n) + 2);
  std::vector<State> f(u.size());
  std::vector<double> p(u.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const double x = a + (j + 0.5) * dx;
    u[static_cast<std::size_t>(j) + 1] = primitive_to_conserved(eos, reduce<1>(spec.initial(eos, x, 0.0)));
  }
  State inflow[2];
  for (int s = 0; s < 2; ++s) {
    if (spec.sides[static_cast<std::size_t>(s)].kind == BoundaryKind::kInflow)
      inflow[s] = primitive_to_conserved(eos, reduce<1>(spec.sides[static_cast<std::size_t>(s)].inflow(eos)));
  }
  auto ghost = [&](int side) {
    const std::size_t dst = side == 0 ? 0 : static_cast<std::size_t>(n) + 1;
    const std::size_t inner = side == 0 ? 1 : static_cast<std::size_t>(n);
    switch (spec.sides[static_cast<std::size_t>(side)].kind) {
      case BoundaryKind::kPeriodic:
        u[dst] = u[side == 0 ? static_cast<std::size_t>(n) : 1];
        break;
      case BoundaryKind::kOutflow:
        u[dst] = u[inner];
        break;
      case BoundaryKind::kReflecting:
        u[dst] = u[inner];
        u[dst].m(0) = -u[dst].m(0);
        break;
      case BoundaryKind::kInflow:
        u[dst] = inflow[side];
        break;
    }
  };

  const long steps = std::max(1L, static_cast<long>(std::ceil(tf / (lambda * dx) - 1e-9)));
  const double dt = tf / static_cast<double>(steps);
  const double ratio = dt / dx;
  std::vector<State> next(u.size());
  for (long s = 0; s < steps; ++s) {
    ghost(0);
    ghost(1);
    for (std::size_t j = 0; j < u.size(); ++j) {
      p[j] = solve_pressure(eos, u[j], p[j]).p;
      f[j] = flux_from_primitive(u[j], primitive_from_pressure(u[j], p[j]), 0);
    }
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
      next[j] = 0.5 * (u[j - 1] + u[j + 1]) - (0.5 * ratio) * (f[j + 1] - f[j - 1]);
    }
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) u[j] = next[j];
  }

  ReferenceSolution ref;
  ref.problem = spec.name;
  ref.eos = eos.name();
  ref.n = n;
  ref.t = tf;
  for (int j = 0; j < n; ++j) {
    const auto idx = static_cast<std::size_t>(j) + 1;
    ref.x.push_back(a + (j + 0.5) * dx);
    ref.w.push_back(conserved_to_primitive(eos, u[idx], p[idx]));
  }
  return ref;
}

inline std::string reference_cache_name(const std::string& problem, const std::string& eos, int n) {
  std::string tag = eos;
  for (char& c : tag)
    if (c == ':') c = '_';
  return problem + "__" + tag + "__" + std::to_string(n) + ".csv";
}

inline void write_reference(const ReferenceSolution& ref, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write " + file.string());
  out.precision(17);
  out << "# problem=" << ref.problem << " eos=" << ref.eos << " n=" << ref.n << " t=" << ref.t << "\n";
  out << "x,rho,v,p\n";
  for (std::size_t i = 0; i < ref.x.size(); ++i)
    out << ref.x[i] << ',' << ref.w[i].rho << ',' << ref.w[i].v[0] << ',' << ref.w[i].p << '\n';
}

inline ReferenceSolution read_reference(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read " + file.string());
  ReferenceSolution ref;
  std::string line;
  std::getline(in, line);
  std::istringstream header(line.substr(line.find_first_not_of("# ")));
  std::string field;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "problem") ref.problem = value;
    if (key == "eos") ref.eos = value;
    if (key == "n") ref.n = std::stoi(value);
    if (key == "t") ref.t = std::stod(value);
  }
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[4];
    char comma;
    row >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
    Primitive<1> w;
    w.rho = v[1];
    w.v[0] = v[2];
    w.p = v[3];
    ref.x.push_back(v[0]);
    ref.w.push_back(w);
  }
  return ref;
}

/// Loads the cached reference for (problem, EOS, n) from `dir` or computes
/// and stores it.
inline ReferenceSolution cached_reference(const ProblemSpec& spec, const EosModel& eos, int n,
                                          const std::filesystem::path& dir) {
  const auto file = dir / reference_cache_name(spec.name, eos.name(), n);
  if (std::filesystem::exists(file)) return read_reference(file);
  ReferenceSolution ref = reference_lxf(spec, eos, n);
  std::filesystem::create_directories(dir);
  write_reference(ref, file);
  return ref;
}

}  // namespace rcdg
