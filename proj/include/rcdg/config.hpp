#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/integrator.hpp"
#include "rcdg/problems.hpp"
#include "rcdg/scheme.hpp"

namespace rcdg {

/// Everything a run needs. Unset optionals fall back to the problem defaults.
struct RunConfig {
  std::string problem = "sine1d";
  std::optional<std::string> eos;
  std::optional<int> nx;
  std::optional<int> ny;
  int degree = 2;
  Integrator integrator = Integrator::kMs3;
  std::optional<double> theta;
  std::optional<double> varpi;
  std::optional<double> tvb_m;
  bool no_tvb = false;
  bool pcp = true;
  double eps = 1e-13;
  std::optional<double> t_final;
  std::vector<double> output_times;
  std::vector<int> ns;
  std::string out = "out";
  std::uint64_t seed = 20240611;
  bool unsafe = false;
  bool quad_points = false;
  bool dual = false;
  long max_steps = -1;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
}

inline long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  }
}

inline bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + v + "'");
}

template <class T, class Convert>
std::vector<T> to_list(const std::string& key, const std::string& v, Convert convert) {
  std::vector<T> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(static_cast<T>(convert(key, item)));
  }
  return out;
}

}  // namespace detail

/// Applies one `key = value` setting; keys are the long flag names.
inline void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  using namespace detail;
  if (key == "problem") c.problem = value;
  else if (key == "eos") c.eos = value;
  else if (key == "n") c.nx = static_cast<int>(to_long(key, value));
  else if (key == "ny") c.ny = static_cast<int>(to_long(key, value));
  else if (key == "k") c.degree = static_cast<int>(to_long(key, value));
  else if (key == "integrator") c.integrator = parse_integrator(value);
  else if (key == "theta") c.theta = to_double(key, value);
  else if (key == "varpi") c.varpi = to_double(key, value);
  else if (key == "tvb-m") c.tvb_m = to_double(key, value);
  else if (key == "no-tvb") c.no_tvb = to_bool(key, value);
  else if (key == "no-pcp") c.pcp = !to_bool(key, value);
  else if (key == "pcp") c.pcp = to_bool(key, value);
  else if (key == "eps") c.eps = to_double(key, value);
  else if (key == "t-final") c.t_final = to_double(key, value);
  else if (key == "output-times") c.output_times = to_list<double>(key, value, to_double);
  else if (key == "ns") c.ns = to_list<int>(key, value, to_long);
  else if (key == "out") c.out = value;
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(to_long(key, value));
  else if (key == "unsafe") c.unsafe = to_bool(key, value);
  else if (key == "quad-points") c.quad_points = to_bool(key, value);
  else if (key == "dual") c.dual = to_bool(key, value);
  else if (key == "max-steps") c.max_steps = to_long(key, value);
  else throw ConfigError("unknown setting '" + key + "'");
}

/// Line-oriented format: `[section]` headers group keys, `key = value`
/// lines set them, `#` starts a comment. Section names are informational.
inline std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    out.emplace_back(detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return out;
}

inline void load_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  for (const auto& [k, v] : parse_config_text(buf.str())) apply_setting(c, k, v);
}

/// Config with problem defaults filled in and ranges checked.
struct ResolvedRun {
  ResolvedRun(ProblemSpec s, EosModel e) : spec(std::move(s)), eos(e) {}

  ProblemSpec spec;
  EosModel eos;
  int nx = 0;
  int ny = 1;
  SchemeOptions scheme;
  RunSettings settings;
  std::vector<std::string> warnings;
};

inline ResolvedRun resolve(const RunConfig& c) {
  ProblemSpec spec = find_problem(c.problem);
  const EosModel eos = EosModel::parse(c.eos.value_or(spec.default_eos), c.unsafe);
  ResolvedRun r(std::move(spec), eos);
  r.nx = c.nx.value_or(r.spec.default_nx);
  r.ny = r.spec.dimension == 2 ? c.ny.value_or(c.nx ? *c.nx * r.spec.default_ny / r.spec.default_nx : r.spec.default_ny) : 1;
  if (r.nx < 1 || r.ny < 1) throw ConfigError("cell counts must be positive");
  if (c.degree < 0 || c.degree > 2) throw ConfigError("degree k must be 0, 1 or 2");
  if (!(c.eps > 0.0)) throw ConfigError("eps must be positive");

  r.scheme.degree = c.degree;
  r.scheme.eps = c.eps;
  r.scheme.pcp = c.pcp;
  r.scheme.tvb = !c.no_tvb && (c.tvb_m.has_value() || r.spec.oscillation_limiter);
  r.scheme.tvb_m = c.tvb_m.value_or(0.0);
  if (r.scheme.tvb_m < 0.0) throw ConfigError("tvb-m must be non-negative");

  r.settings.integrator = c.integrator;
  r.settings.theta = c.theta.value_or(max_theta(c.integrator));
  r.settings.varpi = c.varpi.value_or(r.spec.varpi);
  r.settings.t_final = c.t_final.value_or(r.spec.t_final);
  r.settings.output_times = c.output_times;
  r.settings.max_steps = c.max_steps;
  if (!(r.settings.theta > 0.0) || !(r.settings.varpi > 0.0)) throw ConfigError("theta and varpi must be positive");
  if (!(r.settings.t_final > 0.0)) throw ConfigError("t-final must be positive");
  const double lobatto_w1 = c.degree == 0 ? 1.0 : (c.degree == 1 ? 0.5 : 1.0 / 6.0);
  if (r.settings.theta > max_theta(c.integrator) || r.settings.varpi > 1.0) {
    const std::string msg = "theta = " + std::to_string(r.settings.theta) + ", varpi = " +
                            std::to_string(r.settings.varpi) + " exceed the proven range for " +
                            to_string(c.integrator);
    if (!c.unsafe) throw ConfigError(msg + " (pass --unsafe to run anyway)");
    r.warnings.push_back(msg);
  }
  if (r.settings.varpi > lobatto_w1 && r.scheme.pcp)
    r.warnings.push_back("varpi = " + std::to_string(r.settings.varpi) + " is above the first Gauss-Lobatto weight " +
                         std::to_string(lobatto_w1) + "; the positivity theorem does not cover this step size");
  return r;
}

}  // namespace rcdg
