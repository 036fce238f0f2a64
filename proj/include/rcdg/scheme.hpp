#pragma once

#include <algorithm>
#include <limits>

namespace rcdg {

struct SchemeOptions {
  int degree = 2;
  double eps = 1e-13;
  bool pcp = true;
  bool tvb = false;
  double tvb_m = 0.0;
  /// Record the smallest D and q over all control points after each limiting pass.
  bool track_control_points = false;
};

struct LimiterStats {
  long pcp_cells = 0;
  long tvb_components = 0;
  double min_theta = 1.0;
  double min_average_density = std::numeric_limits<double>::infinity();
  double min_average_q = std::numeric_limits<double>::infinity();
  double min_control_density = std::numeric_limits<double>::infinity();
  double min_control_q = std::numeric_limits<double>::infinity();
  /// Largest amount by which a control-point D or q fell below eps, in
  /// units of the rounding level (machine epsilon times the cell mean D or E).
  double max_control_shortfall = -std::numeric_limits<double>::infinity();

  void record_shortfall(double eps, double d, double d_mean, double q, double e_mean) {
    constexpr double ulp = std::numeric_limits<double>::epsilon();
    max_control_shortfall = std::max({max_control_shortfall, (eps - d) / (ulp * d_mean), (eps - q) / (ulp * e_mean)});
  }

  void merge(const LimiterStats& o) {
    pcp_cells += o.pcp_cells;
    tvb_components += o.tvb_components;
    min_theta = std::min(min_theta, o.min_theta);
    min_average_density = std::min(min_average_density, o.min_average_density);
    min_average_q = std::min(min_average_q, o.min_average_q);
    min_control_density = std::min(min_control_density, o.min_control_density);
    min_control_q = std::min(min_control_q, o.min_control_q);
    max_control_shortfall = std::max(max_control_shortfall, o.max_control_shortfall);
  }
};

}  // namespace rcdg
