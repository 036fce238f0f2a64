#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rcdg/central_dg1d.hpp"
#include "rcdg/central_dg2d.hpp"
#include "rcdg/integrator.hpp"
#include "rcdg/norms.hpp"
#include "rcdg/setup.hpp"

using namespace rcdg;

namespace {

Primitive<1> prim1(double rho, double v, double p) {
  Primitive<1> w;
  w.rho = rho;
  w.v[0] = v;
  w.p = p;
  return w;
}

Primitive<2> prim2(double rho, double vx, double vy, double p) {
  Primitive<2> w;
  w.rho = rho;
  w.v = {vx, vy};
  w.p = p;
  return w;
}

CentralDg1d scheme1d(int n, int degree, BoundaryKind bc, const EosModel& eos = EosModel::ideal(5.0 / 3.0)) {
  SchemeOptions opt;
  opt.degree = degree;
  return CentralDg1d(eos, Mesh1d(0.0, 1.0, n, bc == BoundaryKind::kPeriodic), Boundaries<1>::uniform(bc), opt);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(Residual1d, ConstantStateIsStationary) {
  for (BoundaryKind bc : {BoundaryKind::kPeriodic, BoundaryKind::kOutflow}) {
    auto s = scheme1d(16, 2, bc, EosModel::ryu());
    auto u = s.make_solution();
    const auto c = primitive_to_conserved(s.eos(), prim1(0.7, 0.6, 2.0));
    s.project(u, [&](double) { return c; });
    DgSolution<1> r;
    s.residual(u, 100.0, r);
    // Measured against the size of the flux terms F / dx that cancel.
    const auto f = flux(s.eos(), c, 0);
    const double scale = std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])}) / s.mesh().dx();
    EXPECT_LT(max_abs(r.mesh(MeshKind::kPrimal)) / scale, 1e-13);
    EXPECT_LT(max_abs(r.mesh(MeshKind::kDual)) / scale, 1e-13);
  }
}

TEST(Residual1d, ReflectingWallAtRest) {
  auto s = scheme1d(8, 2, BoundaryKind::kReflecting);
  auto u = s.make_solution();
  const auto c = primitive_to_conserved(s.eos(), prim1(1.0, 0.0, 1.0));
  s.project(u, [&](double) { return c; });
  DgSolution<1> r;
  s.residual(u, 10.0, r);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kPrimal)), 1e-13);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kDual)), 1e-13);
}

TEST(Residual1d, PiecewiseConstantForwardEulerIsConvexCombination) {
  // Primal cell j overlaps dual cells j (left) and j + 1 (right).
  const int n = 12;
  auto s = scheme1d(n, 0, BoundaryKind::kPeriodic);
  const EosModel& eos = s.eos();
  auto u = s.make_solution();
  for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual})
    for (int c = 0; c < n; ++c) {
      const double x = s.mesh().center(kind, c);
      const auto st = primitive_to_conserved(eos, prim1(1.0 + 0.5 * std::sin(2 * std::numbers::pi * x),
                                                        0.3 * std::cos(2 * std::numbers::pi * x), 1.0 + x));
      for (int k = 0; k < 3; ++k) u.cell(kind, c)[k] = st[k];
    }
  const double theta = 0.4;
  const double dt = 0.1 * s.mesh().dx();
  const double lambda = dt / s.mesh().dx();
  DgSolution<1> r;
  s.residual(u, theta / dt, r);
  for (int j = 0; j < n; ++j) {
    const auto ui = u.average(MeshKind::kPrimal, j);
    const auto ul = u.average(MeshKind::kDual, j);
    const auto ur = u.average(MeshKind::kDual, (j + 1) % n);
    const auto fl = flux(eos, ul, 0);
    const auto fr = flux(eos, ur, 0);
    for (int k = 0; k < 3; ++k) {
      const double expected =
          (1.0 - theta) * ui[k] + 0.5 * theta * (ul[k] + ur[k]) - lambda * (fr[k] - fl[k]);
      const double got = ui[k] + dt * r.cell(MeshKind::kPrimal, j)[k];
      EXPECT_NEAR(got, expected, 1e-14 * std::max(1.0, std::abs(expected))) << j << ' ' << k;
    }
  }
  // Dual cell j overlaps primal cells j - 1 and j.
  for (int j = 0; j < n; ++j) {
    const auto uj = u.average(MeshKind::kDual, j);
    const auto ul = u.average(MeshKind::kPrimal, (j + n - 1) % n);
    const auto ur = u.average(MeshKind::kPrimal, j);
    const auto fl = flux(eos, ul, 0);
    const auto fr = flux(eos, ur, 0);
    for (int k = 0; k < 3; ++k) {
      const double expected =
          (1.0 - theta) * uj[k] + 0.5 * theta * (ul[k] + ur[k]) - lambda * (fr[k] - fl[k]);
      const double got = uj[k] + dt * r.cell(MeshKind::kDual, j)[k];
      EXPECT_NEAR(got, expected, 1e-14 * std::max(1.0, std::abs(expected))) << j << ' ' << k;
    }
  }
}

TEST(Residual2d, ConstantStateIsStationary) {
  SchemeOptions opt;
  CentralDg2d s(EosModel::mathews(), Mesh2d{Mesh1d(0.0, 1.0, 6, true), Mesh1d(0.0, 2.0, 5, true)},
                Boundaries<2>::uniform(BoundaryKind::kPeriodic), opt);
  auto u = s.make_solution();
  const auto c = primitive_to_conserved(s.eos(), prim2(0.5, 0.3, -0.6, 0.2));
  s.project(u, [&](double, double) { return c; });
  DgSolution<2> r;
  s.residual(u, 50.0, r);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kPrimal)), 1e-13);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kDual)), 1e-13);
}

TEST(Residual2d, OutflowConstantState) {
  SchemeOptions opt;
  CentralDg2d s(EosModel::ideal(1.4), Mesh2d{Mesh1d(0.0, 1.0, 5, false), Mesh1d(0.0, 1.0, 4, false)},
                Boundaries<2>::uniform(BoundaryKind::kOutflow), opt);
  auto u = s.make_solution();
  const auto c = primitive_to_conserved(s.eos(), prim2(1.0, 0.2, 0.1, 1.0));
  s.project(u, [&](double, double) { return c; });
  DgSolution<2> r;
  s.residual(u, 50.0, r);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kPrimal)), 1e-13);
  EXPECT_LT(max_abs(r.mesh(MeshKind::kDual)), 1e-13);
}

TEST(Solver2d, YInvariantDataMatches1d) {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  const int n = 16;
  const int ny = 3;
  SchemeOptions opt;
  CentralDg1d s1(eos, Mesh1d(0.0, 1.0, n, true), Boundaries<1>::uniform(BoundaryKind::kPeriodic), opt);
  CentralDg2d s2(eos, Mesh2d{Mesh1d(0.0, 1.0, n, true), Mesh1d(0.0, 0.5, ny, true)},
                 Boundaries<2>::uniform(BoundaryKind::kPeriodic), opt);
  auto field = [](double x) { return prim2(1.0 + 0.5 * std::sin(2 * std::numbers::pi * x), 0.9, 0.0, 1.0); };
  auto u1 = s1.make_solution();
  auto u2 = s2.make_solution();
  s1.project(u1, [&](double x) {
    const auto w = field(x);
    return primitive_to_conserved(eos, prim1(w.rho, w.v[0], w.p));
  });
  s2.project(u2, [&](double x, double) { return primitive_to_conserved(eos, field(x)); });
  TimeStepper<CentralDg1d> t1(s1, Integrator::kRk3, 1.0);
  TimeStepper<CentralDg2d> t2(s2, Integrator::kRk3, 1.0);
  const double dt = time_step(1.0 / 6.0, 1.0, s2.inverse_spacing_sum());
  for (int step = 0; step < 10; ++step) {
    t1.step(u1, dt);
    t2.step(u2, dt);
  }
  const int mode_map[3] = {0, 1, 3};
  const int comp_map[3] = {0, 1, 3};
  double worst = 0.0;
  for (MeshKind kind : {MeshKind::kPrimal, MeshKind::kDual}) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < n; ++i) {
        const double* a = u1.cell(kind, i);
        const double* b = u2.cell(kind, s2.mesh().index(kind, i, j));
        for (int m = 0; m < 3; ++m)
          for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(a[m * 3 + k] - b[mode_map[m] * 4 + comp_map[k]]));
        for (int m : {2, 4, 5})
          for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(b[m * 4 + k]));
        for (int m = 0; m < 6; ++m) worst = std::max(worst, std::abs(b[m * 4 + 2]));
      }
    }
  }
  EXPECT_LT(worst, 1e-10);
}

namespace {

/// U' = lambda U on a single scalar slot; the limiter is the identity.
struct LinearScheme {
  using Solution = DgSolution<1>;
  double lambda = -1.0;
  int calls = 0;
  void residual(const Solution& u, double, Solution& out) {
    ++calls;
    out = u;
    for (auto& v : out.mesh(MeshKind::kPrimal)) v *= lambda;
    for (auto& v : out.mesh(MeshKind::kDual)) v *= lambda;
  }
  LimiterStats limit(Solution&) const { return {}; }
  double inverse_spacing_sum() const { return 1.0; }
};

DgSolution<1> scalar(double v) {
  DgSolution<1> u(1, 1, 1);
  u.mesh(MeshKind::kPrimal)[0] = v;
  return u;
}

}  // namespace

TEST(Integrator, Rk3StabilityPolynomial) {
  for (double z : {-0.1, -0.5, -1.0, 0.3}) {
    LinearScheme s;
    s.lambda = z;
    TimeStepper<LinearScheme> t(s, Integrator::kRk3, 1.0);
    auto u = scalar(1.0);
    t.step(u, 1.0);
    EXPECT_NEAR(u.mesh(MeshKind::kPrimal)[0], 1.0 + z + z * z / 2.0 + z * z * z / 6.0, 1e-15);
    EXPECT_EQ(s.calls, 3);
  }
}

TEST(Integrator, Ms3UsesRk3StartupThenMultistep) {
  const double z = -0.2;
  LinearScheme s;
  s.lambda = z;
  TimeStepper<LinearScheme> t(s, Integrator::kMs3, 1.0 / 3.0);
  auto u = scalar(1.0);
  std::vector<double> levels{1.0};
  for (int i = 0; i < 3; ++i) {
    t.step(u, 1.0);
    levels.push_back(u.mesh(MeshKind::kPrimal)[0]);
  }
  const double rk3 = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
  EXPECT_NEAR(levels[3], rk3 * rk3 * rk3, 1e-15);
  const int before = s.calls;
  t.step(u, 1.0);
  EXPECT_EQ(s.calls - before, 1);
  const double expected = 16.0 / 27.0 * (levels[3] + 3.0 * z * levels[3]) +
                          11.0 / 27.0 * (levels[0] + 12.0 / 11.0 * z * levels[0]);
  EXPECT_NEAR(u.mesh(MeshKind::kPrimal)[0], expected, 1e-15);
  EXPECT_DOUBLE_EQ(16.0 / 27.0 + 11.0 / 27.0, 1.0);
}

TEST(Integrator, Ms3RestartsWhenDtChanges) {
  LinearScheme s;
  TimeStepper<LinearScheme> t(s, Integrator::kMs3, 1.0 / 3.0);
  auto u = scalar(1.0);
  for (int i = 0; i < 4; ++i) t.step(u, 0.1);
  const int before = s.calls;
  t.step(u, 0.05);
  EXPECT_EQ(s.calls - before, 3);
}

TEST(Integrator, TimeStepFormula) {
  EXPECT_NEAR(time_step(1.0 / 6.0, 1.0 / 3.0, 1.0 / 0.01), 2.7778e-4, 1e-8);
  EXPECT_NEAR(time_step(1.0 / 6.0, 1.0, 1.0 / 0.01 + 1.0 / 0.01), 4.1667e-4, 1e-8);
  EXPECT_EQ(max_theta(Integrator::kRk3), 1.0);
  EXPECT_EQ(max_theta(Integrator::kMs3), 1.0 / 3.0);
  EXPECT_EQ(parse_integrator("ms3"), Integrator::kMs3);
  EXPECT_THROW(parse_integrator("rk4"), ConfigError);
}

TEST(Integrator, ConstantStateUnchanged) {
  auto s = scheme1d(10, 2, BoundaryKind::kPeriodic);
  auto u = s.make_solution();
  const auto c = primitive_to_conserved(s.eos(), prim1(1.0, 0.5, 1.0));
  s.project(u, [&](double) { return c; });
  const auto start = u.data;
  RunSettings rs;
  rs.t_final = 0.05;
  const auto res = integrate(s, u, rs);
  ASSERT_TRUE(res.ok) << res.failure;
  EXPECT_EQ(res.t, 0.05);
  for (int m = 0; m < 2; ++m)
    for (std::size_t i = 0; i < start[m].size(); ++i) EXPECT_NEAR(u.data[m][i], start[m][i], 1e-13);
}

TEST(Integrator, HitsOutputAndFinalTimes) {
  auto s = scheme1d(10, 1, BoundaryKind::kPeriodic);
  auto u = s.make_solution();
  const auto c = primitive_to_conserved(s.eos(), prim1(1.0, 0.0, 1.0));
  s.project(u, [&](double) { return c; });
  RunSettings rs;
  rs.integrator = Integrator::kRk3;
  rs.theta = 1.0;
  rs.t_final = 0.1;
  rs.output_times = {0.037};
  std::vector<double> hits;
  const auto res = integrate(s, u, rs, [&](const auto&, const StepReport& r) {
    if (r.output_time) hits.push_back(r.t);
    return true;
  });
  ASSERT_TRUE(res.ok);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0], 0.037);
  EXPECT_EQ(hits[1], 0.1);
}

TEST(Conservation, PeriodicTotalsOverBothMeshes) {
  const ProblemSpec spec = find_problem("sine1d");
  const EosModel eos = EosModel::parse(spec.default_eos);
  SchemeOptions opt;
  auto s = make_scheme_1d(spec, eos, 20, opt);
  auto u = initial_solution(s, spec);
  const double dx = s.mesh().dx();
  const double d0 = both_mesh_total(u, 0, dx);
  const double m0 = both_mesh_total(u, 1, dx);
  const double e0 = both_mesh_total(u, 2, dx);
  RunSettings rs;
  rs.t_final = 0.02;
  const auto res = integrate(s, u, rs);
  ASSERT_TRUE(res.ok);
  EXPECT_NEAR(both_mesh_total(u, 0, dx), d0, 1e-12 * std::abs(d0));
  EXPECT_NEAR(both_mesh_total(u, 1, dx), m0, 1e-12 * std::abs(m0));
  EXPECT_NEAR(both_mesh_total(u, 2, dx), e0, 1e-12 * std::abs(e0));
}

TEST(Solver1d, NoPcpFailureIsReported) {
  const ProblemSpec spec = find_problem("riemann1d");
  const EosModel eos = EosModel::parse(spec.default_eos);
  SchemeOptions opt;
  opt.pcp = false;
  auto s = make_scheme_1d(spec, eos, 100, opt);
  auto u = initial_solution(s, spec);
  RunSettings rs;
  rs.t_final = spec.t_final;
  rs.max_steps = 50;
  const auto res = integrate(s, u, rs);
  EXPECT_FALSE(res.ok);
  EXPECT_NE(res.failure.find("step"), std::string::npos);
}
