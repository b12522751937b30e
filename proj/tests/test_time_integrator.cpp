#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aweno/time_integrator.hpp"

using namespace aweno;

namespace {

ProblemSpec smooth_wave() {
  ProblemSpec s;
  s.name = "wave";
  s.dimension = 1;
  s.lo = {0.0, 0.0};
  s.hi = {2.0, 1.0};
  s.default_cells = {40, 1};
  s.final_time = 0.1;
  s.adaption_constant = 1.0;
  s.faces[0] = s.faces[1] = FaceCondition::periodic();
  s.initial = [](double x, double) {
    return PrimitiveState{1.0 + 0.5 * std::sin(std::numbers::pi * x), 1.0, 0.0, 1.0};
  };
  return s;
}

}  // namespace

TEST(TimeStep, CflExample1D) {
  GasParams gas{1.4};
  ConservedField<1> u(build_grid(0.0, 1.0, 10));
  u.fill(prim_to_cons<1>(PrimitiveState{1.0, 1.0, 0.0, 1.0}, gas));
  // ghosts hold a faster state that must not enter the estimate
  u(-1) = prim_to_cons<1>(PrimitiveState{1.0, 50.0, 0.0, 1.0}, gas);
  TimeStepConfig cfg;
  const double a = 1.0 + std::sqrt(1.4);
  EXPECT_DOUBLE_EQ(max_signal_speed<1>(u, gas, 0), a);
  EXPECT_DOUBLE_EQ(compute_dt<1>(u, gas, cfg, 0.0, 10.0), 0.45 * 0.1 / a);
  // clipped to the stop time
  EXPECT_DOUBLE_EQ(compute_dt<1>(u, gas, cfg, 0.0, 0.01), 0.01);
  cfg.fixed_dt = 0.002;
  EXPECT_DOUBLE_EQ(compute_dt<1>(u, gas, cfg, 0.0, 1.0), 0.002);
}

TEST(TimeStep, CflExample2D) {
  GasParams gas{1.4};
  ConservedField<2> u(build_grid({0.0, 0.0}, {1.0, 2.0}, {10, 10}));
  u.fill(prim_to_cons<2>(PrimitiveState{1.4, 0.0, 3.0, 1.0}, gas));
  TimeStepConfig cfg;
  // c = 1; a = 1 in x with dx = 0.1, b = 4 in y with dy = 0.2
  EXPECT_DOUBLE_EQ(compute_dt<2>(u, gas, cfg, 0.0, 1.0), 0.45 * std::min(0.1 / 1.0, 0.2 / 4.0));
}

TEST(TimeStep, CflValidation) {
  TimeStepConfig cfg;
  cfg.cfl = 0.6;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.cfl = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.cfl = 0.5;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(SspRk3, DecayOneStep) {
  const double h = 0.1;
  const double v = ssprk3_step(1.0, h, [](double y) { return -y; });
  EXPECT_NEAR(v, 1.0 - h + h * h / 2.0 - h * h * h / 6.0, 1e-15);
  EXPECT_NEAR(v, 0.9048333333333333, 1e-15);
}

TEST(SspRk3, ThirdOrderOnOde) {
  // y' = -y + cos t, y(0) = 1: y = (cos t + sin t)/2 + e^{-t}/2
  auto err = [](int steps) {
    const double T = 1.0, h = T / steps;
    double y = 1.0, t = 0.0;
    for (int n = 0; n < steps; ++n) {
      // stages sit at t, t + h, t + h/2
      y = ssprk3_step(
          y, h,
          [&](double yy, int s) {
            const double ts = s == 1 ? t : (s == 2 ? t + h : t + h / 2.0);
            return -yy + std::cos(ts);
          },
          [](double&, int) {});
      t += h;
    }
    return std::abs(y - (0.5 * (std::cos(T) + std::sin(T)) + 0.5 * std::exp(-T)));
  };
  const double e1 = err(20), e2 = err(40), e3 = err(80);
  EXPECT_GE(std::log2(e1 / e2), 2.8);
  EXPECT_GE(std::log2(e2 / e3), 2.8);
}

TEST(EulerStepper, ConstantStateStaysConstant) {
  GasParams gas{1.4};
  const auto bc = BoundarySet<1>::uniform(FaceCondition::periodic());
  EulerStepper<1> stepper(gas, bc);
  ConservedField<1> u(build_grid(0.0, 1.0, 16));
  const auto U = prim_to_cons<1>(PrimitiveState{0.8, -0.3, 0.0, 1.7}, gas);
  u.fill(U);
  fill_ghosts(u, bc);
  for (bool rough : {true, false}) {
    auto v = u;
    stepper.step(v, 0.01, RoughnessMask<1>(v.grid(), rough));
    v.for_each_interior([&](const ConservedState<1>& W, int, int) {
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(W[k], U[k], 1e-14);
    });
  }
}

TEST(EulerStepper, PeriodicRunConserves) {
  const ProblemSpec spec = smooth_wave();
  for (SchemeMode mode : {SchemeMode::Limited, SchemeMode::Adaptive, SchemeMode::Nonlimited}) {
    EvolveOptions o;
    o.mode = mode;
    o.cells = {64, 1};
    o.final_time = 100.0;
    o.max_steps = 100;
    const auto u0 = initial_field<1>(spec, problem_grid<1>(spec, o));
    const auto before = total_integrals(u0);
    const auto res = evolve<1>(spec, o);
    ASSERT_EQ(res.steps.size(), 100u);
    const auto after = total_integrals(res.solution);
    for (int k = 0; k < 3; ++k) EXPECT_LE(std::abs(after[k] - before[k]), 1e-11 * std::abs(before[k])) << k;
  }
}

TEST(Evolve, HitsFinalAndSnapshotTimes) {
  const ProblemSpec spec = smooth_wave();
  EvolveOptions o;
  o.cells = {32, 1};
  o.snapshot_times = {0.05, 0.025};
  const auto res = evolve<1>(spec, o);
  EXPECT_EQ(res.time, 0.1);
  ASSERT_EQ(res.snapshots.size(), 2u);
  EXPECT_EQ(res.snapshots[0].first, 0.025);
  EXPECT_EQ(res.snapshots[1].first, 0.05);
  // the first adaptive step is fully limited
  EXPECT_EQ(res.steps.front().rough_fraction, 1.0);
  EXPECT_GT(res.steps.back().min_density, 0.0);
  o.snapshot_times = {0.2};
  EXPECT_THROW(evolve<1>(spec, o), ConfigError);
}

TEST(Evolve, FailureCarriesStage) {
  ProblemSpec spec = make_problem("sod");
  EvolveOptions o;
  o.mode = SchemeMode::Nonlimited;
  o.cells = {50, 1};
  o.fixed_dt = 0.2;
  try {
    evolve<1>(spec, o);
    FAIL() << "expected StepFailure";
  } catch (const StepFailure& e) {
    EXPECT_GE(e.stage(), 1);
    EXPECT_LE(e.stage(), 3);
    EXPECT_FALSE(std::string(e.what()).empty());
  }
}

TEST(Evolve, ModeNames) {
  EXPECT_EQ(parse_scheme_mode("adaptive"), SchemeMode::Adaptive);
  EXPECT_EQ(to_string(SchemeMode::Nonlimited), "nonlimited");
  EXPECT_THROW(parse_scheme_mode("fast"), ConfigError);
}
