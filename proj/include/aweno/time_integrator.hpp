#pragma once

// SSP-RK3 time stepping, CFL time-step selection and the adaptive,
// limited and nonlimited evolution loops.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aweno/benchmarks.hpp"
#include "aweno/cu_flux.hpp"
#include "aweno/euler.hpp"
#include "aweno/grid.hpp"
#include "aweno/lsi.hpp"
#include "aweno/mask.hpp"

namespace aweno {

enum class SchemeMode { Limited, Adaptive, Nonlimited };

std::string to_string(SchemeMode mode);
SchemeMode parse_scheme_mode(const std::string& name);

struct TimeStepConfig {
  double cfl = 0.45;
  double final_time = 1.0;
  /// Replaces the CFL step when set (still clipped to stop times).
  std::optional<double> fixed_dt;

  void validate() const;
};

/// max over interior nodes of |u_axis| + c.
template <int Dim>
double max_signal_speed(const ConservedField<Dim>& u, const GasParams& gas, int axis);

/// dt = cfl * dx / a (2-D: cfl * min(dx/a, dy/b)), clipped so that
/// time + dt does not pass `stop`. With no signal speed at all the step goes
/// straight to `stop`.
template <int Dim>
double compute_dt(const ConservedField<Dim>& u, const GasParams& gas, const TimeStepConfig& cfg, double time,
                  double stop);

namespace detail {

inline double stage_first(double u, double dt, double l) { return u + dt * l; }
inline double stage_blend(double a, double u, double b, double w, double dt, double l) {
  return a * u + b * (w + dt * l);
}

template <int Dim, int K>
Field<Dim, K> stage_first(const Field<Dim, K>& u, double dt, const Field<Dim, K>& l) {
  Field<Dim, K> out(u.grid());
  auto& o = out.values();
  const auto& x = u.values();
  const auto& y = l.values();
  for (std::size_t i = 0; i < o.size(); ++i)
    for (int k = 0; k < K; ++k) o[i][k] = x[i][k] + dt * y[i][k];
  return out;
}

template <int Dim, int K>
Field<Dim, K> stage_blend(double a, const Field<Dim, K>& u, double b, const Field<Dim, K>& w, double dt,
                          const Field<Dim, K>& l) {
  Field<Dim, K> out(u.grid());
  auto& o = out.values();
  const auto& x = u.values();
  const auto& z = w.values();
  const auto& y = l.values();
  for (std::size_t i = 0; i < o.size(); ++i)
    for (int k = 0; k < K; ++k) o[i][k] = a * x[i][k] + b * (z[i][k] + dt * y[i][k]);
  return out;
}

}  // namespace detail

/// One step of the three-stage SSP-RK3 scheme
///   U^I  = U + dt L(U)
///   U^II = 3/4 U + 1/4 (U^I + dt L(U^I))
///   U^{n+1} = 1/3 U + 2/3 (U^II + dt L(U^II)).
/// `prepare(state, stage)` runs on each intermediate and the final state
/// (ghost filling, validity checks); `stage_two` receives U^II.
template <class State, class Rhs, class Prepare>
State ssprk3_step(const State& u, double dt, Rhs&& rhs, Prepare&& prepare, State* stage_two = nullptr) {
  State u1 = detail::stage_first(u, dt, rhs(u, 1));
  prepare(u1, 1);
  State u2 = detail::stage_blend(0.75, u, 0.25, u1, dt, rhs(u1, 2));
  prepare(u2, 2);
  State u3 = detail::stage_blend(1.0 / 3.0, u, 2.0 / 3.0, u2, dt, rhs(u2, 3));
  prepare(u3, 3);
  if (stage_two) *stage_two = std::move(u2);
  return u3;
}

template <class State, class Rhs>
State ssprk3_step(const State& u, double dt, Rhs&& rhs) {
  return ssprk3_step(
      u, dt, [&](const State& s, int) { return rhs(s); }, [](State&, int) {});
}

/// SSP-RK3 for the Euler equations with the A-WENO operator.
template <int Dim>
class EulerStepper {
 public:
  using FieldType = ConservedField<Dim>;

  EulerStepper(GasParams gas, BoundarySet<Dim> bc, SchemeParams params = {}, bool gravity = false);

  /// Advances `u` (ghosts filled on entry and on exit) by dt with the mask
  /// held fixed over all stages. Throws StepFailure.
  void step(FieldType& u, double dt, const RoughnessMask<Dim>& mask, FieldType* stage_two = nullptr);

  const GasParams& gas() const { return gas_; }
  const BoundarySet<Dim>& boundaries() const { return bc_; }
  long fallback_count() const { return op_.fallback_count(); }

 private:
  GasParams gas_;
  BoundarySet<Dim> bc_;
  AwenoOperator<EulerSystem<Dim>> op_;
};

struct StepRecord {
  int index = 0;
  double time = 0.0;  // t^{n+1}
  double dt = 0.0;
  double rough_fraction = 0.0;
  double wall_seconds = 0.0;
  /// Smallest interior density and pressure after the step.
  double min_density = 0.0;
  double min_pressure = 0.0;
  /// symmetry_defect() of the stepped solution (2-D problems with a rule).
  double symmetry_defect = 0.0;
};

struct EvolveOptions {
  SchemeMode mode = SchemeMode::Adaptive;
  /// Cell counts; zero entries fall back to the problem defaults.
  std::array<int, 2> cells{0, 0};
  std::optional<double> adaption_constant;
  std::optional<double> final_time;
  double cfl = 0.45;
  std::optional<double> fixed_dt;
  double start_time = 0.0;
  IndicatorSelector indicator{};
  SmearStencil smear = SmearStencil::Printed;
  bool enforce_symmetry = true;
  /// Times (inside (start, T]) at which the solution is recorded.
  std::vector<double> snapshot_times;
  SchemeParams scheme{};
  /// Stop after this many steps (0 = run to the final time).
  int max_steps = 0;
  /// Called after every completed step.
  std::function<void(const StepRecord&)> on_step;
};

template <int Dim>
struct EvolveResult {
  ConservedField<Dim> solution;
  double time = 0.0;
  std::vector<StepRecord> steps;
  /// Mask used by the last step.
  RoughnessMask<Dim> last_mask;
  /// Smoothed indicator and threshold evaluated at the start of the last
  /// step (absent when the run took a single step).
  std::optional<ScalarField<Dim>> last_smoothed;
  double last_threshold = 0.0;
  /// Smoothed indicator from the final step, evaluated at the end time.
  std::optional<ScalarField<Dim>> final_smoothed;
  std::vector<std::pair<double, ConservedField<Dim>>> snapshots;
  /// Wall-clock time of the evolution loop.
  double wall_seconds = 0.0;
  double adaption_constant = 0.0;
  /// Interface evaluations that used the node fallback.
  long fallback_interfaces = 0;
};

template <int Dim>
Grid<Dim> problem_grid(const ProblemSpec& spec, const EvolveOptions& opts);

template <int Dim>
EvolveResult<Dim> evolve(const ProblemSpec& spec, const EvolveOptions& opts);

/// Evolves an explicit initial field (interior values) instead of the
/// problem's initial data.
template <int Dim>
EvolveResult<Dim> evolve_from(const ProblemSpec& spec, ConservedField<Dim> u0, const EvolveOptions& opts);

}  // namespace aweno
