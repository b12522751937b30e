#include "aweno/time_integrator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace aweno {

std::string to_string(SchemeMode mode) {
  switch (mode) {
    case SchemeMode::Limited: return "limited";
    case SchemeMode::Adaptive: return "adaptive";
    case SchemeMode::Nonlimited: return "nonlimited";
  }
  return "adaptive";
}

SchemeMode parse_scheme_mode(const std::string& name) {
  if (name == "limited") return SchemeMode::Limited;
  if (name == "adaptive") return SchemeMode::Adaptive;
  if (name == "nonlimited") return SchemeMode::Nonlimited;
  throw ConfigError("unknown mode '" + name + "' (expected limited, adaptive or nonlimited)");
}

void TimeStepConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ConfigError("CFL number must lie in (0, 0.5]");
  if (!(final_time > 0.0)) throw ConfigError("final time must be positive");
  if (fixed_dt && !(*fixed_dt > 0.0)) throw ConfigError("fixed time step must be positive");
}

template <int Dim>
double max_signal_speed(const ConservedField<Dim>& u, const GasParams& gas, int axis) {
  double a = 0.0;
  u.for_each_interior([&](const ConservedState<Dim>& U, int, int) {
    const double c = sound_speed<Dim>(U, gas);
    a = std::max(a, std::abs(U[1 + axis] / U[0]) + c);
  });
  return a;
}

template <int Dim>
double compute_dt(const ConservedField<Dim>& u, const GasParams& gas, const TimeStepConfig& cfg, double time,
                  double stop) {
  const double remaining = stop - time;
  double dt = std::numeric_limits<double>::infinity();
  if (cfg.fixed_dt) {
    dt = *cfg.fixed_dt;
  } else {
    for (int a = 0; a < Dim; ++a) {
      const double speed = max_signal_speed<Dim>(u, gas, a);
      if (speed > 0.0) dt = std::min(dt, cfg.cfl * u.grid().spacing(a) / speed);
    }
  }
  return std::min(dt, remaining);
}

template double max_signal_speed<1>(const ConservedField<1>&, const GasParams&, int);
template double max_signal_speed<2>(const ConservedField<2>&, const GasParams&, int);
template double compute_dt<1>(const ConservedField<1>&, const GasParams&, const TimeStepConfig&, double, double);
template double compute_dt<2>(const ConservedField<2>&, const GasParams&, const TimeStepConfig&, double, double);

namespace {

template <int Dim>
typename AwenoOperator<EulerSystem<Dim>>::Source gravity_source(bool on) {
  if constexpr (Dim == 2) {
    if (on) {
      return [](const ConservedField<2>& u, ConservedField<2>& rhs) {
        rhs.for_each_interior([&](ConservedState<2>& r, int i, int j) {
          const ConservedState<2> s = rt_source(u(i, j));
          for (int k = 0; k < 4; ++k) r[k] += s[k];
        });
      };
    }
  }
  return {};
}

template <int Dim>
std::string cell_label(int i, int j) {
  return Dim == 1 ? "cell " + std::to_string(i) : "cell " + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

template <int Dim>
EulerStepper<Dim>::EulerStepper(GasParams gas, BoundarySet<Dim> bc, SchemeParams params, bool gravity)
    : gas_(gas), bc_(bc), op_(EulerSystem<Dim>(gas), params, gravity_source<Dim>(gravity)) {
  if (gravity && Dim != 2) throw ConfigError("gravity source needs a 2-D problem");
  bc_.validate();
}

template <int Dim>
void EulerStepper<Dim>::step(FieldType& u, double dt, const RoughnessMask<Dim>& mask, FieldType* stage_two) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  int current_stage = 1;
  auto rhs = [&](const FieldType& s, int stage) {
    current_stage = stage;
    FieldType out(s.grid());
    op_.apply(s, mask, out);
    return out;
  };
  auto prepare = [&](FieldType& s, int stage) {
    s.for_each_interior([&](const ConservedState<Dim>& U, int i, int j) {
      if (!is_physical<Dim>(U, gas_)) {
        throw StepFailure("invalid state after stage " + std::to_string(stage) + " at " + cell_label<Dim>(i, j) +
                              ": rho = " + std::to_string(U[0]) + ", p = " + std::to_string(pressure<Dim>(U, gas_)),
                          stage, cell_label<Dim>(i, j));
      }
    });
    fill_ghosts(s, bc_);
  };
  try {
    u = ssprk3_step(u, dt, rhs, prepare, stage_two);
  } catch (const PhysicalStateError& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw StepFailure("flux evaluation failed in stage " + std::to_string(current_stage) + " at " + what,
                      current_stage, colon == std::string::npos ? std::string("unknown") : what.substr(0, colon));
  }
}

template class EulerStepper<1>;
template class EulerStepper<2>;

template <int Dim>
Grid<Dim> problem_grid(const ProblemSpec& spec, const EvolveOptions& opts) {
  std::array<int, 2> cells = spec.default_cells;
  for (int a = 0; a < Dim; ++a)
    if (opts.cells[a] > 0) cells[a] = opts.cells[a];
  return spec.grid<Dim>(cells);
}

template Grid<1> problem_grid<1>(const ProblemSpec&, const EvolveOptions&);
template Grid<2> problem_grid<2>(const ProblemSpec&, const EvolveOptions&);

template <int Dim>
EvolveResult<Dim> evolve(const ProblemSpec& spec, const EvolveOptions& opts) {
  spec.validate();
  return evolve_from<Dim>(spec, initial_field<Dim>(spec, problem_grid<Dim>(spec, opts)), opts);
}

template <int Dim>
EvolveResult<Dim> evolve_from(const ProblemSpec& spec, ConservedField<Dim> u0, const EvolveOptions& opts) {
  spec.validate();
  if (spec.dimension != Dim) throw ConfigError("problem '" + spec.name + "' is not " + std::to_string(Dim) + "-D");

  TimeStepConfig tcfg;
  tcfg.cfl = opts.cfl;
  tcfg.final_time = opts.final_time.value_or(spec.final_time);
  tcfg.fixed_dt = opts.fixed_dt;
  tcfg.validate();
  if (!(tcfg.final_time > opts.start_time)) throw ConfigError("final time must exceed the start time");

  AdaptiveConfig acfg{opts.adaption_constant.value_or(spec.adaption_constant)};
  acfg.validate();

  std::vector<double> stops;
  for (double s : opts.snapshot_times) {
    if (!(s > opts.start_time && s <= tcfg.final_time)) throw ConfigError("snapshot time outside the run interval");
    stops.push_back(s);
  }
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  if (stops.empty() || stops.back() != tcfg.final_time) stops.push_back(tcfg.final_time);

  const BoundarySet<Dim> bc = spec.boundaries<Dim>();
  EulerStepper<Dim> stepper(spec.gas, bc, opts.scheme, spec.gravity);
  LsiTracker<Dim> tracker(spec.gas, opts.indicator, bc, opts.smear);

  EvolveResult<Dim> res;
  res.adaption_constant = acfg.constant;
  res.solution = std::move(u0);
  ConservedField<Dim>& u = res.solution;
  const Grid<Dim>& grid = u.grid();
  fill_ghosts(u, bc);
  res.last_mask = RoughnessMask<Dim>(grid, opts.mode != SchemeMode::Nonlimited);

  auto is_snapshot = [&](double t) {
    return std::find(opts.snapshot_times.begin(), opts.snapshot_times.end(), t) != opts.snapshot_times.end();
  };

  using clock = std::chrono::steady_clock;
  const auto loop_start = clock::now();
  double t = opts.start_time;
  std::size_t next_stop = 0;
  ConservedField<Dim> stage_two;
  int n = 0;
  while (next_stop < stops.size()) {
    const double stop = stops[next_stop];
    const auto step_start = clock::now();

    ScalarField<Dim> psi = tracker.indicator(u);
    std::optional<ScalarField<Dim>> smoothed = tracker.smoothed(psi);
    RoughnessMask<Dim> mask;
    switch (opts.mode) {
      case SchemeMode::Limited: mask = RoughnessMask<Dim>::all_rough(grid); break;
      case SchemeMode::Nonlimited: mask = RoughnessMask<Dim>::all_smooth(grid); break;
      case SchemeMode::Adaptive:
        mask = smoothed ? flag_rough<Dim>(*smoothed, acfg, tracker.history()->dt_previous)
                        : RoughnessMask<Dim>::all_rough(grid);
        break;
    }
    if (smoothed) res.last_threshold = acfg.threshold(tracker.history()->dt_previous);
    res.last_smoothed = std::move(smoothed);

    const double dt = compute_dt<Dim>(u, spec.gas, tcfg, t, stop);
    stepper.step(u, dt, mask, &stage_two);
    tracker.advance(std::move(psi), tracker.indicator(stage_two), dt);
    if constexpr (Dim == 2) {
      if (opts.enforce_symmetry && spec.symmetry != SymmetryRule::None) {
        enforce_symmetry(u, spec.symmetry);
        fill_ghosts(u, bc);
      }
    }

    const bool reached = dt == stop - t;
    t = reached ? stop : t + dt;
    ++n;

    StepRecord rec;
    rec.index = n;
    rec.time = t;
    rec.dt = dt;
    rec.rough_fraction = mask.rough_fraction();
    rec.wall_seconds = std::chrono::duration<double>(clock::now() - step_start).count();
    rec.min_density = std::numeric_limits<double>::infinity();
    rec.min_pressure = rec.min_density;
    u.for_each_interior([&](const ConservedState<Dim>& U, int, int) {
      rec.min_density = std::min(rec.min_density, U[0]);
      rec.min_pressure = std::min(rec.min_pressure, pressure<Dim>(U, spec.gas));
    });
    if constexpr (Dim == 2) rec.symmetry_defect = symmetry_defect(u, spec.symmetry);
    res.steps.push_back(rec);
    res.last_mask = std::move(mask);
    if (opts.on_step) opts.on_step(rec);

    if (reached) {
      if (is_snapshot(stop)) res.snapshots.emplace_back(stop, u);
      ++next_stop;
    }
    if (opts.max_steps > 0 && n >= opts.max_steps) break;
  }
  res.wall_seconds = std::chrono::duration<double>(clock::now() - loop_start).count();
  res.time = t;
  res.fallback_interfaces = stepper.fallback_count();
  res.final_smoothed = tracker.smoothed(tracker.indicator(u));
  return res;
}

template EvolveResult<1> evolve<1>(const ProblemSpec&, const EvolveOptions&);
template EvolveResult<2> evolve<2>(const ProblemSpec&, const EvolveOptions&);
template EvolveResult<1> evolve_from<1>(const ProblemSpec&, ConservedField<1>, const EvolveOptions&);
template EvolveResult<2> evolve_from<2>(const ProblemSpec&, ConservedField<2>, const EvolveOptions&);

}  // namespace aweno
