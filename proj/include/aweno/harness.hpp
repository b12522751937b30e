#pragma once

// Run configuration, file output and the study drivers behind the command
// line tool: single runs, LSI rate tables, Cesaro averaging and
// adaptive-versus-limited comparisons.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aweno/benchmarks.hpp"
#include "aweno/lsi.hpp"
#include "aweno/time_integrator.hpp"

namespace aweno {

struct RunConfig {
  std::string problem = "sod";
  SchemeMode mode = SchemeMode::Adaptive;
  std::optional<double> dx;
  std::array<int, 2> cells{0, 0};
  std::optional<double> adaption_constant;
  double cfl = 0.45;
  std::optional<double> final_time;
  std::string out_dir = "out";
  std::vector<double> snapshot_times;
  IndicatorSelector indicator{};
  SmearStencil smear = SmearStencil::Printed;
  bool symmetry = true;
  /// First-order node values at faces whose interpolated states are not physical.
  bool node_fallback = true;

  /// Checks the config against the problem it names.
  void validate(const ProblemSpec& spec) const;
  EvolveOptions evolve_options(const ProblemSpec& spec) const;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat `key = value` file; blank lines and `#` comments are skipped.
KeyValues read_key_values(const std::string& path);
KeyValues parse_key_values(const std::string& text);
/// Applies keys to `cfg`; unknown keys and bad values throw ConfigError.
void apply_key_values(RunConfig& cfg, const KeyValues& kv);

std::vector<double> parse_number_list(const std::string& text);

struct RunSummary {
  std::string problem;
  SchemeMode mode = SchemeMode::Adaptive;
  int dimension = 1;
  std::array<int, 2> cells{0, 0};
  double adaption_constant = 0.0;
  double final_time = 0.0;
  int steps = 0;
  double wall_seconds = 0.0;
  double final_rough_fraction = 0.0;
  double mean_rough_fraction = 0.0;
};

/// Evolves the configured problem and writes solution.csv, mask.csv,
/// lsi.csv, steps.csv, summary.txt and any snapshot files into out_dir.
RunSummary run(const RunConfig& cfg);

/// run() with error handling. Returns 0 on success, 2 for configuration
/// errors and 3 for solver failures (failure.txt is written).
int run_with_status(const RunConfig& cfg, std::string* message = nullptr);

inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

// CSV output. Numbers use 17 significant digits so they parse back exactly.

std::string format_double(double v);

template <int Dim>
void write_field_csv(const std::string& path, const ConservedField<Dim>& u, const GasParams& gas);
template <int Dim>
void write_mask_csv(const std::string& path, const RoughnessMask<Dim>& mask, const Grid<Dim>& grid);
template <int Dim>
void write_scalar_csv(const std::string& path, const ScalarField<Dim>& f, const std::string& name);
void write_steps_csv(const std::string& path, const std::vector<StepRecord>& steps);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);

// Rate tables of the smoothed LSI.

struct RateRow {
  int cells = 0;
  double dx = 0.0;
  double value = 0.0;
  std::optional<double> rate;
};

struct RateTable {
  double a = 0.0;
  double b = 0.0;
  std::vector<RateRow> rows;
};

/// log2(v[i-1] / v[i]); defined from the second entry on.
std::vector<std::optional<double>> successive_rates(const std::vector<double>& values);

/// max of f over cells whose centre lies in [a, b].
double window_max(const ScalarField<1>& f, double a, double b);

/// Fills rows from per-mesh values and computes the rates.
RateTable make_rate_table(double a, double b, const std::vector<int>& cells, const std::vector<double>& dx,
                          const std::vector<double>& values);

/// Runs the 1-D problem in limited mode on each mesh and tabulates the
/// windowed max of the smoothed pressure LSI at the last step.
std::vector<RateTable> rate_table(const std::string& problem, const std::vector<std::array<double, 2>>& windows,
                                  const std::vector<int>& cells, std::optional<double> final_time = {},
                                  SmearStencil smear = SmearStencil::Printed);

// Cesaro averaging over nested meshes.

enum class ExtensionRule { Periodic, Mirror, Copy };
ExtensionRule extension_rule(BoundaryKind kind);

/// Values at the centres of the twice-finer mesh from centre values on a
/// uniform line, by two passes of limited WENO-Z midpoint interpolation.
std::vector<double> prolong_line(const std::vector<double>& values, ExtensionRule lo, ExtensionRule hi,
                                 const WenoParams& weno = {});

/// Dimension-by-dimension prolongation to the twice-finer grid.
template <int Dim>
ScalarField<Dim> prolong(const ScalarField<Dim>& f, const BoundarySet<Dim>& bc, const WenoParams& weno = {});

/// Arithmetic mean of the fields after prolonging each to the finest one.
/// Successive fields must double the cell count on every axis.
template <int Dim>
ScalarField<Dim> cesaro_average(const std::vector<ScalarField<Dim>>& fields, const BoundarySet<Dim>& bc);

template <int Dim>
ScalarField<Dim> density_field(const ConservedField<Dim>& u);

/// Runs the problem on 2^first .. 2^last cells per unit length and returns
/// the Cesaro average of the density on the finest mesh.
template <int Dim>
ScalarField<Dim> cesaro_study(const std::string& problem, SchemeMode mode, int first_level, int last_level,
                              std::optional<double> final_time = {});

// Mode comparisons.

/// L1 distance between a density field and a finer reference sampled at
/// the coarse centres. Cell counts must be integer multiples.
template <int Dim>
double l1_to_reference(const ScalarField<Dim>& coarse, const ScalarField<Dim>& fine);

struct ModeReport {
  SchemeMode mode = SchemeMode::Limited;
  double wall_seconds = 0.0;
  int steps = 0;
  double l1_error = 0.0;
};

struct CompareReport {
  std::string problem;
  std::array<int, 2> cells{0, 0};
  std::array<int, 2> reference_cells{0, 0};
  std::vector<ModeReport> modes;

  /// wall(adaptive) / wall(limited) when both were run.
  std::optional<double> time_ratio() const;
};

/// Runs each mode `repeats` times (minimum wall time kept) and measures
/// the density L1 distance to a limited-mode reference on reference_cells.
CompareReport compare_runs(const std::string& problem, std::array<int, 2> cells, std::array<int, 2> reference_cells,
                           const std::vector<SchemeMode>& modes, int repeats = 1,
                           std::optional<double> final_time = {});

}  // namespace aweno
