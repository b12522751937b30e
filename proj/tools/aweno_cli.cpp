// Command-line front end: single runs, LSI rate tables, mode comparisons
// and Cesaro averages.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aweno/harness.hpp"

using namespace aweno;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_number_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

void print_rate_tables(const std::vector<RateTable>& tables) {
  for (const auto& t : tables) {
    std::printf("window [%g, %g]\n", t.a, t.b);
    std::printf("%8s %14s %14s %8s\n", "cells", "dx", "max Dbar", "rate");
    for (const auto& r : t.rows) {
      if (r.rate)
        std::printf("%8d %14.6e %14.6e %8.2f\n", r.cells, r.dx, r.value, *r.rate);
      else
        std::printf("%8d %14.6e %14.6e %8s\n", r.cells, r.dx, r.value, "-");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive A-WENO solver for the Euler equations"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "evolve one problem and write its output files");
  std::string config_path, problem, mode, out, snapshots, indicator, smear;
  double dx = 0, C = 0, cfl = 0, tfinal = 0;
  int nx = 0, ny = 0;
  bool no_symmetry = false;
  bool no_fallback = false;
  run_cmd->add_option("--config", config_path, "key = value config file");
  auto* o_problem = run_cmd->add_option("--problem", problem, "problem name (see `list`)");
  auto* o_mode = run_cmd->add_option("--mode", mode, "limited | adaptive | nonlimited");
  auto* o_dx = run_cmd->add_option("--dx", dx, "mesh spacing");
  auto* o_nx = run_cmd->add_option("--nx", nx, "cells in x");
  auto* o_ny = run_cmd->add_option("--ny", ny, "cells in y");
  auto* o_C = run_cmd->add_option("--C", C, "adaption constant");
  auto* o_cfl = run_cmd->add_option("--cfl", cfl, "CFL number");
  auto* o_tfinal = run_cmd->add_option("--tfinal", tfinal, "final time");
  auto* o_out = run_cmd->add_option("--out", out, "output directory");
  auto* o_snap = run_cmd->add_option("--snapshots", snapshots, "comma-separated snapshot times");
  auto* o_ind = run_cmd->add_option("--indicator", indicator, "pressure | density | component:<k>");
  auto* o_smear = run_cmd->add_option("--smear", smear, "printed | normalized 1-D LSI smear");
  run_cmd->add_flag("--no-symmetry", no_symmetry, "disable symmetry enforcement");
  run_cmd->add_flag("--no-node-fallback", no_fallback, "fail instead of using node values at nonphysical faces");

  // rate-table
  auto* rate_cmd = app.add_subcommand("rate-table", "windowed LSI maxima and rates over a mesh sequence");
  std::string rate_problem = "sod", rate_cells = "100,200,400,800,1600", rate_smear = "printed";
  std::vector<std::string> windows;
  double rate_tfinal = 0;
  rate_cmd->add_option("--problem", rate_problem, "1-D problem name");
  rate_cmd->add_option("--cells", rate_cells, "comma-separated cell counts");
  rate_cmd->add_option("--window", windows, "a,b (repeatable); default 0.35,0.45 0.6,0.7 and the whole domain");
  auto* o_rate_t = rate_cmd->add_option("--tfinal", rate_tfinal, "final time");
  rate_cmd->add_option("--smear", rate_smear, "printed | normalized");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "adaptive versus limited timing and reference errors");
  std::string cmp_problem = "sod";
  int cmp_nx = 0, cmp_ny = 0, ref_nx = 0, ref_ny = 0, repeats = 3;
  double cmp_tfinal = 0;
  cmp_cmd->add_option("--problem", cmp_problem, "problem name");
  cmp_cmd->add_option("--nx", cmp_nx, "cells in x");
  cmp_cmd->add_option("--ny", cmp_ny, "cells in y");
  cmp_cmd->add_option("--ref-nx", ref_nx, "reference cells in x")->required();
  cmp_cmd->add_option("--ref-ny", ref_ny, "reference cells in y");
  cmp_cmd->add_option("--repeats", repeats, "timing repeats (minimum is kept)");
  auto* o_cmp_t = cmp_cmd->add_option("--tfinal", cmp_tfinal, "final time");

  // cesaro
  auto* ces_cmd = app.add_subcommand("cesaro", "Cesaro average of the density over nested meshes");
  std::string ces_problem = "kh", ces_mode = "adaptive", ces_out = "cesaro.csv";
  int first = 5, last = 7;
  double ces_tfinal = 0;
  ces_cmd->add_option("--problem", ces_problem, "problem name");
  ces_cmd->add_option("--mode", ces_mode, "limited | adaptive | nonlimited");
  ces_cmd->add_option("--first", first, "coarsest level (2^first cells per unit length)");
  ces_cmd->add_option("--last", last, "finest level");
  auto* o_ces_t = ces_cmd->add_option("--tfinal", ces_tfinal, "final time");
  ces_cmd->add_option("--out", ces_out, "output csv");

  auto* list_cmd = app.add_subcommand("list", "list the registered problems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      RunConfig cfg;
      if (!config_path.empty()) apply_key_values(cfg, read_key_values(config_path));
      if (*o_problem) cfg.problem = problem;
      if (*o_mode) cfg.mode = parse_scheme_mode(mode);
      if (*o_dx) cfg.dx = dx;
      if (*o_nx) cfg.cells[0] = nx;
      if (*o_ny) cfg.cells[1] = ny;
      if (*o_C) cfg.adaption_constant = C;
      if (*o_cfl) cfg.cfl = cfl;
      if (*o_tfinal) cfg.final_time = tfinal;
      if (*o_out) cfg.out_dir = out;
      if (*o_snap) cfg.snapshot_times = parse_number_list(snapshots);
      if (*o_ind) cfg.indicator = IndicatorSelector::parse(indicator);
      if (*o_smear) cfg.smear = parse_smear_stencil(smear);
      if (no_symmetry) cfg.symmetry = false;
      if (no_fallback) cfg.node_fallback = false;
      std::string message;
      const int status = run_with_status(cfg, &message);
      if (status != 0) {
        std::cerr << message << "\n";
        return status;
      }
      std::ifstream summary(cfg.out_dir + "/summary.txt");
      std::cout << summary.rdbuf();
      return 0;
    }
    if (*rate_cmd) {
      std::vector<std::array<double, 2>> w;
      const ProblemSpec spec = make_problem(rate_problem);
      if (windows.empty()) {
        w = {{0.25, 0.35}, {0.35, 0.45}, {0.6, 0.7}, {spec.lo[0], spec.hi[0]}};
      } else {
        for (const auto& s : windows) {
          const auto ab = parse_number_list(s);
          if (ab.size() != 2) throw ConfigError("window must be a,b");
          w.push_back({ab[0], ab[1]});
        }
      }
      std::optional<double> T;
      if (*o_rate_t) T = rate_tfinal;
      print_rate_tables(rate_table(rate_problem, w, parse_int_list(rate_cells), T, parse_smear_stencil(rate_smear)));
      return 0;
    }
    if (*cmp_cmd) {
      std::optional<double> T;
      if (*o_cmp_t) T = cmp_tfinal;
      const ProblemSpec spec = make_problem(cmp_problem);
      std::array<int, 2> cells{cmp_nx > 0 ? cmp_nx : spec.default_cells[0], cmp_ny > 0 ? cmp_ny : spec.default_cells[1]};
      std::array<int, 2> ref{ref_nx, ref_ny > 0 ? ref_ny : (spec.dimension == 2 ? ref_nx : 1)};
      const CompareReport rep =
          compare_runs(cmp_problem, cells, ref, {SchemeMode::Limited, SchemeMode::Adaptive}, repeats, T);
      std::printf("%-10s %12s %8s %14s\n", "mode", "wall [s]", "steps", "L1(rho)");
      for (const auto& m : rep.modes)
        std::printf("%-10s %12.4f %8d %14.6e\n", to_string(m.mode).c_str(), m.wall_seconds, m.steps, m.l1_error);
      if (auto r = rep.time_ratio()) std::printf("adaptive/limited wall-clock ratio: %.3f\n", *r);
      return 0;
    }
    if (*ces_cmd) {
      std::optional<double> T;
      if (*o_ces_t) T = ces_tfinal;
      const ProblemSpec spec = make_problem(ces_problem);
      const SchemeMode m = parse_scheme_mode(ces_mode);
      if (spec.dimension == 1)
        write_scalar_csv<1>(ces_out, cesaro_study<1>(ces_problem, m, first, last, T), "rho");
      else
        write_scalar_csv<2>(ces_out, cesaro_study<2>(ces_problem, m, first, last, T), "rho");
      std::printf("averaged %d fields into %s\n", last - first + 1, ces_out.c_str());
      return 0;
    }
    if (*list_cmd) {
      for (const auto& name : problem_names()) {
        const ProblemSpec s = make_problem(name);
        std::printf("%-14s %d-D  T=%-5g C=%-7g %s\n", name.c_str(), s.dimension, s.final_time, s.adaption_constant,
                    s.title.c_str());
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const StepFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const PhysicalStateError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return 0;
}
