#include "aweno/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace aweno {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': '" + text + "'");
  }
}

int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for '" + key + "': '" + text + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "on" || text == "true" || text == "1" || text == "yes") return true;
  if (text == "off" || text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("bad flag for '" + key + "': '" + text + "'");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write '" + path + "'");
  return os;
}

template <int Dim>
RunSummary run_dim(const RunConfig& cfg, const ProblemSpec& spec) {
  const EvolveOptions opts = cfg.evolve_options(spec);
  fs::create_directories(cfg.out_dir);
  const EvolveResult<Dim> res = evolve<Dim>(spec, opts);
  const fs::path dir(cfg.out_dir);

  write_field_csv<Dim>((dir / "solution.csv").string(), res.solution, spec.gas);
  for (const auto& [t, field] : res.snapshots) {
    if (t == res.time) continue;
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_t%.6g.csv", t);
    write_field_csv<Dim>((dir / name).string(), field, spec.gas);
  }
  write_mask_csv<Dim>((dir / "mask.csv").string(), res.last_mask, res.solution.grid());
  if (res.last_smoothed) write_scalar_csv<Dim>((dir / "lsi.csv").string(), *res.last_smoothed, "dbar");
  write_steps_csv((dir / "steps.csv").string(), res.steps);

  RunSummary s;
  s.problem = spec.name;
  s.mode = cfg.mode;
  s.dimension = Dim;
  for (int a = 0; a < Dim; ++a) s.cells[a] = res.solution.grid().cells(a);
  s.adaption_constant = res.adaption_constant;
  s.final_time = res.time;
  s.steps = static_cast<int>(res.steps.size());
  s.wall_seconds = res.wall_seconds;
  s.final_rough_fraction = res.steps.empty() ? 0.0 : res.steps.back().rough_fraction;
  double sum = 0.0;
  for (const auto& r : res.steps) sum += r.rough_fraction;
  s.mean_rough_fraction = res.steps.empty() ? 0.0 : sum / res.steps.size();

  std::ofstream os = open_out((dir / "summary.txt").string());
  os << "problem = " << s.problem << "\n"
     << "mode = " << to_string(s.mode) << "\n"
     << "dimension = " << Dim << "\n"
     << "cells = " << s.cells[0];
  if (Dim == 2) os << "x" << s.cells[1];
  os << "\n"
     << "dx = " << format_double(res.solution.grid().spacing(0)) << "\n"
     << "C = " << format_double(s.adaption_constant) << "\n"
     << "cfl = " << format_double(cfg.cfl) << "\n"
     << "indicator = " << cfg.indicator.to_string() << "\n"
     << "smear = " << to_string(cfg.smear) << "\n"
     << "final_time = " << format_double(s.final_time) << "\n"
     << "steps = " << s.steps << "\n"
     << "wall_seconds = " << format_double(s.wall_seconds) << "\n"
     << "node_fallback = " << (cfg.node_fallback ? "true" : "false") << "\n"
     << "fallback_interfaces = " << res.fallback_interfaces << "\n"
     << "threshold_last_step = " << format_double(res.last_threshold) << "\n"
     << "rough_fraction_final = " << format_double(s.final_rough_fraction) << "\n"
     << "rough_fraction_mean = " << format_double(s.mean_rough_fraction) << "\n";
  return s;
}

}  // namespace

void RunConfig::validate(const ProblemSpec& spec) const {
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ConfigError("CFL number must lie in (0, 0.5]");
  if (dx && !(*dx > 0.0)) throw ConfigError("dx must be positive");
  if (adaption_constant && !(*adaption_constant >= 0.0)) throw ConfigError("C must be nonnegative");
  const double T = final_time.value_or(spec.final_time);
  if (!(T > 0.0)) throw ConfigError("final time must be positive");
  for (double t : snapshot_times)
    if (!(t >= 0.0 && t <= T)) throw ConfigError("snapshot time " + format_double(t) + " outside [0, T]");
  if (out_dir.empty()) throw ConfigError("output directory must not be empty");
}

EvolveOptions RunConfig::evolve_options(const ProblemSpec& spec) const {
  validate(spec);
  EvolveOptions o;
  o.mode = mode;
  if (dx) o.cells = spec.cells_for_spacing(*dx);
  for (int a = 0; a < 2; ++a)
    if (cells[a] > 0) o.cells[a] = cells[a];
  o.adaption_constant = adaption_constant;
  o.final_time = final_time;
  o.cfl = cfl;
  o.indicator = indicator;
  o.smear = smear;
  o.enforce_symmetry = symmetry;
  o.scheme.node_fallback = node_fallback;
  for (double t : snapshot_times)
    if (t > 0.0) o.snapshot_times.push_back(t);
  return o;
}

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_key_values(ss.str());
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double("list", item));
  }
  return out;
}

void apply_key_values(RunConfig& cfg, const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "problem") cfg.problem = value;
    else if (key == "mode") cfg.mode = parse_scheme_mode(value);
    else if (key == "dx") cfg.dx = parse_double(key, value);
    else if (key == "nx") cfg.cells[0] = parse_int(key, value);
    else if (key == "ny") cfg.cells[1] = parse_int(key, value);
    else if (key == "C") cfg.adaption_constant = parse_double(key, value);
    else if (key == "cfl") cfg.cfl = parse_double(key, value);
    else if (key == "tfinal") cfg.final_time = parse_double(key, value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "snapshots") cfg.snapshot_times = parse_number_list(value);
    else if (key == "indicator") cfg.indicator = IndicatorSelector::parse(value);
    else if (key == "smear") cfg.smear = parse_smear_stencil(value);
    else if (key == "symmetry") cfg.symmetry = parse_bool(key, value);
    else if (key == "node_fallback") cfg.node_fallback = parse_bool(key, value);
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

RunSummary run(const RunConfig& cfg) {
  const ProblemSpec spec = make_problem(cfg.problem);
  return spec.dimension == 1 ? run_dim<1>(cfg, spec) : run_dim<2>(cfg, spec);
}

int run_with_status(const RunConfig& cfg, std::string* message) {
  try {
    run(cfg);
    return 0;
  } catch (const ConfigError& e) {
    if (message) *message = std::string("config error: ") + e.what();
    return kExitConfigError;
  } catch (const StepFailure& e) {
    if (message) *message = std::string("solver failure: ") + e.what();
    try {
      fs::create_directories(cfg.out_dir);
      std::ofstream os((fs::path(cfg.out_dir) / "failure.txt").string());
      os << "stage = " << e.stage() << "\nlocation = " << e.location() << "\nmessage = " << e.what() << "\n";
    } catch (const std::exception&) {
    }
    return kExitSolverFailure;
  } catch (const PhysicalStateError& e) {
    if (message) *message = std::string("solver failure: ") + e.what();
    return kExitSolverFailure;
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <int Dim>
void write_field_csv(const std::string& path, const ConservedField<Dim>& u, const GasParams& gas) {
  std::ofstream os = open_out(path);
  const Grid<Dim>& g = u.grid();
  os << (Dim == 1 ? "x,rho,u,p,E\n" : "x,y,rho,u,v,p,E\n");
  u.for_each_interior([&](const ConservedState<Dim>& U, int i, int j) {
    const PrimitiveState w = cons_to_prim<Dim>(U, gas);
    os << format_double(g.axis(0).center(i)) << ',';
    if constexpr (Dim == 2) os << format_double(g.axis(1).center(j)) << ',';
    (void)j;
    os << format_double(w.rho) << ',' << format_double(w.u) << ',';
    if constexpr (Dim == 2) os << format_double(w.v) << ',';
    os << format_double(w.p) << ',' << format_double(U[energy_index<Dim>()]) << '\n';
  });
}

template <int Dim>
void write_mask_csv(const std::string& path, const RoughnessMask<Dim>& mask, const Grid<Dim>& grid) {
  std::ofstream os = open_out(path);
  os << (Dim == 1 ? "x,axis,flag\n" : "x,y,axis,flag\n");
  for (int axis = 0; axis < Dim; ++axis) {
    for (int j = 0; j < mask.extent(axis, 1); ++j)
      for (int i = 0; i < mask.extent(axis, 0); ++i) {
        if constexpr (Dim == 1) {
          os << format_double(grid.axis(0).face(i)) << ",0," << (mask.rough(0, i) ? 1 : 0) << '\n';
        } else {
          const double x = axis == 0 ? grid.axis(0).face(i) : grid.axis(0).center(i);
          const double y = axis == 0 ? grid.axis(1).center(j) : grid.axis(1).face(j);
          os << format_double(x) << ',' << format_double(y) << ',' << axis << ',' << (mask.rough(axis, i, j) ? 1 : 0)
             << '\n';
        }
      }
  }
}

template <int Dim>
void write_scalar_csv(const std::string& path, const ScalarField<Dim>& f, const std::string& name) {
  std::ofstream os = open_out(path);
  const Grid<Dim>& g = f.grid();
  os << (Dim == 1 ? "x," : "x,y,") << name << '\n';
  f.for_each_interior([&](const Vec<1>& v, int i, int j) {
    os << format_double(g.axis(0).center(i)) << ',';
    if constexpr (Dim == 2) os << format_double(g.axis(1).center(j)) << ',';
    (void)j;
    os << format_double(v[0]) << '\n';
  });
}

void write_steps_csv(const std::string& path, const std::vector<StepRecord>& steps) {
  std::ofstream os = open_out(path);
  os << "step,time,dt,rough_fraction,wall_seconds,min_rho,min_p,symmetry_defect\n";
  for (const auto& r : steps) {
    os << r.index << ',' << format_double(r.time) << ',' << format_double(r.dt) << ','
       << format_double(r.rough_fraction) << ',' << format_double(r.wall_seconds) << ','
       << format_double(r.min_density) << ',' << format_double(r.min_pressure) << ','
       << format_double(r.symmetry_defect) << '\n';
  }
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  throw ConfigError("no column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty csv '" + path + "'");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(trim(cell));
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(parse_double("csv", trim(cell)));
    if (row.size() != t.header.size()) throw ConfigError("ragged csv row in '" + path + "'");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<std::optional<double>> successive_rates(const std::vector<double>& values) {
  std::vector<std::optional<double>> r(values.size());
  for (std::size_t i = 1; i < values.size(); ++i) r[i] = std::log2(values[i - 1] / values[i]);
  return r;
}

double window_max(const ScalarField<1>& f, double a, double b) {
  double m = -std::numeric_limits<double>::infinity();
  const Axis& ax = f.grid().axis(0);
  for (int i = 0; i < ax.cells; ++i) {
    const double x = ax.center(i);
    if (x >= a && x <= b) m = std::max(m, f(i)[0]);
  }
  return m;
}

RateTable make_rate_table(double a, double b, const std::vector<int>& cells, const std::vector<double>& dx,
                          const std::vector<double>& values) {
  RateTable t{a, b, {}};
  const auto rates = successive_rates(values);
  for (std::size_t i = 0; i < values.size(); ++i) t.rows.push_back({cells[i], dx[i], values[i], rates[i]});
  return t;
}

std::vector<RateTable> rate_table(const std::string& problem, const std::vector<std::array<double, 2>>& windows,
                                  const std::vector<int>& cells, std::optional<double> final_time,
                                  SmearStencil smear) {
  const ProblemSpec spec = make_problem(problem);
  if (spec.dimension != 1) throw ConfigError("rate tables are defined for 1-D problems");
  std::vector<std::vector<double>> values(windows.size());
  std::vector<double> dx;
  for (int n : cells) {
    EvolveOptions o;
    o.mode = SchemeMode::Limited;
    o.cells = {n, 1};
    o.final_time = final_time;
    o.smear = smear;
    const EvolveResult<1> res = evolve<1>(spec, o);
    if (!res.last_smoothed) throw ConfigError("run too short for an LSI value");
    dx.push_back(res.solution.grid().spacing(0));
    for (std::size_t w = 0; w < windows.size(); ++w)
      values[w].push_back(window_max(*res.last_smoothed, windows[w][0], windows[w][1]));
  }
  std::vector<RateTable> out;
  for (std::size_t w = 0; w < windows.size(); ++w)
    out.push_back(make_rate_table(windows[w][0], windows[w][1], cells, dx, values[w]));
  return out;
}

ExtensionRule extension_rule(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Periodic: return ExtensionRule::Periodic;
    case BoundaryKind::SolidWall: return ExtensionRule::Mirror;
    default: return ExtensionRule::Copy;
  }
}

std::vector<double> prolong_line(const std::vector<double>& values, ExtensionRule lo, ExtensionRule hi,
                                 const WenoParams& weno) {
  constexpr int pad = 4;
  const int n = static_cast<int>(values.size());
  if (n < pad) throw ConfigError("line too short to prolong");
  auto ext = [&](int k) {
    if (k < 0) {
      switch (lo) {
        case ExtensionRule::Periodic: return values[k + n];
        case ExtensionRule::Mirror: return values[-1 - k];
        case ExtensionRule::Copy: return values[0];
      }
    }
    if (k >= n) {
      switch (hi) {
        case ExtensionRule::Periodic: return values[k - n];
        case ExtensionRule::Mirror: return values[2 * n - 1 - k];
        case ExtensionRule::Copy: return values[n - 1];
      }
    }
    return values[k];
  };
  // Half-spaced sequence s_m at x = m h/2 (m in [-2, 2n+2]): odd m are the
  // original centres, even m the face midpoints from the first pass.
  const int m_lo = -2, m_hi = 2 * n + 2;
  std::vector<double> s(m_hi - m_lo + 1);
  for (int m = m_lo; m <= m_hi; ++m) {
    double v;
    if (m % 2 != 0) {
      v = ext((m - 1) / 2);  // m - 1 is even, so this is exact
    } else {
      const int face = m / 2;
      Stencil6 st;
      for (int q = 0; q < 6; ++q) st[q] = ext(face - 3 + q);
      v = interpolate_left(st, InterpolationMode::Limited, weno);
    }
    s[m - m_lo] = v;
  }
  std::vector<double> out(2 * n);
  for (int k = 0; k < 2 * n; ++k) {
    Stencil6 st;
    for (int q = 0; q < 6; ++q) st[q] = s[k - 2 + q - m_lo];
    out[k] = interpolate_left(st, InterpolationMode::Limited, weno);
  }
  return out;
}

template <int Dim>
ScalarField<Dim> prolong(const ScalarField<Dim>& f, const BoundarySet<Dim>& bc, const WenoParams& weno) {
  const Grid<Dim>& g = f.grid();
  std::array<Axis, Dim> axes;
  for (int a = 0; a < Dim; ++a) axes[a] = Axis{g.axis(a).lo, g.axis(a).hi, 2 * g.cells(a)};
  ScalarField<Dim> out{Grid<Dim>(axes, g.ghosts())};
  const ExtensionRule xlo = extension_rule(bc.low(0).kind), xhi = extension_rule(bc.high(0).kind);
  const int nx = g.cells(0);
  if constexpr (Dim == 1) {
    std::vector<double> line(nx);
    for (int i = 0; i < nx; ++i) line[i] = f(i)[0];
    const auto fine = prolong_line(line, xlo, xhi, weno);
    for (int i = 0; i < 2 * nx; ++i) out(i)[0] = fine[i];
  } else {
    const int ny = g.cells(1);
    const ExtensionRule ylo = extension_rule(bc.low(1).kind), yhi = extension_rule(bc.high(1).kind);
    std::vector<std::vector<double>> rows(ny);
    std::vector<double> line(nx);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) line[i] = f(i, j)[0];
      rows[j] = prolong_line(line, xlo, xhi, weno);
    }
    std::vector<double> col(ny);
    for (int i = 0; i < 2 * nx; ++i) {
      for (int j = 0; j < ny; ++j) col[j] = rows[j][i];
      const auto fine = prolong_line(col, ylo, yhi, weno);
      for (int j = 0; j < 2 * ny; ++j) out(i, j)[0] = fine[j];
    }
  }
  return out;
}

template <int Dim>
ScalarField<Dim> cesaro_average(const std::vector<ScalarField<Dim>>& fields, const BoundarySet<Dim>& bc) {
  if (fields.empty()) throw ConfigError("no fields to average");
  for (std::size_t l = 1; l < fields.size(); ++l)
    for (int a = 0; a < Dim; ++a)
      if (fields[l].grid().cells(a) != 2 * fields[l - 1].grid().cells(a))
        throw ConfigError("meshes are not nested by factors of two");
  ScalarField<Dim> sum = fields.back();
  for (std::size_t l = 0; l + 1 < fields.size(); ++l) {
    ScalarField<Dim> p = fields[l];
    for (std::size_t k = l; k + 1 < fields.size(); ++k) p = prolong<Dim>(p, bc);
    auto& s = sum.values();
    const auto& q = p.values();
    for (std::size_t i = 0; i < s.size(); ++i) s[i][0] += q[i][0];
  }
  const double count = static_cast<double>(fields.size());
  for (auto& v : sum.values()) v[0] /= count;
  return sum;
}

template <int Dim>
ScalarField<Dim> density_field(const ConservedField<Dim>& u) {
  ScalarField<Dim> rho(u.grid());
  auto& r = rho.values();
  const auto& src = u.values();
  for (std::size_t i = 0; i < r.size(); ++i) r[i][0] = src[i][0];
  return rho;
}

template <int Dim>
ScalarField<Dim> cesaro_study(const std::string& problem, SchemeMode mode, int first_level, int last_level,
                              std::optional<double> final_time) {
  const ProblemSpec spec = make_problem(problem);
  if (spec.dimension != Dim) throw ConfigError("problem '" + problem + "' is not " + std::to_string(Dim) + "-D");
  if (first_level > last_level) throw ConfigError("empty level range");
  std::vector<ScalarField<Dim>> fields;
  for (int l = first_level; l <= last_level; ++l) {
    EvolveOptions o;
    o.mode = mode;
    o.final_time = final_time;
    for (int a = 0; a < Dim; ++a)
      o.cells[a] = static_cast<int>(std::lround((spec.hi[a] - spec.lo[a]) * std::ldexp(1.0, l)));
    fields.push_back(density_field<Dim>(evolve<Dim>(spec, o).solution));
  }
  return cesaro_average<Dim>(fields, spec.boundaries<Dim>());
}

template <int Dim>
double l1_to_reference(const ScalarField<Dim>& coarse, const ScalarField<Dim>& fine) {
  const Grid<Dim>& gc = coarse.grid();
  const Grid<Dim>& gf = fine.grid();
  std::array<int, Dim> r;
  for (int a = 0; a < Dim; ++a) {
    if (gf.cells(a) % gc.cells(a) != 0) throw ConfigError("reference mesh is not an integer refinement");
    r[a] = gf.cells(a) / gc.cells(a);
  }
  // fine cells whose centres straddle (or hit) coarse centre i
  auto picks = [](int i, int ratio) {
    std::array<int, 2> p{ratio * i + ratio / 2, ratio * i + ratio / 2};
    if (ratio % 2 == 0) p[0] -= 1;
    return p;
  };
  double sum = 0.0;
  if constexpr (Dim == 1) {
    for (int i = 0; i < gc.cells(0); ++i) {
      const auto p = picks(i, r[0]);
      const double ref = 0.5 * (fine(p[0])[0] + fine(p[1])[0]);
      sum += std::abs(coarse(i)[0] - ref);
    }
  } else {
    for (int j = 0; j < gc.cells(1); ++j)
      for (int i = 0; i < gc.cells(0); ++i) {
        const auto px = picks(i, r[0]);
        const auto py = picks(j, r[1]);
        const double ref =
            0.25 * (fine(px[0], py[0])[0] + fine(px[1], py[0])[0] + fine(px[0], py[1])[0] + fine(px[1], py[1])[0]);
        sum += std::abs(coarse(i, j)[0] - ref);
      }
  }
  return sum * gc.cell_volume();
}

std::optional<double> CompareReport::time_ratio() const {
  std::optional<double> lim, ada;
  for (const auto& m : modes) {
    if (m.mode == SchemeMode::Limited) lim = m.wall_seconds;
    if (m.mode == SchemeMode::Adaptive) ada = m.wall_seconds;
  }
  if (!lim || !ada || !(*lim > 0.0)) return std::nullopt;
  return *ada / *lim;
}

namespace {

template <int Dim>
CompareReport compare_dim(const ProblemSpec& spec, std::array<int, 2> cells, std::array<int, 2> reference_cells,
                          const std::vector<SchemeMode>& modes, int repeats, std::optional<double> final_time) {
  CompareReport rep;
  rep.problem = spec.name;
  rep.cells = cells;
  rep.reference_cells = reference_cells;
  EvolveOptions ro;
  ro.mode = SchemeMode::Limited;
  ro.cells = reference_cells;
  ro.final_time = final_time;
  const ScalarField<Dim> ref = density_field<Dim>(evolve<Dim>(spec, ro).solution);
  for (SchemeMode mode : modes) {
    ModeReport m;
    m.mode = mode;
    m.wall_seconds = std::numeric_limits<double>::infinity();
    for (int k = 0; k < std::max(1, repeats); ++k) {
      EvolveOptions o;
      o.mode = mode;
      o.cells = cells;
      o.final_time = final_time;
      const EvolveResult<Dim> res = evolve<Dim>(spec, o);
      m.wall_seconds = std::min(m.wall_seconds, res.wall_seconds);
      m.steps = static_cast<int>(res.steps.size());
      m.l1_error = l1_to_reference<Dim>(density_field<Dim>(res.solution), ref);
    }
    rep.modes.push_back(m);
  }
  return rep;
}

}  // namespace

CompareReport compare_runs(const std::string& problem, std::array<int, 2> cells, std::array<int, 2> reference_cells,
                           const std::vector<SchemeMode>& modes, int repeats, std::optional<double> final_time) {
  const ProblemSpec spec = make_problem(problem);
  return spec.dimension == 1 ? compare_dim<1>(spec, cells, reference_cells, modes, repeats, final_time)
                             : compare_dim<2>(spec, cells, reference_cells, modes, repeats, final_time);
}

template void write_field_csv<1>(const std::string&, const ConservedField<1>&, const GasParams&);
template void write_field_csv<2>(const std::string&, const ConservedField<2>&, const GasParams&);
template void write_mask_csv<1>(const std::string&, const RoughnessMask<1>&, const Grid<1>&);
template void write_mask_csv<2>(const std::string&, const RoughnessMask<2>&, const Grid<2>&);
template void write_scalar_csv<1>(const std::string&, const ScalarField<1>&, const std::string&);
template void write_scalar_csv<2>(const std::string&, const ScalarField<2>&, const std::string&);
template ScalarField<1> prolong<1>(const ScalarField<1>&, const BoundarySet<1>&, const WenoParams&);
template ScalarField<2> prolong<2>(const ScalarField<2>&, const BoundarySet<2>&, const WenoParams&);
template ScalarField<1> cesaro_average<1>(const std::vector<ScalarField<1>>&, const BoundarySet<1>&);
template ScalarField<2> cesaro_average<2>(const std::vector<ScalarField<2>>&, const BoundarySet<2>&);
template ScalarField<1> density_field<1>(const ConservedField<1>&);
template ScalarField<2> density_field<2>(const ConservedField<2>&);
template ScalarField<1> cesaro_study<1>(const std::string&, SchemeMode, int, int, std::optional<double>);
template ScalarField<2> cesaro_study<2>(const std::string&, SchemeMode, int, int, std::optional<double>);
template double l1_to_reference<1>(const ScalarField<1>&, const ScalarField<1>&);
template double l1_to_reference<2>(const ScalarField<2>&, const ScalarField<2>&);

}  // namespace aweno
