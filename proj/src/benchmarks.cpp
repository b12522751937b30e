#include "aweno/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aweno {

namespace {

using Prim = PrimitiveState;

ProblemSpec one_d(std::string name, std::string title, double lo, double hi, int cells, double T, double C) {
  ProblemSpec s;
  s.name = std::move(name);
  s.title = std::move(title);
  s.dimension = 1;
  s.lo = {lo, 0.0};
  s.hi = {hi, 1.0};
  s.default_cells = {cells, 1};
  s.final_time = T;
  s.adaption_constant = C;
  return s;
}

ProblemSpec two_d(std::string name, std::string title, std::array<double, 2> lo, std::array<double, 2> hi,
                  std::array<int, 2> cells, double T, double C) {
  ProblemSpec s;
  s.name = std::move(name);
  s.title = std::move(title);
  s.dimension = 2;
  s.lo = lo;
  s.hi = hi;
  s.default_cells = cells;
  s.final_time = T;
  s.adaption_constant = C;
  return s;
}

ProblemSpec sod() {
  ProblemSpec s = one_d("sod", "Sod shock tube", 0.0, 1.0, 200, 0.16, 0.05);
  s.initial = [](double x, double) { return x < 0.5 ? Prim{1.0, 0.0, 0.0, 1.0} : Prim{0.125, 0.0, 0.0, 0.1}; };
  return s;
}

ProblemSpec shock_bubble() {
  ProblemSpec s = one_d("shock-bubble", "shock-bubble interaction", -1.0, 1.0, 200, 3.0, 0.0015);
  s.faces[0] = FaceCondition::wall();
  s.initial = [](double x, double) {
    if (std::abs(x) < 0.25) return Prim{13.1538, 0.0, 0.0, 1.0};
    if (x > 0.75) return Prim{1.3333, -0.3535, 0.0, 1.5};
    return Prim{1.0, 0.0, 0.0, 1.0};
  };
  return s;
}

ProblemSpec shock_entropy() {
  ProblemSpec s = one_d("shock-entropy", "shock-entropy wave interaction", -5.0, 5.0, 400, 5.0, 0.006);
  s.initial = [](double x, double) {
    if (x < -4.5) return Prim{1.51695, 0.523346, 0.0, 1.805};
    return Prim{1.0 + 0.1 * std::sin(20.0 * x), 0.0, 0.0, 1.0};
  };
  return s;
}

ProblemSpec shock_density() {
  ProblemSpec s = one_d("shock-density", "shock-density wave interaction", -5.0, 15.0, 400, 5.0, 0.04);
  s.initial = [](double x, double) {
    if (x < -4.0) return Prim{27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 0.0, 31.0 / 3.0};
    return Prim{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0};
  };
  return s;
}

ProblemSpec riemann2d() {
  ProblemSpec s = two_d("riemann2d", "2-D Riemann problem, configuration 3", {0.0, 0.0}, {1.2, 1.2}, {1000, 1000},
                        1.0, 3.0);
  s.initial = [](double x, double y) {
    if (x > 1.0 && y > 1.0) return Prim{1.5, 0.0, 0.0, 1.5};
    if (x < 1.0 && y > 1.0) return Prim{0.5323, 1.206, 0.0, 0.3};
    if (x < 1.0 && y < 1.0) return Prim{0.138, 1.206, 1.206, 0.029};
    return Prim{0.5323, 0.0, 1.206, 0.3};
  };
  return s;
}

ProblemSpec explosion() {
  ProblemSpec s = two_d("explosion", "explosion", {0.0, 0.0}, {1.5, 1.5}, {400, 400}, 3.2, 1.0);
  s.faces[0] = FaceCondition::wall();
  s.faces[2] = FaceCondition::wall();
  s.symmetry = SymmetryRule::Diagonal;
  s.initial = [](double x, double y) {
    return x * x + y * y < 0.16 ? Prim{1.0, 0.0, 0.0, 1.0} : Prim{0.125, 0.0, 0.0, 0.1};
  };
  return s;
}

ProblemSpec implosion() {
  ProblemSpec s = two_d("implosion", "implosion", {0.0, 0.0}, {0.3, 0.3}, {400, 400}, 2.5, 3.0);
  s.faces.fill(FaceCondition::wall());
  s.symmetry = SymmetryRule::Diagonal;
  s.initial = [](double x, double y) {
    return std::abs(x) + std::abs(y) < 0.15 ? Prim{0.125, 0.0, 0.0, 0.14} : Prim{1.0, 0.0, 0.0, 1.0};
  };
  return s;
}

ProblemSpec kelvin_helmholtz() {
  ProblemSpec s = two_d("kh", "Kelvin-Helmholtz instability", {-0.5, -0.5}, {0.5, 0.5}, {400, 400}, 4.0, 1.0);
  s.faces.fill(FaceCondition::periodic());
  s.initial = [](double x, double y) {
    constexpr double L = 0.00625;
    Prim w;
    if (y < -0.25) {
      w.rho = 1.0;
      w.u = -0.5 + 0.5 * std::exp((y + 0.25) / L);
    } else if (y < 0.0) {
      w.rho = 2.0;
      w.u = 0.5 - 0.5 * std::exp((-y - 0.25) / L);
    } else if (y < 0.25) {
      w.rho = 2.0;
      w.u = 0.5 - 0.5 * std::exp((y - 0.25) / L);
    } else {
      w.rho = 1.0;
      w.u = -0.5 + 0.5 * std::exp((-y + 0.25) / L);
    }
    w.v = 0.01 * std::sin(4.0 * std::numbers::pi * x);
    w.p = 1.5;
    return w;
  };
  return s;
}

ProblemSpec rayleigh_taylor() {
  ProblemSpec s = two_d("rt", "Rayleigh-Taylor instability", {0.0, 0.0}, {0.25, 1.0}, {200, 800}, 2.95, 2.0);
  s.gas.gamma = 5.0 / 3.0;
  s.faces[0] = FaceCondition::wall();
  s.faces[1] = FaceCondition::wall();
  s.faces[2] = FaceCondition::dirichlet(Prim{2.0, 0.0, 0.0, 1.0}, s.gas);
  s.faces[3] = FaceCondition::dirichlet(Prim{1.0, 0.0, 0.0, 2.5}, s.gas);
  s.gravity = true;
  s.symmetry = SymmetryRule::Mirror;
  const double gamma = s.gas.gamma;
  s.initial = [gamma](double x, double y) {
    Prim w;
    if (y < 0.5) {
      w.rho = 2.0;
      w.p = 2.0 * y + 1.0;
    } else {
      w.rho = 1.0;
      w.p = y + 1.5;
    }
    const double c = std::sqrt(gamma * w.p / w.rho);
    w.v = -0.025 * c * std::cos(8.0 * std::numbers::pi * x);
    return w;
  };
  return s;
}

}  // namespace

std::string to_string(SymmetryRule rule) {
  switch (rule) {
    case SymmetryRule::None: return "none";
    case SymmetryRule::Diagonal: return "diagonal";
    case SymmetryRule::Mirror: return "mirror";
  }
  return "none";
}

void ProblemSpec::validate() const {
  if (dimension != 1 && dimension != 2) throw ConfigError("dimension must be 1 or 2");
  aweno::validate(gas);
  if (!(final_time > 0.0)) throw ConfigError("final time must be positive");
  if (!(adaption_constant >= 0.0)) throw ConfigError("adaption constant C must be nonnegative");
  if (!initial) throw ConfigError("problem '" + name + "' has no initial data");
  for (int a = 0; a < dimension; ++a) {
    if (!(hi[a] > lo[a])) throw ConfigError("empty domain on axis " + std::to_string(a));
    const bool plo = faces[2 * a].kind == BoundaryKind::Periodic;
    const bool phi = faces[2 * a + 1].kind == BoundaryKind::Periodic;
    if (plo != phi) throw ConfigError("periodic boundary must be set on both faces of axis " + std::to_string(a));
  }
  if (symmetry != SymmetryRule::None && dimension != 2) throw ConfigError("symmetry rules need a 2-D problem");
  if (gravity && dimension != 2) throw ConfigError("gravity source needs a 2-D problem");
}

std::array<int, 2> ProblemSpec::cells_for_spacing(double dx) const {
  if (!(dx > 0.0)) throw ConfigError("mesh spacing must be positive");
  std::array<int, 2> n{1, 1};
  for (int a = 0; a < dimension; ++a) n[a] = static_cast<int>(std::lround((hi[a] - lo[a]) / dx));
  return n;
}

ProblemSpec make_problem(const std::string& name) {
  if (name == "sod") return sod();
  if (name == "shock-bubble") return shock_bubble();
  if (name == "shock-entropy") return shock_entropy();
  if (name == "shock-density") return shock_density();
  if (name == "riemann2d") return riemann2d();
  if (name == "explosion") return explosion();
  if (name == "implosion") return implosion();
  if (name == "kh") return kelvin_helmholtz();
  if (name == "rt") return rayleigh_taylor();
  throw ConfigError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
  return {"sod", "shock-bubble", "shock-entropy", "shock-density", "riemann2d",
          "explosion", "implosion", "kh", "rt"};
}

ConservedState<2> rt_source(const ConservedState<2>& U) { return {0.0, 0.0, U[0], U[2]}; }

template <int Dim>
ConservedField<Dim> initial_field(const ProblemSpec& spec, const Grid<Dim>& grid) {
  if (spec.dimension != Dim) throw ConfigError("problem '" + spec.name + "' is not " + std::to_string(Dim) + "-D");
  ConservedField<Dim> u(grid);
  u.for_each_interior([&](ConservedState<Dim>& U, int i, int j) {
    const double x = grid.axis(0).center(i);
    const double y = Dim == 2 ? grid.axis(Dim - 1).center(j) : 0.0;
    const PrimitiveState w = spec.initial(x, y);
    if (!(w.rho > 0.0) || !(w.p > 0.0)) {
      throw ConfigError("initial state of '" + spec.name + "' is not physical at cell " + std::to_string(i) + "," +
                        std::to_string(j));
    }
    U = prim_to_cons<Dim>(w, spec.gas);
  });
  return u;
}

template ConservedField<1> initial_field<1>(const ProblemSpec&, const Grid<1>&);
template ConservedField<2> initial_field<2>(const ProblemSpec&, const Grid<2>&);

void enforce_symmetry_diagonal(ConservedField<2>& u) {
  const Grid<2>& g = u.grid();
  const int n = g.cells(0);
  if (g.cells(1) != n) throw ConfigError("diagonal symmetry needs a square grid");
  for (int k = 0; k < n; ++k)
    for (int j = k; j < n; ++j) {
      ConservedState<2>& a = u(j, k);
      ConservedState<2>& b = u(k, j);
      const double rho = (a[0] + b[0]) / 2.0;
      const double mu = (a[1] + b[2]) / 2.0;
      const double mv = (a[2] + b[1]) / 2.0;
      const double E = (a[3] + b[3]) / 2.0;
      a = {rho, mu, mv, E};
      b = {rho, mv, mu, E};
    }
}

void enforce_symmetry_mirror(ConservedField<2>& u) {
  const Grid<2>& g = u.grid();
  const int n = g.cells(0);
  for (int k = 0; k < g.cells(1); ++k)
    for (int j = 0; j < (n + 1) / 2; ++j) {
      ConservedState<2>& a = u(j, k);
      ConservedState<2>& b = u(n - 1 - j, k);
      const double rho = (a[0] + b[0]) / 2.0;
      const double mu = (a[1] - b[1]) / 2.0;
      const double mv = (a[2] + b[2]) / 2.0;
      const double E = (a[3] + b[3]) / 2.0;
      a = {rho, mu, mv, E};
      b = {rho, -mu, mv, E};
    }
}

void enforce_symmetry(ConservedField<2>& u, SymmetryRule rule) {
  switch (rule) {
    case SymmetryRule::None: break;
    case SymmetryRule::Diagonal: enforce_symmetry_diagonal(u); break;
    case SymmetryRule::Mirror: enforce_symmetry_mirror(u); break;
  }
}

double symmetry_defect(const ConservedField<2>& u, SymmetryRule rule) {
  const int nx = u.grid().cells(0);
  const int ny = u.grid().cells(1);
  double worst = 0.0;
  if (rule == SymmetryRule::Diagonal && nx == ny) {
    for (int k = 0; k < ny; ++k)
      for (int j = 0; j < nx; ++j) worst = std::max(worst, std::abs(u(j, k)[0] - u(k, j)[0]));
  } else if (rule == SymmetryRule::Mirror) {
    for (int k = 0; k < ny; ++k)
      for (int j = 0; j < nx; ++j) worst = std::max(worst, std::abs(u(j, k)[0] - u(nx - 1 - j, k)[0]));
  }
  return worst;
}

}  // namespace aweno
