#pragma once

// Registry of the benchmark problems for the 1-D and 2-D Euler equations:
// initial data, boundary conditions, per-problem adaption constants,
// symmetry enforcement and the gravity source of the RT setup.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "aweno/euler.hpp"
#include "aweno/grid.hpp"

namespace aweno {

enum class SymmetryRule { None, Diagonal, Mirror };

std::string to_string(SymmetryRule rule);

struct ProblemSpec {
  std::string name;
  std::string title;
  int dimension = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<int, 2> default_cells{100, 1};
  GasParams gas{};
  double final_time = 1.0;
  double adaption_constant = 1.0;
  /// Faces ordered (x-low, x-high, y-low, y-high); y entries unused in 1-D.
  std::array<FaceCondition, 4> faces{};
  /// Primitive state sampled at a cell centre (y = 0 in 1-D).
  std::function<PrimitiveState(double x, double y)> initial;
  /// Gravity source (0, 0, rho, rho v) acting in +y.
  bool gravity = false;
  SymmetryRule symmetry = SymmetryRule::None;

  void validate() const;

  /// Cell counts giving spacing close to `dx` on each axis.
  std::array<int, 2> cells_for_spacing(double dx) const;

  template <int Dim>
  Grid<Dim> grid(std::array<int, 2> cells) const {
    std::array<Axis, Dim> axes;
    for (int a = 0; a < Dim; ++a) axes[a] = Axis{lo[a], hi[a], cells[a]};
    return Grid<Dim>(axes);
  }

  template <int Dim>
  BoundarySet<Dim> boundaries() const {
    BoundarySet<Dim> b;
    for (int f = 0; f < 2 * Dim; ++f) {
      b.faces[f] = faces[f];
      b.faces[f].gas = gas;
    }
    return b;
  }
};

/// Known names: sod, shock-bubble, shock-entropy, shock-density,
/// riemann2d, explosion, implosion, kh, rt.
ProblemSpec make_problem(const std::string& name);
std::vector<std::string> problem_names();

/// Gravity source term for a conserved 2-D state.
ConservedState<2> rt_source(const ConservedState<2>& U);

/// Point values of the initial data on the interior cells (ghosts zero).
template <int Dim>
ConservedField<Dim> initial_field(const ProblemSpec& spec, const Grid<Dim>& grid);

/// Averages U_{j,k} with its diagonal image U_{k,j} (momenta swapped).
/// Requires a square grid.
void enforce_symmetry_diagonal(ConservedField<2>& u);

/// Averages U_{j,k} with its mirror image about the vertical centre line,
/// U_{N-1-j,k}; the x-momentum is antisymmetrized.
void enforce_symmetry_mirror(ConservedField<2>& u);

void enforce_symmetry(ConservedField<2>& u, SymmetryRule rule);

/// Largest density difference between a cell and its image under `rule`
/// (0 for SymmetryRule::None or a non-square grid under Diagonal).
double symmetry_defect(const ConservedField<2>& u, SymmetryRule rule);

}  // namespace aweno
