#pragma once

// Uniform structured grids in one and two dimensions, cell-centred
// multi-component fields with ghost layers, and boundary filling.

#include <array>
#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "aweno/errors.hpp"
#include "aweno/euler.hpp"

namespace aweno {

/// Stencil reach of the fifth-order flux: interface j+1/2 reads j-2..j+3.
inline constexpr int kGhostWidth = 3;
inline constexpr int kMinCells = 7;

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int cells = 0;

  double spacing() const { return (hi - lo) / cells; }
  /// Centre of cell i (0-based; ghost indices are allowed).
  double center(int i) const { return lo + (i + 0.5) * spacing(); }
  /// Location of interface i, the left face of cell i.
  double face(int i) const { return lo + i * spacing(); }
};

template <int Dim>
class Grid {
 public:
  static_assert(Dim == 1 || Dim == 2);

  Grid() = default;
  explicit Grid(std::array<Axis, Dim> axes, int ghosts = kGhostWidth) : axes_(axes), ghosts_(ghosts) {
    for (int a = 0; a < Dim; ++a) {
      const Axis& ax = axes_[a];
      if (ax.cells <= 0) throw ConfigError("cell count must be positive on axis " + std::to_string(a));
      if (!(ax.hi > ax.lo)) throw ConfigError("inverted or empty extent on axis " + std::to_string(a));
      if (ax.cells < kMinCells) {
        throw ConfigError("at least " + std::to_string(kMinCells) + " cells required on axis " +
                          std::to_string(a));
      }
    }
    if (ghosts_ < kGhostWidth) throw ConfigError("ghost width must be at least 3");
  }

  const Axis& axis(int a) const { return axes_[a]; }
  int cells(int a) const { return axes_[a].cells; }
  double spacing(int a) const { return axes_[a].spacing(); }
  int ghosts() const { return ghosts_; }
  int padded(int a) const { return axes_[a].cells + 2 * ghosts_; }

  std::size_t interior_count() const {
    std::size_t n = 1;
    for (int a = 0; a < Dim; ++a) n *= static_cast<std::size_t>(axes_[a].cells);
    return n;
  }
  std::size_t padded_count() const {
    std::size_t n = 1;
    for (int a = 0; a < Dim; ++a) n *= static_cast<std::size_t>(padded(a));
    return n;
  }
  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < Dim; ++a) v *= spacing(a);
    return v;
  }

 private:
  std::array<Axis, Dim> axes_{};
  int ghosts_ = kGhostWidth;
};

Grid<1> build_grid(double lo, double hi, int cells, int ghosts = kGhostWidth);
Grid<2> build_grid(std::array<double, 2> lo, std::array<double, 2> hi, std::array<int, 2> cells,
                   int ghosts = kGhostWidth);

/// Cell-centred values with K components per cell, including ghosts.
template <int Dim, int K>
class Field {
 public:
  using Value = Vec<K>;
  static constexpr int kDim = Dim;
  static constexpr int kComponents = K;

  Field() = default;
  explicit Field(const Grid<Dim>& grid) : grid_(grid), data_(grid.padded_count(), Value{}) {}

  const Grid<Dim>& grid() const { return grid_; }

  std::size_t index(int i) const requires(Dim == 1) { return static_cast<std::size_t>(i + grid_.ghosts()); }
  std::size_t index(int i, int j) const requires(Dim == 2) {
    const int g = grid_.ghosts();
    return static_cast<std::size_t>(j + g) * static_cast<std::size_t>(grid_.padded(0)) +
           static_cast<std::size_t>(i + g);
  }

  Value& operator()(int i) requires(Dim == 1) { return data_[index(i)]; }
  const Value& operator()(int i) const requires(Dim == 1) { return data_[index(i)]; }
  Value& operator()(int i, int j) requires(Dim == 2) { return data_[index(i, j)]; }
  const Value& operator()(int i, int j) const requires(Dim == 2) { return data_[index(i, j)]; }

  /// Visits interior cells as f(value, i, j); j is 0 in 1-D.
  template <class F>
  void for_each_interior(F&& f) {
    if constexpr (Dim == 1) {
      for (int i = 0; i < grid_.cells(0); ++i) f(data_[index(i)], i, 0);
    } else {
      for (int j = 0; j < grid_.cells(1); ++j)
        for (int i = 0; i < grid_.cells(0); ++i) f(data_[index(i, j)], i, j);
    }
  }
  template <class F>
  void for_each_interior(F&& f) const {
    if constexpr (Dim == 1) {
      for (int i = 0; i < grid_.cells(0); ++i) f(data_[index(i)], i, 0);
    } else {
      for (int j = 0; j < grid_.cells(1); ++j)
        for (int i = 0; i < grid_.cells(0); ++i) f(data_[index(i, j)], i, j);
    }
  }

  std::vector<Value>& values() { return data_; }
  const std::vector<Value>& values() const { return data_; }

  void fill(const Value& v) { std::fill(data_.begin(), data_.end(), v); }

 private:
  Grid<Dim> grid_{};
  std::vector<Value> data_;
};

template <int Dim>
using ConservedField = Field<Dim, Dim + 2>;
template <int Dim>
using ScalarField = Field<Dim, 1>;

enum class BoundaryKind { Free, SolidWall, Periodic, Dirichlet };

std::string to_string(BoundaryKind kind);
BoundaryKind parse_boundary_kind(const std::string& name);

struct FaceCondition {
  BoundaryKind kind = BoundaryKind::Free;
  /// Fixed primitive state for Dirichlet faces.
  PrimitiveState state{};
  GasParams gas{};

  static FaceCondition free() { return {}; }
  static FaceCondition wall() { return {BoundaryKind::SolidWall, {}, {}}; }
  static FaceCondition periodic() { return {BoundaryKind::Periodic, {}, {}}; }
  static FaceCondition dirichlet(PrimitiveState w, GasParams gas) { return {BoundaryKind::Dirichlet, w, gas}; }
};

/// Faces ordered (x-low, x-high[, y-low, y-high]).
template <int Dim>
struct BoundarySet {
  std::array<FaceCondition, 2 * Dim> faces{};

  const FaceCondition& low(int axis) const { return faces[2 * axis]; }
  const FaceCondition& high(int axis) const { return faces[2 * axis + 1]; }

  void validate() const {
    for (int a = 0; a < Dim; ++a) {
      const bool lo = low(a).kind == BoundaryKind::Periodic;
      const bool hi = high(a).kind == BoundaryKind::Periodic;
      if (lo != hi) throw ConfigError("periodic boundary must be set on both faces of axis " + std::to_string(a));
    }
  }

  static BoundarySet uniform(FaceCondition f) {
    BoundarySet b;
    b.faces.fill(f);
    return b;
  }
};

namespace detail {

// Fills the ghost layers of one line of cells. `at(k)` returns the value
// reference at line index k (ghost indices allowed), `n` is the interior
// length.
template <int K, class At, class Fixed>
void fill_line(At&& at, int n, int g, const FaceCondition& lo, const FaceCondition& hi, int negate,
               Fixed&& fixed) {
  for (int layer = 0; layer < g; ++layer) {
    Vec<K>& glo = at(-1 - layer);
    switch (lo.kind) {
      case BoundaryKind::Free: glo = at(0); break;
      case BoundaryKind::SolidWall:
        glo = at(layer);
        if (negate >= 0) glo[negate] = -glo[negate];
        break;
      case BoundaryKind::Periodic: glo = at(n - 1 - layer); break;
      case BoundaryKind::Dirichlet: glo = fixed(lo, at(0)); break;
    }
    Vec<K>& ghi = at(n + layer);
    switch (hi.kind) {
      case BoundaryKind::Free: ghi = at(n - 1); break;
      case BoundaryKind::SolidWall:
        ghi = at(n - 1 - layer);
        if (negate >= 0) ghi[negate] = -ghi[negate];
        break;
      case BoundaryKind::Periodic: ghi = at(layer); break;
      case BoundaryKind::Dirichlet: ghi = fixed(hi, at(n - 1)); break;
    }
  }
}

template <int Dim, int K, class Fixed>
void fill_ghosts_impl(Field<Dim, K>& f, const BoundarySet<Dim>& bc, std::array<int, Dim> negate,
                      Fixed&& fixed) {
  const Grid<Dim>& grid = f.grid();
  const int g = grid.ghosts();
  if constexpr (Dim == 1) {
    fill_line<K>([&](int k) -> Vec<K>& { return f(k); }, grid.cells(0), g, bc.low(0), bc.high(0),
                 negate[0], fixed);
  } else {
    const int nx = grid.cells(0);
    const int ny = grid.cells(1);
    for (int j = 0; j < ny; ++j) {
      fill_line<K>([&](int k) -> Vec<K>& { return f(k, j); }, nx, g, bc.low(0), bc.high(0), negate[0],
                   fixed);
    }
    // y-direction over the x-extended range defines the corner ghosts.
    for (int i = -g; i < nx + g; ++i) {
      fill_line<K>([&](int k) -> Vec<K>& { return f(i, k); }, ny, g, bc.low(1), bc.high(1), negate[1],
                   fixed);
    }
  }
}

}  // namespace detail

/// Ghost fill for conserved fields: SolidWall mirrors and negates the
/// face-normal momentum, Dirichlet writes the conserved image of the fixed
/// primitive state.
template <int Dim>
void fill_ghosts(ConservedField<Dim>& f, const BoundarySet<Dim>& bc) {
  std::array<int, Dim> negate{};
  for (int a = 0; a < Dim; ++a) negate[a] = 1 + a;
  detail::fill_ghosts_impl<Dim, Dim + 2>(
      f, bc, negate, [](const FaceCondition& face, const ConservedState<Dim>&) {
        return prim_to_cons<Dim>(face.state, face.gas);
      });
}

/// Ghost fill for scalar (or any non-conserved) fields: SolidWall is an even
/// reflection and Dirichlet falls back to zero-order extrapolation.
template <int Dim, int K>
void fill_ghosts_scalar(Field<Dim, K>& f, const BoundarySet<Dim>& bc) {
  std::array<int, Dim> negate;
  negate.fill(-1);
  detail::fill_ghosts_impl<Dim, K>(f, bc, negate,
                                   [](const FaceCondition&, const Vec<K>& edge) { return edge; });
}

/// Cell volume times the sum over interior cells, per component.
template <int Dim, int K>
Vec<K> total_integrals(const Field<Dim, K>& f) {
  Vec<K> sum{};
  f.for_each_interior([&](const Vec<K>& v, int, int) {
    for (int k = 0; k < K; ++k) sum[k] += v[k];
  });
  const double vol = f.grid().cell_volume();
  for (int k = 0; k < K; ++k) sum[k] *= vol;
  return sum;
}

}  // namespace aweno
