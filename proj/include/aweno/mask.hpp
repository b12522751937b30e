#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aweno/grid.hpp"

namespace aweno {

/// Per-interface rough/smooth flags for one time step.
///
/// Interface i on axis 0 is the left face of cell i (i = 0..nx), so each row
/// of the x-mask has nx + 1 entries. The y-mask is laid out the same way
/// along columns: interface k on axis 1 is the lower face of cell k.
template <int Dim>
class RoughnessMask {
 public:
  RoughnessMask() = default;
  explicit RoughnessMask(const Grid<Dim>& grid, bool rough = false) {
    nx_ = grid.cells(0);
    ny_ = Dim == 2 ? grid.cells(1) : 1;
    flags_[0].assign(static_cast<std::size_t>(nx_ + 1) * ny_, rough ? 1 : 0);
    if constexpr (Dim == 2) flags_[1].assign(static_cast<std::size_t>(nx_) * (ny_ + 1), rough ? 1 : 0);
  }

  static RoughnessMask all_rough(const Grid<Dim>& g) { return RoughnessMask(g, true); }
  static RoughnessMask all_smooth(const Grid<Dim>& g) { return RoughnessMask(g, false); }

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  /// Number of interfaces along `axis` in the row/column direction.
  int extent(int axis, int dir) const {
    if (axis == 0) return dir == 0 ? nx_ + 1 : ny_;
    return dir == 0 ? nx_ : ny_ + 1;
  }

  bool rough(int axis, int i, int j = 0) const { return flags_[axis][offset(axis, i, j)] != 0; }
  void set(int axis, int i, int j, bool value) { flags_[axis][offset(axis, i, j)] = value ? 1 : 0; }

  /// Sets the flag when (i, j) is a valid interface; out-of-range requests
  /// are dropped.
  void mark_clamped(int axis, int i, int j) {
    if (i < 0 || j < 0 || i >= extent(axis, 0) || j >= extent(axis, 1)) return;
    set(axis, i, j, true);
  }

  std::size_t count(int axis) const {
    std::size_t n = 0;
    for (auto f : flags_[axis]) n += f;
    return n;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (int a = 0; a < Dim; ++a) n += count(a);
    return n;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (int a = 0; a < Dim; ++a) n += flags_[a].size();
    return n;
  }
  double rough_fraction() const { return size() == 0 ? 0.0 : static_cast<double>(count()) / size(); }

  const std::vector<std::uint8_t>& flags(int axis) const { return flags_[axis]; }

  friend bool operator==(const RoughnessMask& a, const RoughnessMask& b) {
    for (int ax = 0; ax < Dim; ++ax)
      if (a.flags_[ax] != b.flags_[ax]) return false;
    return a.nx_ == b.nx_ && a.ny_ == b.ny_;
  }

 private:
  std::size_t offset(int axis, int i, int j) const {
    const int row = axis == 0 ? nx_ + 1 : nx_;
    return static_cast<std::size_t>(j) * row + i;
  }

  int nx_ = 0;
  int ny_ = 1;
  std::vector<std::uint8_t> flags_[Dim];
};

}  // namespace aweno
