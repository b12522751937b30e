#include "aweno/grid.hpp"

namespace aweno {

Grid<1> build_grid(double lo, double hi, int cells, int ghosts) {
  return Grid<1>({Axis{lo, hi, cells}}, ghosts);
}

Grid<2> build_grid(std::array<double, 2> lo, std::array<double, 2> hi, std::array<int, 2> cells, int ghosts) {
  return Grid<2>({Axis{lo[0], hi[0], cells[0]}, Axis{lo[1], hi[1], cells[1]}}, ghosts);
}

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Free: return "free";
    case BoundaryKind::SolidWall: return "wall";
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Dirichlet: return "dirichlet";
  }
  return "unknown";
}

BoundaryKind parse_boundary_kind(const std::string& name) {
  if (name == "free") return BoundaryKind::Free;
  if (name == "wall") return BoundaryKind::SolidWall;
  if (name == "periodic") return BoundaryKind::Periodic;
  if (name == "dirichlet") return BoundaryKind::Dirichlet;
  throw ConfigError("unknown boundary kind '" + name + "'");
}

}  // namespace aweno
