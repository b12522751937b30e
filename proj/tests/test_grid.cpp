#include <gtest/gtest.h>

#include "aweno/grid.hpp"

using namespace aweno;

namespace {

ConservedField<1> ramp(int n) {
  ConservedField<1> f(build_grid(0.0, 1.0, n));
  f.for_each_interior([](ConservedState<1>& U, int i, int) { U = {1.0 + i, 10.0 + i, 100.0 + i}; });
  return f;
}

}  // namespace

TEST(Grid, Geometry) {
  const Grid<1> g = build_grid(-1.0, 1.0, 8);
  EXPECT_DOUBLE_EQ(g.spacing(0), 0.25);
  EXPECT_DOUBLE_EQ(g.axis(0).center(0), -0.875);
  EXPECT_DOUBLE_EQ(g.axis(0).face(8), 1.0);
  EXPECT_EQ(g.padded(0), 14);
  EXPECT_EQ(g.interior_count(), 8u);
}

TEST(Grid, RejectsBadShapes) {
  EXPECT_THROW(build_grid(0.0, 1.0, 6), ConfigError);
  EXPECT_THROW(build_grid(1.0, 0.0, 10), ConfigError);
  EXPECT_THROW(build_grid({0.0, 0.0}, {1.0, 1.0}, {10, 0}), ConfigError);
  EXPECT_THROW(build_grid(0.0, 1.0, 10, 2), ConfigError);
  EXPECT_NO_THROW(build_grid(0.0, 1.0, kMinCells));
}

TEST(Grid, MismatchedPeriodicFaces) {
  BoundarySet<1> bc;
  bc.faces[0] = FaceCondition::periodic();
  EXPECT_THROW(bc.validate(), ConfigError);
  bc.faces[1] = FaceCondition::periodic();
  EXPECT_NO_THROW(bc.validate());
}

TEST(Ghosts, FreeCopiesEdge) {
  auto f = ramp(8);
  fill_ghosts(f, BoundarySet<1>::uniform(FaceCondition::free()));
  for (int l = 1; l <= 3; ++l) {
    EXPECT_EQ(f(-l), f(0));
    EXPECT_EQ(f(7 + l), f(7));
  }
}

TEST(Ghosts, WallMirrorsAndNegatesNormalMomentum) {
  auto f = ramp(8);
  fill_ghosts(f, BoundarySet<1>::uniform(FaceCondition::wall()));
  for (int l = 0; l < 3; ++l) {
    EXPECT_EQ(f(-1 - l)[0], f(l)[0]);
    EXPECT_EQ(f(-1 - l)[1], -f(l)[1]);
    EXPECT_EQ(f(-1 - l)[2], f(l)[2]);
    EXPECT_EQ(f(8 + l)[1], -f(7 - l)[1]);
  }
}

TEST(Ghosts, PeriodicWithMinimalMesh) {
  auto f = ramp(7);
  fill_ghosts(f, BoundarySet<1>::uniform(FaceCondition::periodic()));
  EXPECT_EQ(f(-1), f(6));
  EXPECT_EQ(f(-3), f(4));
  EXPECT_EQ(f(7), f(0));
  EXPECT_EQ(f(9), f(2));
}

TEST(Ghosts, DirichletWritesFixedState) {
  auto f = ramp(8);
  GasParams gas{1.4};
  BoundarySet<1> bc;
  bc.faces[0] = FaceCondition::dirichlet(PrimitiveState{2.0, 0.0, 0.0, 1.0}, gas);
  bc.faces[1] = FaceCondition::free();
  fill_ghosts(f, bc);
  const auto fixed = prim_to_cons<1>(PrimitiveState{2.0, 0.0, 0.0, 1.0}, gas);
  for (int l = 1; l <= 3; ++l) EXPECT_EQ(f(-l), fixed);
  // scalar fields copy the edge value instead
  ScalarField<1> s(f.grid());
  s.for_each_interior([](Vec<1>& v, int i, int) { v[0] = i; });
  fill_ghosts_scalar(s, bc);
  EXPECT_EQ(s(-2)[0], 0.0);
}

TEST(Ghosts, WallNegatesOnlyNormalMomentumIn2D) {
  ConservedField<2> f(build_grid({0.0, 0.0}, {1.0, 1.0}, {8, 8}));
  f.for_each_interior([](ConservedState<2>& U, int i, int j) { U = {1.0, 1.0 + i, 2.0 + j, 5.0}; });
  fill_ghosts(f, BoundarySet<2>::uniform(FaceCondition::wall()));
  EXPECT_EQ(f(-1, 3)[1], -f(0, 3)[1]);
  EXPECT_EQ(f(-1, 3)[2], f(0, 3)[2]);
  EXPECT_EQ(f(3, -2)[2], -f(3, 1)[2]);
  EXPECT_EQ(f(3, -2)[1], f(3, 1)[1]);
  // corners: reflected in both directions
  EXPECT_EQ(f(-1, -1)[1], -f(0, 0)[1]);
  EXPECT_EQ(f(-1, -1)[2], -f(0, 0)[2]);
}

TEST(Ghosts, TotalIntegrals) {
  auto f = ramp(8);
  const auto tot = total_integrals(f);
  EXPECT_DOUBLE_EQ(tot[0], (8.0 + 28.0) / 8.0);
}
