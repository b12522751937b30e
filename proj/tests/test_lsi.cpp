#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "aweno/lsi.hpp"

using namespace aweno;

namespace {

template <int Dim>
Grid<Dim> unit_grid(int n) {
  if constexpr (Dim == 1)
    return build_grid(0.0, 1.0, n);
  else
    return build_grid({0.0, 0.0}, {1.0, 1.0}, {n, n});
}

template <int Dim, class F>
ScalarField<Dim> scalar(const Grid<Dim>& g, F&& f) {
  ScalarField<Dim> s(g);
  s.for_each_interior([&](Vec<1>& v, int i, int j) { v[0] = f(i, j); });
  return s;
}

// psi(t) sampled at t^{n-1} = 0, t^{n-1/2} = dt/2, t^n = dt in every cell.
template <int Dim, class F>
ScalarField<Dim> lsi_of(F&& psi, double dt, int n = 8) {
  const auto g = unit_grid<Dim>(n);
  LsiHistory<Dim> h{scalar<Dim>(g, [&](int, int) { return psi(0.0); }),
                   scalar<Dim>(g, [&](int, int) { return psi(dt / 2.0); }), dt};
  return pointwise_lsi<Dim>(scalar<Dim>(g, [&](int, int) { return psi(dt); }), h);
}

}  // namespace

TEST(Lsi, LinearInTimeIsZero) {
  const auto d = lsi_of<1>([](double t) { return 3.0 - 2.0 * t; }, 0.5);
  d.for_each_interior([](const Vec<1>& v, int, int) { EXPECT_EQ(v[0], 0.0); });
  const auto d2 = lsi_of<2>([](double t) { return 0.25 + 8.0 * t; }, 0.125);
  d2.for_each_interior([](const Vec<1>& v, int, int) { EXPECT_EQ(v[0], 0.0); });
}

TEST(Lsi, QuadraticInTimeGivesTauSquared) {
  // psi = t^2 with tau = dt / 2: |(dt^2 + 0)/2 - dt^2/4| = tau^2
  const double dt = 0.5, tau = dt / 2.0;
  const auto d = lsi_of<1>([](double t) { return t * t; }, dt);
  d.for_each_interior([&](const Vec<1>& v, int, int) { EXPECT_EQ(v[0], tau * tau); });
  const auto d2 = lsi_of<2>([](double t) { return 1.0 + t * t; }, dt);
  d2.for_each_interior([&](const Vec<1>& v, int, int) { EXPECT_EQ(v[0], tau * tau); });
}

TEST(Lsi, SmearWeightSums) {
  const auto bc1 = BoundarySet<1>::uniform(FaceCondition::periodic());
  auto c1 = scalar<1>(unit_grid<1>(8), [](int, int) { return 3.0; });
  fill_ghosts_scalar(c1, bc1);
  const auto printed = smear_lsi<1>(c1, SmearStencil::Printed);
  const auto normal = smear_lsi<1>(c1, SmearStencil::Normalized);
  printed.for_each_interior([](const Vec<1>& v, int, int) { EXPECT_DOUBLE_EQ(v[0], 1.5); });
  normal.for_each_interior([](const Vec<1>& v, int, int) { EXPECT_DOUBLE_EQ(v[0], 3.0); });

  auto c2 = scalar<2>(unit_grid<2>(8), [](int, int) { return 3.0; });
  fill_ghosts_scalar(c2, BoundarySet<2>::uniform(FaceCondition::wall()));
  smear_lsi<2>(c2).for_each_interior([](const Vec<1>& v, int, int) { EXPECT_DOUBLE_EQ(v[0], 3.0); });
}

TEST(Lsi, SmearStencilShape) {
  auto d = scalar<1>(unit_grid<1>(9), [](int i, int) { return i == 4 ? 6.0 : 0.0; });
  fill_ghosts_scalar(d, BoundarySet<1>::uniform(FaceCondition::free()));
  const auto p = smear_lsi<1>(d, SmearStencil::Printed);
  EXPECT_DOUBLE_EQ(p(3)[0], 1.0);
  EXPECT_DOUBLE_EQ(p(4)[0], 1.0);
  EXPECT_DOUBLE_EQ(p(5)[0], 1.0);
  EXPECT_DOUBLE_EQ(p(6)[0], 0.0);
  const auto n = smear_lsi<1>(d, SmearStencil::Normalized);
  EXPECT_DOUBLE_EQ(n(4)[0], 4.0);
  EXPECT_DOUBLE_EQ(n(3)[0], 1.0);

  auto e = scalar<2>(unit_grid<2>(9), [](int i, int j) { return i == 4 && j == 4 ? 36.0 : 0.0; });
  fill_ghosts_scalar(e, BoundarySet<2>::uniform(FaceCondition::free()));
  const auto s = smear_lsi<2>(e);
  EXPECT_DOUBLE_EQ(s(4, 4)[0], 16.0);
  EXPECT_DOUBLE_EQ(s(3, 4)[0], 4.0);
  EXPECT_DOUBLE_EQ(s(5, 5)[0], 1.0);
  EXPECT_DOUBLE_EQ(s(6, 4)[0], 0.0);
}

TEST(Lsi, OneDimensionalFlagsFourInterfaces) {
  const auto s = scalar<1>(unit_grid<1>(12), [](int i, int) { return i == 5 ? 1.0 : 0.0; });
  const auto mask = flag_rough<1>(s, AdaptiveConfig{1.0}, 0.01);
  EXPECT_EQ(mask.count(), 4u);
  for (int i = 4; i <= 7; ++i) EXPECT_TRUE(mask.rough(0, i)) << i;
  // near the boundary the out-of-range faces are dropped
  const auto edge = scalar<1>(unit_grid<1>(12), [](int i, int) { return i == 0 ? 1.0 : 0.0; });
  EXPECT_EQ(flag_rough<1>(edge, AdaptiveConfig{1.0}, 0.01).count(), 3u);
}

TEST(Lsi, TwoDimensionalFlagsSixteenInterfaces) {
  const auto s = scalar<2>(unit_grid<2>(10), [](int i, int j) { return i == 4 && j == 5 ? 1.0 : 0.0; });
  const auto mask = flag_rough<2>(s, AdaptiveConfig{1.0}, 0.01);
  EXPECT_EQ(mask.count(0), 8u);
  EXPECT_EQ(mask.count(1), 8u);
  for (int dk = -1; dk <= 1; ++dk) {
    EXPECT_TRUE(mask.rough(0, 4, 5 + dk));
    EXPECT_TRUE(mask.rough(0, 5, 5 + dk));
    EXPECT_TRUE(mask.rough(1, 4 + dk, 5));
    EXPECT_TRUE(mask.rough(1, 4 + dk, 6));
  }
  EXPECT_TRUE(mask.rough(0, 3, 5));
  EXPECT_TRUE(mask.rough(0, 6, 5));
  EXPECT_TRUE(mask.rough(1, 4, 4));
  EXPECT_TRUE(mask.rough(1, 4, 7));
}

TEST(Lsi, ThresholdAndMonotoneInC) {
  EXPECT_DOUBLE_EQ(AdaptiveConfig{2.0}.threshold(0.04), 2.0 * 0.008);
  EXPECT_THROW(AdaptiveConfig{-1.0}.validate(), ConfigError);
  EXPECT_NO_THROW(AdaptiveConfig{0.0}.validate());
  EXPECT_NO_THROW(AdaptiveConfig{std::numeric_limits<double>::infinity()}.validate());

  const auto s = scalar<1>(unit_grid<1>(40), [](int i, int) { return std::exp(-0.1 * (i - 20) * (i - 20)); });
  std::size_t last = s.grid().cells(0) + 1;
  for (double C : {0.0, 1.0, 10.0, 100.0, 1000.0, std::numeric_limits<double>::infinity()}) {
    const auto m = flag_rough<1>(s, AdaptiveConfig{C}, 0.01);
    EXPECT_LE(m.count(), last) << C;
    last = m.count();
  }
  EXPECT_EQ(last, 0u);
  // a smaller C flags a superset
  const auto lo = flag_rough<1>(s, AdaptiveConfig{10.0}, 0.01);
  const auto hi = flag_rough<1>(s, AdaptiveConfig{100.0}, 0.01);
  for (int i = 0; i <= 40; ++i)
    if (hi.rough(0, i)) {
      EXPECT_TRUE(lo.rough(0, i));
    }
}

TEST(Lsi, IndicatorSelectorParsing) {
  EXPECT_EQ(IndicatorSelector::parse("pressure").kind, IndicatorKind::Pressure);
  EXPECT_EQ(IndicatorSelector::parse("density").kind, IndicatorKind::Density);
  const auto c = IndicatorSelector::parse("component:2");
  EXPECT_EQ(c.kind, IndicatorKind::Component);
  EXPECT_EQ(c.component, 2);
  EXPECT_EQ(c.to_string(), "component:2");
  EXPECT_THROW(IndicatorSelector::parse("entropy"), ConfigError);
  EXPECT_THROW(parse_smear_stencil("wide"), ConfigError);
}

TEST(Lsi, ExtractIndicator) {
  GasParams gas{1.4};
  ConservedField<1> u(unit_grid<1>(8));
  u.fill(prim_to_cons<1>(PrimitiveState{2.0, 1.0, 0.0, 0.5}, gas));
  const auto p = extract_indicator<1>(u, gas, IndicatorSelector::pressure());
  EXPECT_NEAR(p(3)[0], 0.5, 1e-15);
  EXPECT_EQ(extract_indicator<1>(u, gas, IndicatorSelector::density())(3)[0], 2.0);
  EXPECT_EQ(extract_indicator<1>(u, gas, IndicatorSelector{IndicatorKind::Component, 1})(3)[0], 2.0);
  EXPECT_THROW(extract_indicator<1>(u, gas, IndicatorSelector{IndicatorKind::Component, 3}), ConfigError);
}

TEST(Lsi, TrackerNeedsHistory) {
  GasParams gas{1.4};
  const auto g = unit_grid<1>(8);
  LsiTracker<1> tr(gas, IndicatorSelector::density(), BoundarySet<1>::uniform(FaceCondition::periodic()));
  const auto psi = scalar<1>(g, [](int, int) { return 1.0; });
  EXPECT_FALSE(tr.smoothed(psi).has_value());
  tr.advance(psi, psi, 0.1);
  ASSERT_TRUE(tr.has_history());
  const auto s = tr.smoothed(psi);
  ASSERT_TRUE(s.has_value());
  s->for_each_interior([](const Vec<1>& v, int, int) { EXPECT_EQ(v[0], 0.0); });
  EXPECT_DOUBLE_EQ(tr.history()->dt_previous, 0.1);
}
