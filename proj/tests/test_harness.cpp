#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "aweno/harness.hpp"

using namespace aweno;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("aweno_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

ScalarField<1> sampled(int n, double (*f)(double)) {
  ScalarField<1> s(build_grid(0.0, 1.0, n));
  s.for_each_interior([&](Vec<1>& v, int i, int) { v[0] = f(s.grid().axis(0).center(i)); });
  return s;
}

double wave(double x) { return std::sin(2.0 * std::numbers::pi * x) + 0.5 * std::cos(4.0 * std::numbers::pi * x); }

}  // namespace

TEST(Config, ParsesKeyValues) {
  const auto kv = parse_key_values("# comment\nproblem = shock-entropy\n\n mode=limited \nC = 0.01 # trailing\n");
  EXPECT_EQ(kv.at("problem"), "shock-entropy");
  EXPECT_EQ(kv.at("mode"), "limited");
  EXPECT_EQ(kv.at("C"), "0.01");
  EXPECT_THROW(parse_key_values("no equals sign\n"), ConfigError);
}

TEST(Config, LaterLayerWins) {
  // file values override defaults, command-line values override the file
  RunConfig cfg;
  EXPECT_EQ(cfg.cfl, 0.45);
  apply_key_values(cfg, parse_key_values("cfl = 0.4\nnx = 300\nmode = nonlimited\n"));
  apply_key_values(cfg, {{"cfl", "0.3"}});
  EXPECT_EQ(cfg.cfl, 0.3);
  EXPECT_EQ(cfg.cells[0], 300);
  EXPECT_EQ(cfg.mode, SchemeMode::Nonlimited);
  EXPECT_FALSE(cfg.adaption_constant.has_value());
  EXPECT_EQ(cfg.evolve_options(make_problem("sod")).adaption_constant.value_or(0.05), 0.05);
  EXPECT_TRUE(cfg.evolve_options(make_problem("sod")).scheme.node_fallback);
  apply_key_values(cfg, {{"node_fallback", "false"}});
  EXPECT_FALSE(cfg.evolve_options(make_problem("sod")).scheme.node_fallback);
}

TEST(Config, RejectsUnknownAndBadValues) {
  RunConfig cfg;
  EXPECT_THROW(apply_key_values(cfg, {{"colour", "red"}}), ConfigError);
  EXPECT_THROW(apply_key_values(cfg, {{"cfl", "fast"}}), ConfigError);
  EXPECT_THROW(apply_key_values(cfg, {{"nx", "12x"}}), ConfigError);
  EXPECT_THROW(apply_key_values(cfg, {{"mode", "turbo"}}), ConfigError);
  EXPECT_THROW(read_key_values("/nonexistent/aweno.cfg"), ConfigError);
}

TEST(Config, NumberLists) {
  const auto v = parse_number_list("0.1, 0.2,0.3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], 0.2);
  EXPECT_EQ(parse_number_list("1,,2").size(), 2u);
  EXPECT_THROW(parse_number_list("1,x"), ConfigError);
}

TEST(Csv, FieldRoundTripIsExact) {
  GasParams gas{1.4};
  ConservedField<2> u(build_grid({0.0, 0.0}, {1.0, 0.7}, {8, 9}));
  u.for_each_interior([&](ConservedState<2>& U, int i, int j) {
    U = prim_to_cons<2>(PrimitiveState{1.0 / (1 + i), 0.1 * j - 0.3, std::sqrt(2.0) * i, 1.0 / 3.0 + j}, gas);
  });
  const fs::path dir = scratch("csv");
  fs::create_directories(dir);
  write_field_csv<2>((dir / "f.csv").string(), u, gas);
  const CsvTable t = read_csv((dir / "f.csv").string());
  ASSERT_EQ(t.rows.size(), 72u);
  const int rho = t.column("rho"), x = t.column("x"), y = t.column("y");
  EXPECT_EQ(t.header.size(), 7u);
  std::size_t r = 0;
  u.for_each_interior([&](const ConservedState<2>& U, int i, int j) {
    EXPECT_EQ(t.rows[r][rho], U[0]);
    EXPECT_EQ(t.rows[r][x], u.grid().axis(0).center(i));
    EXPECT_EQ(t.rows[r][y], u.grid().axis(1).center(j));
    ++r;
  });
  EXPECT_THROW(t.column("temperature"), ConfigError);
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Csv, MaskLayout) {
  const Grid<1> g = build_grid(0.0, 1.0, 10);
  RoughnessMask<1> m(g);
  m.set(0, 3, 0, true);
  const fs::path dir = scratch("mask");
  fs::create_directories(dir);
  write_mask_csv<1>((dir / "m.csv").string(), m, g);
  const CsvTable t = read_csv((dir / "m.csv").string());
  ASSERT_EQ(t.rows.size(), 11u);
  EXPECT_EQ(t.rows[3][t.column("flag")], 1.0);
  EXPECT_DOUBLE_EQ(t.rows[3][t.column("x")], 0.3);
}

TEST(Run, ExitCodesAndOutputs) {
  RunConfig cfg;
  cfg.problem = "sod";
  cfg.cells = {60, 0};
  cfg.final_time = 0.05;
  cfg.out_dir = scratch("run").string();
  std::string msg;
  EXPECT_EQ(run_with_status(cfg, &msg), 0) << msg;
  for (const char* f : {"solution.csv", "mask.csv", "lsi.csv", "steps.csv", "summary.txt"})
    EXPECT_TRUE(fs::exists(fs::path(cfg.out_dir) / f)) << f;

  RunConfig bad = cfg;
  bad.problem = "nope";
  EXPECT_EQ(run_with_status(bad, &msg), kExitConfigError);
  bad = cfg;
  bad.cfl = 0.9;
  EXPECT_EQ(run_with_status(bad, &msg), kExitConfigError);

  RunConfig blow = cfg;
  blow.problem = "shock-bubble";
  blow.mode = SchemeMode::Nonlimited;
  blow.cells = {100, 0};
  blow.final_time.reset();
  blow.out_dir = scratch("blow").string();
  EXPECT_EQ(run_with_status(blow, &msg), kExitSolverFailure) << msg;
  EXPECT_TRUE(fs::exists(fs::path(blow.out_dir) / "failure.txt"));
}

TEST(Run, Deterministic) {
  RunConfig cfg;
  cfg.problem = "shock-entropy";
  cfg.cells = {100, 0};
  cfg.final_time = 0.3;
  cfg.out_dir = scratch("det_a").string();
  run(cfg);
  const std::string a = slurp(fs::path(cfg.out_dir) / "solution.csv");
  const std::string ma = slurp(fs::path(cfg.out_dir) / "mask.csv");
  cfg.out_dir = scratch("det_b").string();
  run(cfg);
  EXPECT_EQ(a, slurp(fs::path(cfg.out_dir) / "solution.csv"));
  EXPECT_EQ(ma, slurp(fs::path(cfg.out_dir) / "mask.csv"));
  EXPECT_FALSE(a.empty());
}

TEST(Rates, SuccessiveAndWindow) {
  const auto r = successive_rates({1.0, 0.25, 0.0625, 0.125});
  EXPECT_FALSE(r[0].has_value());
  EXPECT_NEAR(*r[1], 2.0, 0.01);
  EXPECT_NEAR(*r[2], 2.0, 0.01);
  EXPECT_NEAR(*r[3], -1.0, 0.01);
  const auto f = sampled(10, [](double x) { return x; });
  EXPECT_DOUBLE_EQ(window_max(f, 0.2, 0.5), 0.45);
  const auto t = make_rate_table(0.0, 1.0, {100, 200}, {0.01, 0.005}, {4e-6, 1e-6});
  EXPECT_NEAR(*t.rows[1].rate, 2.0, 1e-12);
}

TEST(Cesaro, ProlongKeepsConstants) {
  const std::vector<double> c(12, 2.5);
  for (auto rule : {ExtensionRule::Periodic, ExtensionRule::Mirror, ExtensionRule::Copy}) {
    const auto fine = prolong_line(c, rule, rule);
    ASSERT_EQ(fine.size(), 24u);
    for (double v : fine) EXPECT_NEAR(v, 2.5, 1e-14);
  }
}

TEST(Cesaro, ProlongIsHighOrderOnSmoothData) {
  auto err = [](int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = wave((i + 0.5) / n);
    const auto fine = prolong_line(v, ExtensionRule::Periodic, ExtensionRule::Periodic);
    double e = 0.0;
    for (int k = 0; k < 2 * n; ++k) e = std::max(e, std::abs(fine[k] - wave((k + 0.5) / (2.0 * n))));
    return e;
  };
  const double e1 = err(32), e2 = err(64);
  EXPECT_LT(e2, 1e-5);
  EXPECT_GT(std::log2(e1 / e2), 4.0);
}

TEST(Cesaro, AverageOfNestedSamples) {
  const auto bc = BoundarySet<1>::uniform(FaceCondition::periodic());
  std::vector<ScalarField<1>> fields{sampled(32, wave), sampled(64, wave), sampled(128, wave)};
  const auto avg = cesaro_average<1>(fields, bc);
  ASSERT_EQ(avg.grid().cells(0), 128);
  const auto exact = sampled(128, wave);
  double e = 0.0;
  for (int i = 0; i < 128; ++i) e = std::max(e, std::abs(avg(i)[0] - exact(i)[0]));
  // the 32-cell level carries ~7e-4 of interpolation error and enters with weight 1/3
  EXPECT_LT(e, 3e-4);
  std::vector<ScalarField<1>> skew{sampled(32, wave), sampled(96, wave)};
  EXPECT_THROW(cesaro_average<1>(skew, bc), ConfigError);
}

TEST(Compare, L1Distances) {
  const auto a = sampled(50, wave);
  EXPECT_EQ(l1_to_reference<1>(a, a), 0.0);
  const auto fine = sampled(200, [](double) { return 1.0; });
  const auto coarse = sampled(50, [](double) { return 1.25; });
  EXPECT_NEAR(l1_to_reference<1>(coarse, fine), 0.25, 1e-14);
  EXPECT_THROW(l1_to_reference<1>(sampled(50, wave), sampled(120, wave)), ConfigError);
}
