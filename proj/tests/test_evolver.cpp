#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "scalelab/error.hpp"
#include "scalelab/evolver.hpp"
#include "scalelab/fluid.hpp"

using namespace scalelab;

namespace {

RunConfig tg_config() {
  RunConfig c;
  c.grid = 32;
  c.closure = Closure::none;
  return c;
}

}  // namespace

TEST_CASE("macroscopic rhs trivial and steady cases") {
  const RunConfig c = tg_config();
  const Field v = initial_velocity(c);
  const Grid& g = v.grid();
  CHECK(oracle::max_abs(macroscopic_rhs(Field(g, 2), Closure::helmholtz, 0.05)) == 0.0);
  CHECK(oracle::max_abs(macroscopic_rhs(v, Closure::none, 0.05)) < 1e-14);
  // Taylor-Green has zero source, so the closure adds nothing either.
  CHECK(oracle::max_abs(macroscopic_rhs(v, Closure::helmholtz, 0.05)) < 1e-14);
}

TEST_CASE("psi rhs trivial cases") {
  const RunConfig c = tg_config();
  const Field v = initial_velocity(c);
  const Grid& g = v.grid();
  CHECK(oracle::max_abs(psi_rhs(Field(g, 2), v, Field(g, 2))) == 0.0);
  const Field e = concat(std::vector<Field>{
      sample(g, [](double x, double y) { return std::sin(y) + std::cos(x); }), Field(g, 1)});
  const Field expected = concat(std::vector<Field>{
      sample(g, [](double, double y) { return std::sin(y); }), Field(g, 1)});
  CHECK(oracle::max_abs_diff(psi_rhs(Field(g, 2), Field(g, 2), e), expected) < 1e-14);
}

TEST_CASE("rigid translation is unchanged") {
  RunConfig c = tg_config();
  c.initial.name = "rigid";
  c.initial.velocity = {0.3, -0.2};
  const Field v = initial_velocity(c);
  EvolutionState s{0.0, v, Field(v.grid(), 2), 0.05, 0};
  for (int k = 0; k < 10; ++k) s = step_rk4(s, 0.01, {Closure::helmholtz, true, nullptr});
  CHECK(oracle::max_abs_diff(s.v, v) < 1e-15);
  CHECK(s.t == doctest::Approx(0.1));
  CHECK(s.step_count == 10);
}

TEST_CASE("steady Taylor-Green stays put and keeps its energy") {
  const RunConfig c = tg_config();
  const Field v0 = initial_velocity(c);
  EvolutionState s{0.0, v0, Field(v0.grid(), 2), 0.05, 0};
  for (int k = 0; k < 100; ++k) s = step_rk4(s, 1e-3, {Closure::none, false, nullptr});
  CHECK(oracle::max_abs_diff(s.v, v0) < 1e-8);
  CHECK(max_divergence(s.v) < 1e-10);
}

TEST_CASE("non-finite states abort") {
  const RunConfig c = tg_config();
  Field v = initial_velocity(c);
  v.values()[3] = std::nan("");
  EvolutionState s{0.0, v, Field(v.grid(), 2), 0.05, 0};
  CHECK_THROWS_AS(step_rk4(s, 1e-3, {}), NumericalError);
}

TEST_CASE("run validation and CFL") {
  RunConfig c = tg_config();
  c.dt = 1.0;
  CHECK_THROWS_AS(run_simulation(c), ValidationError);
  c.dt.reset();
  c.eta = 0.0;
  CHECK_THROWS_AS(run_simulation(c), ValidationError);
  c.eta = 0.05;
  const Field v0 = initial_velocity(c);
  CHECK(advective_dt_limit(v0) == doctest::Approx(0.5 * v0.grid().spacing() / 1.0).epsilon(1e-12));
}

TEST_CASE("bound column equals eta times the running sup of psi") {
  RunConfig c;
  c.initial.name = "random";
  c.seed = 5;
  c.couple_psi = true;
  c.psi_initial = "mode";
  c.output_every = 1;
  c.t_end = 0.2;
  const SimulationResult res = run_simulation(c);
  double sup = 0.0, t = -1.0;
  for (const auto& r : res.records) {
    sup = std::max(sup, r.psi_max);
    CHECK(r.psi_sup == sup);
    CHECK(std::abs(r.bound - c.eta * sup) <= 1e-12);
    CHECK(r.t > t);
    CHECK(r.max_div_v < 1e-10);
    t = r.t;
  }
  CHECK(res.records.back().t == doctest::Approx(0.2));
  CHECK(max_divergence(res.final_state.psi) < 1e-10);
}

TEST_CASE("diagnostics csv layout") {
  RunConfig c = tg_config();
  c.config_hash = "abc";
  const SimulationResult res = run_simulation(c);
  const auto path = std::filesystem::temp_directory_path() / "scalelab_diag_test.csv";
  write_diagnostics_csv(path.string(), res.records, c.config_hash);
  std::ifstream f(path);
  std::string l1, l2;
  std::getline(f, l1);
  std::getline(f, l2);
  CHECK(l1 == "# config_hash=abc");
  CHECK(l2 == kDiagnosticsHeader);
  std::filesystem::remove(path);
}
