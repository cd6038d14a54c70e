#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scalelab/burgers.hpp"
#include "scalelab/error.hpp"

using namespace scalelab;

TEST_CASE("reference Burgers: initial condition and characteristics") {
  BurgersReferenceConfig cfg;
  cfg.coarse_size = 32;
  cfg.snapshot_times = {0.0, 0.5};
  const auto snaps = reference_burgers(cfg);
  REQUIRE(snaps.size() == 2);
  const Grid& fine = snaps[0].u.grid();
  CHECK(fine.size() == 128);
  CHECK(oracle::max_abs_diff(snaps[0].u, sample(fine, [](double x, double) { return std::sin(x); })) == 0.0);
  CHECK(oracle::max_abs_diff(snaps[1].u, burgers_characteristics(fine, 0.5)) < 1e-10);
  // u_t = -u u_x at t = 0.
  const Field ut0 = sample(fine, [](double x, double) { return -std::sin(x) * std::cos(x); });
  CHECK(oracle::max_abs_diff(snaps[0].u_t, ut0) < 1e-13);
}

TEST_CASE("reference Burgers rejects the shock time") {
  BurgersReferenceConfig cfg;
  cfg.snapshot_times = {1.0};
  CHECK_THROWS_AS(reference_burgers(cfg), ValidationError);
  cfg.snapshot_times = {0.5};
  cfg.refine = 2;
  CHECK_THROWS_AS(reference_burgers(cfg), ValidationError);
}

TEST_CASE("characteristic solution satisfies its implicit equation") {
  const Grid g = make_grid(1, 64);
  const Field u = burgers_characteristics(g, 0.8);
  for (std::size_t p = 0; p < g.points(); ++p) {
    const double x = g.coordinate(p, 0), v = u.values()[p];
    CHECK(std::abs(v - std::sin(x - v * 0.8)) < 1e-14);
  }
}

TEST_CASE("spectral restriction keeps resolved modes exactly") {
  const Grid fine = make_grid(1, 64), coarse = make_grid(1, 16);
  const Field f = sample(fine, [](double x, double) { return std::sin(3 * x) + std::cos(7 * x) + std::cos(20 * x); });
  const Field r = restrict_to(f, coarse);
  const Field expected = sample(coarse, [](double x, double) { return std::sin(3 * x) + std::cos(7 * x); });
  CHECK(oracle::max_abs_diff(r, expected) < 1e-14);
  CHECK_THROWS_AS(restrict_to(f, make_grid(1, 24)), ValidationError);
}
