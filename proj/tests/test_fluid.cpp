#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scalelab/error.hpp"
#include "scalelab/families.hpp"
#include "scalelab/fluid.hpp"
#include "scalelab/residual.hpp"
#include "scalelab/spectral.hpp"

using namespace scalelab;

namespace {

Field tg_velocity(const Grid& g) {
  return concat(std::vector<Field>{
      sample(g, [](double x, double y) { return std::sin(x) * std::cos(y); }),
      sample(g, [](double x, double y) { return -std::cos(x) * std::sin(y); })});
}

Field tg_pressure(const Grid& g) {
  return sample(g, [](double x, double y) { return 0.25 * (std::cos(2 * x) + std::cos(2 * y)); });
}

Field random_velocity(const Grid& g, std::uint64_t seed) {
  const Field u = solenoidal_family(seed, 3, 1.0, true).u(g, 0.0, 0.0);
  return concat(std::vector<Field>{u.extract(0), u.extract(1)});
}

}  // namespace

TEST_CASE("sigma matches pointwise closed forms for Taylor-Green") {
  const Grid g = make_grid(2, 32);
  const TensorField s = sigma(tg_velocity(g));
  const Field s11 = sample(g, [](double x, double y) {
    const double a = std::cos(x) * std::cos(y), b = std::sin(x) * std::sin(y);
    return a * a + b * b;
  });
  const Field s12 = sample(g, [](double x, double y) { return 0.5 * std::sin(2 * x) * std::sin(2 * y); });
  CHECK(oracle::max_abs_diff(s.entry(0, 0), s11) < 1e-14);
  CHECK(oracle::max_abs_diff(s.entry(0, 1), s12) < 1e-14);
  CHECK(oracle::max_abs_diff(s.entry(1, 0), s12) < 1e-14);
}

TEST_CASE("sigma against a brute-force pointwise product of spectral gradients") {
  const Grid g = make_grid(2, 48);
  const Field v = random_velocity(g, 3);
  const TensorField s = sigma(v);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Field ref(g, 1);
      for (int c = 0; c < 2; ++c) {
        const Field da = spectral_derivative(v.extract(a), c, 1);
        const Field db = spectral_derivative(v.extract(b), c, 1);
        for (std::size_t p = 0; p < g.points(); ++p) ref.values()[p] += da.values()[p] * db.values()[p];
      }
      // kmax = 3 keeps every product inside the 2/3 band of a 48-point grid.
      CHECK(oracle::max_abs_diff(s.entry(a, b), ref) < 1e-12);
    }
  }
}

TEST_CASE("fluid source: divergence form equals the symbolic source") {
  const Grid g = make_grid(2, 32);
  const Field v = random_velocity(g, 8);
  const Field p(g, 1);
  const Field u = concat(std::vector<Field>{v, p});
  const CoreFunction core = fluid_core(2);
  const JetValues jets = core_jets(core, u, Field(g, 3));
  const Field symbolic = jet_evaluate(derive_source(core.symbolic), jets);
  const Field numeric = fluid_source(v);
  CHECK(numeric.components() == 3);
  CHECK(oracle::max_abs_diff(numeric, symbolic) < 1e-11);
  CHECK(oracle::max_abs(numeric.extract(2)) == 0.0);
}

TEST_CASE("Taylor-Green: zero source, steady Euler balance") {
  const Grid g = make_grid(2, 32);
  const Field v = tg_velocity(g);
  CHECK(oracle::max_abs(fluid_source(v)) < 1e-13);
  const FluidState state(v, tg_pressure(g));
  CHECK(oracle::max_abs(fluid_core_eval(state, Field(g, 2))) < 1e-13);
  const Field adv = advect(v, v);
  CHECK(oracle::max_abs_diff(adv.extract(0), sample(g, [](double x, double) { return 0.5 * std::sin(2 * x); })) < 1e-14);
}

TEST_CASE("fluid state validation") {
  const Grid g = make_grid(2, 16);
  const Field div = concat(std::vector<Field>{
      sample(g, [](double x, double) { return std::sin(x); }), Field(g, 1)});
  CHECK_THROWS_AS(FluidState(div, Field(g, 1)), ValidationError);
  const Field p = sample(g, [](double, double) { return 3.0; });
  const FluidState s(tg_velocity(g), p);
  CHECK(oracle::max_abs(s.p()) < 1e-15);
  CHECK(s.as_unknown().components() == 3);
}

TEST_CASE("Leray projection splits solenoidal and gradient parts") {
  const Grid g = make_grid(2, 32);
  const Field sol = random_velocity(g, 4);
  const Field phi = sample(g, [](double x, double y) { return std::sin(2 * x + y) + 0.3 * std::cos(3 * y); });
  const LerayParts parts = leray_project(sol + gradient(phi));
  CHECK(oracle::max_abs_diff(parts.solenoidal, sol) < 1e-13);
  CHECK(oracle::max_abs_diff(parts.potential, phi) < 1e-13);
  CHECK(max_divergence(parts.solenoidal) < 1e-13);
  const LerayParts twice = leray_project(parts.solenoidal);
  CHECK(oracle::max_abs_diff(twice.solenoidal, parts.solenoidal) < 1e-15);
}

TEST_CASE("core lookup") {
  CHECK(core_by_name("burgers", 2).N == 1);
  CHECK(core_by_name("fluid", 2).N == 3);
  CHECK_THROWS_AS(core_by_name("mhd", 2), ValidationError);
  CHECK(to_string(burgers_core().symbolic) == "u1*u1_x1 + u1_t");
}
