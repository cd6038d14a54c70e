#include <algorithm>
#include <array>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scalelab/error.hpp"
#include "scalelab/families.hpp"
#include "scalelab/heat_filter.hpp"

using namespace scalelab;

namespace {

ScaleStack closed_form(const Grid& g, double first, double d, int K,
                       double (*fn)(double x, double eta)) {
  std::vector<Field> fields;
  for (int j = 0; j < K; ++j) {
    const double eta = first + j * d;
    fields.push_back(sample(g, [&](double x, double) { return fn(x, eta); }, 0.0, eta));
  }
  return ScaleStack(first, d, std::move(fields), first + (K - 1) * d);
}

double decaying(double x, double eta) { return std::exp(-3.0 * eta) * std::sin(x) + eta * eta * eta; }

}  // namespace

TEST_CASE("heat propagation matches the closed-form Gaussian decay") {
  const Grid g = make_grid(2, 32);
  const oracle::TrigPoly p(11, 6, 2);
  const Field f = p.sample(g);
  const Field h = heat_propagate(f, 0.07);
  CHECK(h.eta() == doctest::Approx(0.07));
  CHECK(oracle::max_abs_diff(h, p.sample(g, 0, 0, 0.07)) < 1e-13);
  CHECK(oracle::max_abs_diff(heat_propagate(f, 0.0), f) < 1e-14);
  CHECK_THROWS_AS(heat_propagate(f, -0.1), ValidationError);
}

TEST_CASE("maximum principle on resolved data") {
  const Grid g = make_grid(1, 64);
  const Field f = sample(g, [](double x, double) { return std::exp(std::sin(x) + 0.3 * std::cos(2 * x)); });
  auto range = [](const Field& h) {
    const auto [lo, hi] = std::minmax_element(h.values().begin(), h.values().end());
    return std::pair{*lo, *hi};
  };
  auto [lo, hi] = range(f);
  for (double eta : {1e-3, 1e-2, 0.1, 1.0}) {
    const auto [l, h] = range(heat_propagate(f, eta));
    CHECK(l >= lo);
    CHECK(h <= hi);
    lo = l;
    hi = h;
  }
}

TEST_CASE("scale stack validation") {
  const Grid g = make_grid(1, 16);
  const Field f(g, 1);
  CHECK_THROWS_AS(build_scale_stack(f, 0.0, 0.5, 9), ValidationError);
  CHECK_THROWS_AS(build_scale_stack(f, 0.6, 0.5, 9), ValidationError);
  CHECK_THROWS_AS(build_scale_stack(f, 0.1, 1.5, 9), ValidationError);
  CHECK_THROWS_AS(build_scale_stack(f, 0.1, 0.5, 4), ValidationError);
  std::vector<Field> wrong(5, f.with_coords(0.0, 0.3));
  CHECK_THROWS_AS(ScaleStack(0.1, 0.1, wrong, 0.5), ValidationError);

  const ScaleStack s = build_scale_stack(f.with_coords(0.0, 0.1), 0.1, 0.5, 9);
  CHECK(s.size() == 9);
  CHECK(s.delta_eta() == doctest::Approx(0.05));
  CHECK(s.eta(8) == doctest::Approx(0.5));
  CHECK_THROWS_AS(eta_derivative(s, 0, 1), ValidationError);
  CHECK_THROWS_AS(eta_derivative(s, 8, 2), ValidationError);
  CHECK_THROWS_AS(eta_derivative(s, 4, 3), ValidationError);
}

TEST_CASE("eta differences are second order against a fourth-order oracle") {
  const Grid g = make_grid(1, 16);
  double prev1 = 0.0, prev2 = 0.0;
  for (int level = 0; level < 3; ++level) {
    const double d = 0.04 / (1 << level);
    const ScaleStack s = closed_form(g, 0.2 - 2.0 * d, d, 5, decaying);
    // Fourth-order centered stencils on the same five nodes.
    Field d1 = (1.0 / (12.0 * d)) * (s[0] - 8.0 * s[1] + 8.0 * s[3] - s[4]);
    Field d2 = (1.0 / (12.0 * d * d)) *
               (-1.0 * s[0] + 16.0 * s[1] - 30.0 * s[2] + 16.0 * s[3] - 1.0 * s[4]);
    const double e1 = oracle::max_abs_diff(eta_derivative(s, 2, 1), d1);
    const double e2 = oracle::max_abs_diff(eta_derivative(s, 2, 2), d2);
    if (level > 0) {
      CHECK(std::log2(prev1 / e1) == doctest::Approx(2.0).epsilon(0.05));
      CHECK(std::log2(prev2 / e2) == doctest::Approx(2.0).epsilon(0.05));
    }
    prev1 = e1;
    prev2 = e2;
  }
}

TEST_CASE("filter defect vanishes to O(d^2) on propagated stacks and matches psi otherwise") {
  const Grid g = make_grid(2, 32);
  const ModeFamily filtered = solenoidal_family(5, 3, 1.0, true);
  const ModeFamily rough = solenoidal_family(5, 3, 1.0, false);
  double prev = 0.0;
  std::array<double, 3> prev_psi{};
  for (int level = 0; level < 3; ++level) {
    const double d = 0.002 / (1 << level);
    const ScaleStack s = build_scale_stack(filtered.u(g, 0.0, 0.05), 0.05, 0.05 + 8 * d, 9);
    const double m = oracle::max_abs(filter_defect(s, 4));
    if (level > 0) CHECK(std::log2(prev / m) == doctest::Approx(2.0).epsilon(0.05));
    prev = m;
    const ScaleStack r = rough.stack(g, 0.0, 0.05, d, 9);
    const ScaleStack psi = filter_defect_stack(r);
    for (int i = 0; i < 3; ++i) {
      const int j = 4 * i;
      const double err = oracle::max_abs_diff(psi[j], rough.psi(g, 0.0, r.eta(j)));
      if (level > 0) CHECK(std::log2(prev_psi[i] / err) == doctest::Approx(2.0).epsilon(0.1));
      prev_psi[i] = err;
    }
  }
}

TEST_CASE("duhamel integral of a scale-constant single mode") {
  const Grid g = make_grid(1, 16);
  const double k2 = 9.0, eps = 0.01;
  double prev = 0.0;
  for (int level = 0; level < 3; ++level) {
    const int K = 8 * (1 << level) + 1;
    const double d = 0.2 / (K - 1);
    std::vector<Field> psi;
    for (int j = 0; j < K; ++j) {
      psi.push_back(sample(g, [](double x, double) { return std::cos(3 * x); }, 0.0, eps + j * d));
    }
    const ScaleStack ps(eps, d, psi, eps + 0.2);
    const Field I = duhamel_integral(ps, K - 1);
    const Field expected = ((1.0 - std::exp(-k2 * 0.2)) / k2) * ps[0];
    const double err = oracle::max_abs_diff(I, expected);
    if (level > 0) CHECK(std::log2(prev / err) == doctest::Approx(2.0).epsilon(0.05));
    prev = err;
  }
}
