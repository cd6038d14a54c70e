#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scalelab/error.hpp"
#include "scalelab/spectral.hpp"

using namespace scalelab;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(make_grid(3, 16), ValidationError);
  CHECK_THROWS_AS(make_grid(2, 6), ValidationError);
  CHECK_THROWS_AS(make_grid(1, 17), ValidationError);
  const Grid g = make_grid(2, 8);
  CHECK(g.points() == 64);
  CHECK(g.nyquist() == 4);
  CHECK(g.wavenumber(4, 0) == 4);
  CHECK(g.odd_wavenumber(4, 0) == 0);
  CHECK(g.wavenumber(5, 0) == -3);
  CHECK(g.wavenumber(8 * 7, 1) == -1);
  CHECK(g.measure() == doctest::Approx(4.0 * M_PI * M_PI));
}

TEST_CASE("field arithmetic and layout") {
  const Grid g = make_grid(2, 8);
  Field a = sample(g, [](double x, double y) { return x + 10 * y; });
  CHECK(a.values()[1] == doctest::Approx(g.spacing()));
  CHECK(a.values()[8] == doctest::Approx(10 * g.spacing()));
  Field b = 2.0 * a;
  b -= a;
  CHECK(oracle::max_abs_diff(a, b) == 0.0);
  CHECK_THROWS_AS(a += Field(make_grid(2, 16), 1), ValidationError);
  const Field v = concat(std::vector<Field>{a, b});
  CHECK(v.components() == 2);
  CHECK(oracle::max_abs_diff(v.extract(1), b) == 0.0);
}

TEST_CASE("forward transform matches a direct DFT") {
  for (int dim : {1, 2}) {
    const Grid g = make_grid(dim, dim == 1 ? 32 : 16);
    const Field f = sample(g, [](double x, double y) {
      return std::exp(std::sin(x) * std::cos(y)) + 0.3 * std::cos(7.0 * x - 2.0 * y);
    });
    const auto ref = oracle::direct_dft(f);
    const SpectralField s = to_spectral(f);
    double err = 0.0;
    for (std::size_t m = 0; m < g.points(); ++m) err = std::max(err, std::abs(s.coeffs[m] - ref[m]));
    CHECK(err < 1e-14);
    CHECK(oracle::max_abs_diff(from_spectral(s), f) < 1e-14);
  }
}

TEST_CASE("spectral derivatives match closed forms") {
  const Grid g = make_grid(2, 32);
  const oracle::TrigPoly p(3, 5, 2);
  const Field f = p.sample(g);
  CHECK(oracle::max_abs_diff(spectral_derivative(f, 0, 1), p.sample(g, 1, 0)) < 1e-11);
  CHECK(oracle::max_abs_diff(spectral_derivative(f, 1, 3), p.sample(g, 0, 3)) < 1e-9);
  CHECK(oracle::max_abs_diff(partial_derivative(f, {1, 2}), p.sample(g, 1, 2)) < 1e-10);
  const Field lap = laplacian(f);
  CHECK(oracle::max_abs_diff(lap, p.sample(g, 2, 0) + p.sample(g, 0, 2)) < 1e-10);
}

TEST_CASE("odd derivatives drop the Nyquist mode") {
  const Grid g = make_grid(1, 16);
  const Field nyq = sample(g, [](double x, double) { return std::cos(8.0 * x); });
  CHECK(oracle::max_abs(spectral_derivative(nyq, 0, 1)) < 1e-13);
  CHECK(oracle::max_abs_diff(spectral_derivative(nyq, 0, 2), -64.0 * nyq) < 1e-11);
}

TEST_CASE("gradient and divergence") {
  const Grid g = make_grid(2, 16);
  const Field phi = sample(g, [](double x, double y) { return std::sin(x) * std::cos(2 * y); });
  const Field grad = gradient(phi);
  CHECK(grad.components() == 2);
  const Field div = divergence(grad);
  CHECK(oracle::max_abs_diff(div, -5.0 * phi) < 1e-12);
  const Field rot = concat(std::vector<Field>{grad.extract(1), -1.0 * grad.extract(0)});
  CHECK(oracle::max_abs(divergence(rot)) < 1e-12);
}

TEST_CASE("dealiasing keeps exactly the 2/3 band") {
  const Grid g = make_grid(1, 24);
  const Field low = sample(g, [](double x, double) { return std::cos(7.0 * x); });
  const Field high = sample(g, [](double x, double) { return std::cos(8.0 * x); });
  CHECK(oracle::max_abs_diff(dealias(low), low) < 1e-14);
  CHECK(oracle::max_abs(dealias(high)) < 1e-14);
}

TEST_CASE("dealiased products are alias-free for band-limited inputs") {
  const Grid g = make_grid(1, 24);
  // cos 7x * cos 7x = (1 + cos 14x) / 2; cos 14x aliases to cos 10x on 24 points, which the
  // output truncation removes.
  const Field c7 = sample(g, [](double x, double) { return std::cos(7.0 * x); });
  const Field prod = dealiased_product(c7, c7);
  for (double v : prod.values()) CHECK(v == doctest::Approx(0.5).epsilon(1e-13));
  // cos 8x is outside the band: cos^2 8x would alias onto the kept mode 8.
  const Field c8 = sample(g, [](double x, double) { return std::cos(8.0 * x); });
  CHECK(oracle::max_abs(dealiased_product(c8, c8)) < 1e-15);
  const Field c3 = sample(g, [](double x, double) { return std::cos(3.0 * x); });
  const Field s2 = sample(g, [](double x, double) { return std::sin(2.0 * x); });
  const Field expected = sample(g, [](double x, double) { return std::cos(3 * x) * std::sin(2 * x); });
  CHECK(oracle::max_abs_diff(banded_product(c3, s2), expected) < 1e-14);
}

TEST_CASE("norms: Parseval and conventions") {
  const Grid g = make_grid(2, 16);
  const Field f = sample(g, [](double x, double y) { return std::sin(x) + std::cos(3 * y); });
  const Norms n = field_norms(f);
  // mean of f^2 = 1/2 + 1/2
  CHECK(n.l2 == doctest::Approx(std::sqrt(1.0) * g.measure()));
  CHECK(n.max == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(spectral_l2(to_spectral(f)) == doctest::Approx(n.l2).epsilon(1e-14));
}
