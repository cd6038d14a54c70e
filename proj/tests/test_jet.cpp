#include <random>

#include "doctest.h"
#include "scalelab/error.hpp"
#include "scalelab/fluid.hpp"
#include "scalelab/jet.hpp"
#include "scalelab/jet_parser.hpp"

using namespace scalelab;

namespace {

/// First component of `text`, parsed with three unknowns available.
Polynomial P(const std::string& text, int n = 2) {
  return parse_expr(text + "\n0\n0", n, true).components.at(0);
}

/// Random polynomial over a small alphabet of jet variables.
Polynomial random_poly(std::mt19937_64& rng, int n) {
  const std::vector<std::string> alphabet{"u1", "u1_x1", "u2_x1x1", "u1_t", "u2", "u2_x2", "u1_x1x2", "u2_eta"};
  (void)n;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> coeff(-5, 5), terms(0, 4), degree(0, 3);
  Polynomial p;
  const int T = terms(rng);
  for (int t = 0; t < T; ++t) {
    Polynomial m = Polynomial::constant(Rational(coeff(rng), 1 + (coeff(rng) + 5) % 3));
    const int D = degree(rng);
    for (int k = 0; k < D; ++k) {
      m = m * P(alphabet[static_cast<std::size_t>(pick(rng))]);
    }
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("jet index naming and ordering") {
  const JetIndex u{0, {}};
  const JetIndex uxx = u.with(Coord::x1, 2);
  CHECK(to_string(uxx) == "u1_x1x1");
  CHECK(to_string(u.with(Coord::x2).with(Coord::x1)) == "u1_x1x2");
  CHECK(to_string(JetIndex{1, {}}.with(Coord::t).with(Coord::eta)) == "u2_teta");
  CHECK(u < uxx);
  CHECK(u.with(Coord::x1).with(Coord::x2) == u.with(Coord::x2).with(Coord::x1));
}

TEST_CASE("canonical polynomial form") {
  CHECK(P("u1*u2 - u2*u1") == Polynomial{});
  CHECK(P("(u1 + u2)^2") == P("u1^2 + 2*u1*u2 + u2^2"));
  CHECK(P("u1/2 + 0.5*u1") == P("u1"));
  CHECK(to_string(P("-2*u1_x1*u1_x1x1")) == "-2*u1_x1*u1_x1x1");
  CHECK(to_string(P("3/4*u1^2 - u2 + 1")) == "1 + 3/4*u1^2 - u2");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(P("u1*u1_x1").degree() == 2);
  CHECK(P("u1*u1_x1x2").max_order() == 2);
}

TEST_CASE("total derivative: product rule and commutativity") {
  CHECK(total_derivative(P("u1*u1_x1"), Coord::x1) == P("u1_x1^2 + u1*u1_x1x1"));
  CHECK(total_derivative(P("7"), Coord::x2) == Polynomial{});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = random_poly(rng, 2), b = random_poly(rng, 2);
    CHECK(total_derivative(total_derivative(a, Coord::x1), Coord::x2) ==
          total_derivative(total_derivative(a, Coord::x2), Coord::x1));
    CHECK(total_derivative(a * b, Coord::t) ==
          total_derivative(a, Coord::t) * b + a * total_derivative(b, Coord::t));
    CHECK(total_derivative(a + b, Coord::eta) ==
          total_derivative(a, Coord::eta) + total_derivative(b, Coord::eta));
  }
}

TEST_CASE("W, L and the source of the Burgers core") {
  const JetExpr burgers = parse_core("u1_t + u1*u1_x1", 1);
  CHECK(jet_W(burgers) == parse_expr("u1_x1x1t + u1_x1x1*u1_x1 + u1*u1_x1x1x1", 1, false));
  CHECK(jet_L(burgers) ==
        parse_expr("u1_x1x1t + u1_x1x1*u1_x1 + 2*u1_x1*u1_x1x1 + u1*u1_x1x1x1", 1, false));
  CHECK(to_string(derive_source(burgers)) == "-2*u1_x1*u1_x1x1");
  CHECK(derive_source(burgers) == derive_source(burgers_core().symbolic));
}

TEST_CASE("fluid core source equals -2 sum_bc v^b_c v^a_bc") {
  for (int n : {1, 2}) {
    const JetExpr s = derive_source(fluid_core(n).symbolic);
    REQUIRE(static_cast<int>(s.components.size()) == n + 1);
    for (int a = 0; a < n; ++a) {
      Polynomial expected;
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          const JetIndex vb_c = JetIndex{b, {}}.with(spatial(c));
          const JetIndex va_bc = JetIndex{a, {}}.with(spatial(b)).with(spatial(c));
          expected += Rational(-2) * (Polynomial::variable(vb_c) * Polynomial::variable(va_bc));
        }
      }
      CHECK(s.components[static_cast<std::size_t>(a)] == expected);
    }
    CHECK(s.components[static_cast<std::size_t>(n)].is_zero());
  }
}

TEST_CASE("linear cores have zero source") {
  for (const char* text : {"u1_t + 3*u1_x1 - u1", "u1_t - u2_x1; u2_t - u1_x1", "u1_x1 + 2"}) {
    const JetExpr s = derive_source(parse_core(text, 1));
    for (const auto& c : s.components) CHECK(c.is_zero());
  }
  CHECK_THROWS_AS(derive_source(parse_core("u1_x1x1", 1)), ValidationError);
}

TEST_CASE("linearization coefficients of the fluid core") {
  const FrechetTable t = jet_frechet(fluid_core(2).symbolic);
  // F^1 = v1_t + v1 v1_x1 + v2 v1_x2 + p_x1
  CHECK(t.c0(0, 0) == P("u1_x1"));
  CHECK(t.c0(0, 1) == P("u1_x2"));
  CHECK(t.c1(0, 0, Coord::t) == P("1"));
  CHECK(t.c1(0, 0, Coord::x1) == P("u1"));
  CHECK(t.c1(0, 0, Coord::x2) == P("u2"));
  CHECK(t.c1(0, 2, Coord::x1) == P("1"));
  CHECK(t.c1(2, 1, Coord::x2) == P("1"));
  CHECK(t.c0(2, 0).is_zero());
}

TEST_CASE("parser errors carry locations") {
  auto message = [](const char* text, int n = 1) {
    try {
      parse_core(text, n);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("u1_t + (u1*u1_x1").find("line 1, column 17") != std::string::npos);
  CHECK(message("u1_t + (u1*u1_x1").find("unbalanced") != std::string::npos);
  CHECK(message("u1 + v").find("unknown identifier") != std::string::npos);
  CHECK(message("u1 + u2").find("u2") != std::string::npos);
  CHECK(message("u1_x2").find("x2") != std::string::npos);
  CHECK(message("u1_eta").find("eta") != std::string::npos);
  CHECK(message("u1 / u1").find("non-constant") != std::string::npos);
  CHECK(message("u1;\nu2 +").find("line 2") != std::string::npos);
  CHECK(parse_core("u1_t + u2_x1\nu2_t + u1_x1", 1).N == 2);
}

TEST_CASE("print/parse round trip on random expressions") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    JetExpr e{2, 2, {random_poly(rng, 2), random_poly(rng, 2)}};
    const JetExpr back = parse_expr(to_string(e), 2, true);
    CHECK(back.components == e.components);
  }
}
