#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "scalelab/grid.hpp"

namespace scalelab {

using Rational = boost::rational<std::int64_t>;

/// Coordinate labels of space-time-scale. Spatial labels x1, x2 come first so that
/// `static_cast<int>(Coord::x1) + axis` names spatial axis `axis`.
enum class Coord : std::uint8_t { x1 = 0, x2 = 1, t = 2, eta = 3 };
inline constexpr int kCoordCount = 4;
Coord spatial(int axis);
std::string coord_name(Coord c);

/// A jet variable u^alpha_I: component alpha (0-based) differentiated by the multiset I.
/// The multiset is stored as per-label counts, so mixed partials are symmetric by
/// construction (u_{x1 x2} == u_{x2 x1}).
struct JetIndex {
  int component = 0;
  std::array<std::uint8_t, kCoordCount> counts{};

  int order() const noexcept;
  int count(Coord c) const noexcept { return counts[static_cast<int>(c)]; }
  JetIndex with(Coord c, int times = 1) const;

  friend auto operator<=>(const JetIndex& a, const JetIndex& b) {
    if (auto cmp = a.component <=> b.component; cmp != 0) return cmp;
    if (auto cmp = a.order() <=> b.order(); cmp != 0) return cmp;
    return a.counts <=> b.counts;
  }
  friend bool operator==(const JetIndex&, const JetIndex&) = default;
};

/// Name in the core language: "u1", "u1_x1x2", "u2_t", "u1_x1eta".
std::string to_string(const JetIndex& j);

/// Sorted multiset of jet factors; the empty monomial is the constant 1.
using Monomial = std::vector<JetIndex>;

/// Polynomial in jet variables with exact rational coefficients, kept in canonical form:
/// sorted monomials, sorted factors, no zero coefficients. Equal polynomials therefore
/// have identical term maps.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Rational c);
  static Polynomial variable(const JetIndex& j);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest derivative order among the factors (0 for constants).
  int max_order() const noexcept;
  int degree() const noexcept;
  /// Every jet variable the polynomial references.
  std::vector<JetIndex> variables() const;

  void add_term(Monomial m, Rational c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Rational c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Rational c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const Polynomial& p);

/// A vector of polynomials over the jets of an N-component unknown in n space dimensions.
struct JetExpr {
  int n = 1;
  int N = 1;
  std::vector<Polynomial> components;

  int max_order() const noexcept;
  friend bool operator==(const JetExpr&, const JetExpr&) = default;
};

JetExpr operator-(const JetExpr& a, const JetExpr& b);

/// Components joined by "; ".
std::string to_string(const JetExpr& e);

/// Total derivative V_i: product rule over factors, u^a_I -> u^a_{I+i}.
Polynomial total_derivative(const Polynomial& p, Coord i);
JetExpr jet_total_derivative(const JetExpr& e, Coord i);

/// L = sum over spatial axes b of V_b V_b.
JetExpr jet_L(const JetExpr& e);

/// W = d_eta + sum over factors of (Laplacian u^a_I) d/du^a_I, with the Laplacian encoded
/// as sum_b u^a_{I+bb}. Expressions here carry no explicit eta dependence, so the d_eta
/// part contributes nothing.
JetExpr jet_W(const JetExpr& e);

/// s = (W - L) F. Requires F of order <= 1.
JetExpr derive_source(const JetExpr& core);

/// Formal partial derivative d p / d u^beta_J.
Polynomial formal_partial(const Polynomial& p, const JetIndex& var);

/// Coefficients of the linearized core: C[alpha][beta] = dF^alpha/du^beta and
/// Ci[alpha][beta][i] = dF^alpha/du^beta_i for every label i (x1.., t, eta).
struct FrechetTable {
  int n = 1;
  int N = 1;
  std::vector<std::vector<Polynomial>> zeroth;
  std::vector<std::vector<std::array<Polynomial, kCoordCount>>> first;

  const Polynomial& c0(int alpha, int beta) const { return zeroth.at(alpha).at(beta); }
  const Polynomial& c1(int alpha, int beta, Coord i) const {
    return first.at(alpha).at(beta)[static_cast<int>(i)];
  }
};

FrechetTable jet_frechet(const JetExpr& core);

/// Numeric values of jet variables on one grid at one (t, eta).
class JetValues {
 public:
  JetValues(const Grid& grid, double t, double eta) : grid_(grid), t_(t), eta_(eta) {}

  const Grid& grid() const noexcept { return grid_; }
  double t() const noexcept { return t_; }
  double eta() const noexcept { return eta_; }

  /// Stores a scalar field for `j` (must be single-component on this grid).
  void set(const JetIndex& j, Field f);
  bool contains(const JetIndex& j) const { return fields_.contains(j); }
  /// Throws ValidationError naming the index if absent.
  const Field& at(const JetIndex& j) const;

 private:
  Grid grid_;
  double t_;
  double eta_;
  std::map<JetIndex, Field> fields_;
};

/// Pointwise evaluation. Jet inputs are truncated to the 2/3 band and every product (and
/// the result) is dealiased.
Field jet_evaluate(const Polynomial& p, const JetValues& jets);
/// One output component per expression component.
Field jet_evaluate(const JetExpr& e, const JetValues& jets);

/// Builds jet values for every variable in `vars` from u and (when t-derivatives are
/// requested) u_t. Spatial derivatives are spectral; t-order above 1 and any eta
/// derivative are reported as missing.
JetValues make_jets(const std::vector<JetIndex>& vars, const Field& u, const Field* u_t);
std::vector<JetIndex> variables(const JetExpr& e);

}  // namespace scalelab
