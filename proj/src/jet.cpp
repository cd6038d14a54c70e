#include "scalelab/jet.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "scalelab/error.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

namespace {

std::string rational_string(Rational r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Monomial replaced(const Monomial& m, std::size_t pos, const JetIndex& j) {
  Monomial out = m;
  out[pos] = j;
  std::sort(out.begin(), out.end());
  return out;
}

template <class Fn>
JetExpr map_components(const JetExpr& e, Fn fn) {
  JetExpr out{e.n, e.N, {}};
  out.components.reserve(e.components.size());
  for (const auto& p : e.components) out.components.push_back(fn(p));
  return out;
}

void check_label(const JetExpr& e, Coord i) {
  const int idx = static_cast<int>(i);
  if (idx < 2 && idx >= e.n) throw ValidationError("spatial label beyond expression dimension");
}

}  // namespace

Coord spatial(int axis) {
  if (axis < 0 || axis > 1) throw ValidationError("spatial axis must be 0 or 1");
  return static_cast<Coord>(axis);
}

std::string coord_name(Coord c) {
  switch (c) {
    case Coord::x1: return "x1";
    case Coord::x2: return "x2";
    case Coord::t: return "t";
    case Coord::eta: return "eta";
  }
  return "?";
}

int JetIndex::order() const noexcept {
  int o = 0;
  for (auto c : counts) o += c;
  return o;
}

JetIndex JetIndex::with(Coord c, int times) const {
  JetIndex out = *this;
  out.counts[static_cast<int>(c)] = static_cast<std::uint8_t>(out.counts[static_cast<int>(c)] + times);
  return out;
}

std::string to_string(const JetIndex& j) {
  std::string s = "u" + std::to_string(j.component + 1);
  if (j.order() == 0) return s;
  s += '_';
  for (Coord c : {Coord::x1, Coord::x2, Coord::t, Coord::eta}) {
    for (int k = 0; k < j.count(c); ++k) s += coord_name(c);
  }
  return s;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(const JetIndex& j) {
  Polynomial p;
  p.add_term({j}, Rational(1));
  return p;
}

int Polynomial::max_order() const noexcept {
  int o = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m) o = std::max(o, f.order());
  }
  return o;
}

int Polynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return static_cast<int>(d);
}

std::vector<JetIndex> Polynomial::variables() const {
  std::set<JetIndex> vars;
  for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
  return {vars.begin(), vars.end()};
}

void Polynomial::add_term(Monomial m, Rational c) {
  if (c.numerator() == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Rational c) {
  if (c.numerator() == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.numerator() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t k = i;
      while (k < m.size() && m[k] == m[i]) ++k;
      if (!body.empty()) body += '*';
      body += to_string(m[i]);
      if (k - i > 1) body += '^' + std::to_string(k - i);
      i = k;
    }
    if (body.empty()) {
      out += rational_string(mag);
    } else if (mag == Rational(1)) {
      out += body;
    } else {
      out += rational_string(mag) + '*' + body;
    }
  }
  return out;
}

int JetExpr::max_order() const noexcept {
  int o = 0;
  for (const auto& p : components) o = std::max(o, p.max_order());
  return o;
}

JetExpr operator-(const JetExpr& a, const JetExpr& b) {
  if (a.components.size() != b.components.size()) {
    throw ValidationError("jet expressions differ in component count");
  }
  JetExpr out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] -= b.components[i];
  return out;
}

std::string to_string(const JetExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    if (i > 0) out += "; ";
    out += to_string(e.components[i]);
  }
  return out;
}

Polynomial total_derivative(const Polynomial& p, Coord i) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) out.add_term(replaced(m, k, m[k].with(i)), c);
  }
  return out;
}

JetExpr jet_total_derivative(const JetExpr& e, Coord i) {
  check_label(e, i);
  return map_components(e, [i](const Polynomial& p) { return total_derivative(p, i); });
}

JetExpr jet_L(const JetExpr& e) {
  JetExpr out{e.n, e.N, std::vector<Polynomial>(e.components.size())};
  for (int b = 0; b < e.n; ++b) {
    const JetExpr twice = jet_total_derivative(jet_total_derivative(e, spatial(b)), spatial(b));
    for (std::size_t c = 0; c < out.components.size(); ++c) out.components[c] += twice.components[c];
  }
  return out;
}

JetExpr jet_W(const JetExpr& e) {
  const int n = e.n;
  return map_components(e, [n](const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        for (int b = 0; b < n; ++b) out.add_term(replaced(m, k, m[k].with(spatial(b), 2)), c);
      }
    }
    return out;
  });
}

JetExpr derive_source(const JetExpr& core) {
  if (core.max_order() > 1) {
    throw ValidationError("derive_source expects a first-order core (jets of order <= 1)");
  }
  return jet_W(core) - jet_L(core);
}

Polynomial formal_partial(const Polynomial& p, const JetIndex& var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const auto mult = std::count(m.begin(), m.end(), var);
    if (mult == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), var));
    out.add_term(std::move(rest), c * Rational(mult));
  }
  return out;
}

FrechetTable jet_frechet(const JetExpr& core) {
  if (core.max_order() > 1) throw ValidationError("jet_frechet expects a first-order core");
  FrechetTable table;
  table.n = core.n;
  table.N = core.N;
  const auto rows = core.components.size();
  table.zeroth.assign(rows, std::vector<Polynomial>(static_cast<std::size_t>(core.N)));
  table.first.assign(rows, std::vector<std::array<Polynomial, kCoordCount>>(
                               static_cast<std::size_t>(core.N)));
  for (std::size_t alpha = 0; alpha < rows; ++alpha) {
    for (int beta = 0; beta < core.N; ++beta) {
      const JetIndex base{beta, {}};
      table.zeroth[alpha][beta] = formal_partial(core.components[alpha], base);
      for (int i = 0; i < kCoordCount; ++i) {
        table.first[alpha][beta][i] =
            formal_partial(core.components[alpha], base.with(static_cast<Coord>(i)));
      }
    }
  }
  return table;
}

void JetValues::set(const JetIndex& j, Field f) {
  if (f.components() != 1 || !(f.grid() == grid_)) {
    throw ValidationError("jet value for " + to_string(j) + " must be scalar on the jet grid");
  }
  fields_.insert_or_assign(j, std::move(f));
}

const Field& JetValues::at(const JetIndex& j) const {
  auto it = fields_.find(j);
  if (it == fields_.end()) throw ValidationError("missing jet value for " + to_string(j));
  return it->second;
}

Field jet_evaluate(const Polynomial& p, const JetValues& jets) {
  Field out(jets.grid(), 1, jets.t(), jets.eta());
  std::map<JetIndex, Field> banded;
  auto band = [&](const JetIndex& j) -> const Field& {
    auto it = banded.find(j);
    if (it == banded.end()) it = banded.emplace(j, dealias(jets.at(j))).first;
    return it->second;
  };
  for (const auto& [m, c] : p.terms()) {
    const double coeff = boost::rational_cast<double>(c);
    if (m.empty()) {
      for (double& v : out.values()) v += coeff;
      continue;
    }
    Field term = band(m[0]);
    for (std::size_t k = 1; k < m.size(); ++k) term = banded_product(term, band(m[k]));
    out.add_scaled(coeff, term);
  }
  return out.with_coords(jets.t(), jets.eta());
}

Field jet_evaluate(const JetExpr& e, const JetValues& jets) {
  std::vector<Field> parts;
  parts.reserve(e.components.size());
  for (const auto& p : e.components) parts.push_back(jet_evaluate(p, jets));
  return concat(parts).with_coords(jets.t(), jets.eta());
}

std::vector<JetIndex> variables(const JetExpr& e) {
  std::set<JetIndex> vars;
  for (const auto& p : e.components) {
    for (const auto& v : p.variables()) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

JetValues make_jets(const std::vector<JetIndex>& vars, const Field& u, const Field* u_t) {
  JetValues jets(u.grid(), u.t(), u.eta());
  for (const auto& j : vars) {
    if (j.component < 0 || j.component >= u.components()) {
      throw ValidationError("jet " + to_string(j) + " references a component the field lacks");
    }
    if (j.count(Coord::eta) > 0 || j.count(Coord::t) > 1) continue;
    const Field* source = &u;
    if (j.count(Coord::t) == 1) {
      if (u_t == nullptr) continue;
      source = u_t;
    }
    if (u.grid().dim() == 1 && j.count(Coord::x2) > 0) {
      throw ValidationError("jet " + to_string(j) + " uses x2 on a 1-D grid");
    }
    jets.set(j, partial_derivative(source->extract(j.component),
                                   {j.count(Coord::x1), j.count(Coord::x2)}));
  }
  return jets;
}

}  // namespace scalelab
