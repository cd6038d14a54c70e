#pragma once

// Independent reference computations used by the unit tests. Nothing here calls into
// the transform or filter code under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "scalelab/grid.hpp"

namespace oracle {

using cplx = std::complex<double>;

/// O(points^2) forward DFT with the library's 1/points normalization.
inline std::vector<cplx> direct_dft(const scalelab::Field& f, int c = 0) {
  const auto& g = f.grid();
  const auto vals = f.component(c);
  std::vector<cplx> out(g.points());
  for (std::size_t m = 0; m < g.points(); ++m) {
    cplx acc = 0.0;
    for (std::size_t p = 0; p < g.points(); ++p) {
      double phase = 0.0;
      for (int a = 0; a < g.dim(); ++a) phase += g.wavenumber(m, a) * g.coordinate(p, a);
      acc += vals[p] * std::polar(1.0, -phase);
    }
    out[m] = acc / static_cast<double>(g.points());
  }
  return out;
}

/// Random real trigonometric polynomial with |k_axis| <= kmax, sampled point by point.
struct TrigPoly {
  struct Term {
    int kx, ky;
    double a, b;
  };
  std::vector<Term> terms;

  TrigPoly(std::uint64_t seed, int kmax, int dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int kx = -kmax; kx <= kmax; ++kx) {
      for (int ky = (dim == 2 ? -kmax : 0); ky <= (dim == 2 ? kmax : 0); ++ky) {
        terms.push_back({kx, ky, u(rng), u(rng)});
      }
    }
  }
  /// Value of d^ox/dx^ox d^oy/dy^oy after heat propagation by eta.
  double operator()(double x, double y, int ox = 0, int oy = 0, double eta = 0.0) const {
    double s = 0.0;
    for (const auto& t : terms) {
      const double th = t.kx * x + t.ky * y;
      const double decay = std::exp(-eta * (t.kx * t.kx + t.ky * t.ky));
      // d^n/dth^n of a cos + b sin = a cos(th + n pi/2) + b sin(th + n pi/2)
      const int n = ox + oy;
      const double shift = n * std::numbers::pi / 2.0;
      const double factor = std::pow(t.kx, ox) * std::pow(t.ky, oy);
      s += decay * factor * (t.a * std::cos(th + shift) + t.b * std::sin(th + shift));
    }
    return s;
  }
  scalelab::Field sample(const scalelab::Grid& g, int ox = 0, int oy = 0, double eta = 0.0) const {
    return scalelab::sample(g, [&](double x, double y) { return (*this)(x, y, ox, oy, eta); });
  }
};

inline double max_abs_diff(const scalelab::Field& a, const scalelab::Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  }
  return m;
}

inline double max_abs(const scalelab::Field& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace oracle
