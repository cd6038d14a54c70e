#include "scalelab/fluid.hpp"

#include <cmath>
#include <complex>
#include <iostream>

#include "scalelab/error.hpp"
#include "scalelab/jet_parser.hpp"
#include "scalelab/kernels.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

namespace {

void require_vector(const Field& v, const char* what) {
  if (v.components() != v.grid().dim()) {
    throw ValidationError(std::string(what) + " expects one component per spatial axis");
  }
}

}  // namespace

TensorField::TensorField(const Grid& grid, double t, double eta)
    : grid_(grid), storage_(grid, grid.dim() * (grid.dim() + 1) / 2, t, eta) {}

int TensorField::slot(int a, int b) const {
  const int n = grid_.dim();
  if (a < 0 || b < 0 || a >= n || b >= n) throw ValidationError("tensor index out of range");
  if (a > b) std::swap(a, b);
  // Row-major upper triangle.
  return a * n - a * (a - 1) / 2 + (b - a);
}

double max_divergence(const Field& v) { return kernels::max_abs(divergence(v).values()); }

FluidState::FluidState(Field v, Field p) : v_(std::move(v)), p_(std::move(p)) {
  require_vector(v_, "fluid state velocity");
  if (p_.components() != 1 || !(p_.grid() == v_.grid())) {
    throw ValidationError("fluid state pressure must be scalar on the velocity grid");
  }
  const double div = max_divergence(v_);
  if (div > 1e-10) {
    throw ValidationError("fluid state velocity is not divergence-free (max|div v| = " +
                          std::to_string(div) + ")");
  }
  const double mean = kernels::sum(p_.values()) / static_cast<double>(p_.grid().points());
  for (double& x : p_.values()) x -= mean;
}

Field FluidState::as_unknown() const {
  const Field parts[] = {v_, p_};
  return concat(parts);
}

Field advect(const Field& a, const Field& b) {
  require_vector(a, "advect");
  require_vector(b, "advect");
  const int n = a.grid().dim();
  std::vector<Field> a_band;
  for (int c = 0; c < n; ++c) a_band.push_back(dealias(a.extract(c)));
  std::vector<Field> out;
  for (int comp = 0; comp < n; ++comp) {
    Field acc(a.grid(), 1, a.t(), a.eta());
    const Field bc = b.extract(comp);
    for (int c = 0; c < n; ++c) {
      acc += banded_product(a_band[c], dealias(spectral_derivative(bc, c, 1)));
    }
    out.push_back(std::move(acc));
  }
  return concat(out).with_coords(a.t(), a.eta());
}

TensorField sigma(const Field& v) {
  require_vector(v, "sigma");
  const int n = v.grid().dim();
  std::vector<std::vector<Field>> grad(n);  // grad[a][c] = dv^a/dx^c, band-limited
  for (int a = 0; a < n; ++a) {
    const Field va = v.extract(a);
    for (int c = 0; c < n; ++c) grad[a].push_back(dealias(spectral_derivative(va, c, 1)));
  }
  TensorField out(v.grid(), v.t(), v.eta());
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Field acc(v.grid(), 1);
      for (int c = 0; c < n; ++c) acc += banded_product(grad[a][c], grad[b][c]);
      std::copy(acc.values().begin(), acc.values().end(), out(a, b).begin());
    }
  }
  return out;
}

Field fluid_source(const Field& v) {
  require_vector(v, "fluid_source");
  const double div = max_divergence(v);
  if (div > 1e-8) {
    std::cerr << "warning: fluid_source on a velocity with max|div v| = " << div
              << "; the divergence form of the source assumes div v = 0\n";
  }
  const int n = v.grid().dim();
  const TensorField s = sigma(v);
  Field out(v.grid(), n + 1, v.t(), v.eta());
  for (int a = 0; a < n; ++a) {
    Field acc(v.grid(), 1);
    for (int b = 0; b < n; ++b) acc += spectral_derivative(s.entry(a, b), b, 1);
    acc *= -2.0;
    std::copy(acc.values().begin(), acc.values().end(), out.component(a).begin());
  }
  return out;
}

Field acceleration(const Field& v, const Field& v_t) {
  Field a = advect(v, v);
  a += dealias(v_t);
  return a;
}

LerayParts leray_project(const Field& w) {
  require_vector(w, "leray_project");
  const Grid& grid = w.grid();
  const int n = grid.dim();
  SpectralField s = to_spectral(w);
  SpectralField phi(grid, 1);
  for (std::size_t p = 0; p < grid.points(); ++p) {
    double k[2] = {0.0, 0.0};
    double k2 = 0.0;
    for (int a = 0; a < n; ++a) {
      k[a] = grid.odd_wavenumber(p, a);
      k2 += k[a] * k[a];
    }
    if (k2 == 0.0) continue;
    std::complex<double> kw{0.0, 0.0};
    for (int a = 0; a < n; ++a) kw += k[a] * s.component(a)[p];
    // grad(phi) has coefficients i k phi_hat = k (k.w_hat)/|k|^2.
    phi.coeffs[p] = std::complex<double>(0.0, -1.0) * kw / k2;
    for (int a = 0; a < n; ++a) s.component(a)[p] -= k[a] * kw / k2;
  }
  return {from_spectral(s, w.t(), w.eta()), from_spectral(phi, w.t(), w.eta())};
}

Field fluid_core_eval(const FluidState& state, const Field& v_t) {
  const Field& v = state.v();
  Field momentum = acceleration(v, v_t);
  momentum += gradient(state.p());
  const Field parts[] = {momentum, divergence(v)};
  return concat(parts).with_coords(v.t(), v.eta());
}

CoreFunction burgers_core() {
  CoreFunction core;
  core.name = "burgers";
  core.N = 1;
  core.n = 1;
  core.symbolic = parse_core("u1_t + u1*u1_x1", 1);
  core.numeric = [](const Field& u, const Field& u_t) {
    Field r = dealiased_product(u, spectral_derivative(u, 0, 1));
    r += dealias(u_t);
    return r;
  };
  core.jet_order = 1;
  return core;
}

CoreFunction fluid_core(int n) {
  if (n != 1 && n != 2) throw ValidationError("fluid core dimension must be 1 or 2");
  CoreFunction core;
  core.name = "fluid";
  core.N = n + 1;
  core.n = n;
  std::string text;
  const std::string p = "u" + std::to_string(n + 1);
  for (int a = 1; a <= n; ++a) {
    const std::string va = "u" + std::to_string(a);
    text += va + "_t";
    for (int b = 1; b <= n; ++b) text += " + u" + std::to_string(b) + "*" + va + "_x" + std::to_string(b);
    text += " + " + p + "_x" + std::to_string(a) + "\n";
  }
  for (int b = 1; b <= n; ++b) text += (b > 1 ? " + u" : "u") + std::to_string(b) + "_x" + std::to_string(b);
  core.symbolic = parse_core(text, n);
  core.numeric = [n](const Field& u, const Field& u_t) {
    std::vector<Field> vs, vts;
    for (int a = 0; a < n; ++a) {
      vs.push_back(u.extract(a));
      vts.push_back(u_t.extract(a));
    }
    const Field v = concat(vs);
    const Field v_t = concat(vts);
    Field momentum = acceleration(v, v_t);
    momentum += dealias(gradient(u.extract(n)));
    const Field parts[] = {momentum, dealias(divergence(v))};
    return concat(parts).with_coords(u.t(), u.eta());
  };
  core.jet_order = 1;
  return core;
}

CoreFunction core_by_name(const std::string& name, int n) {
  if (name == "burgers") return burgers_core();
  if (name == "fluid") return fluid_core(n);
  throw ValidationError("unknown core '" + name + "' (expected burgers or fluid)");
}

}  // namespace scalelab
