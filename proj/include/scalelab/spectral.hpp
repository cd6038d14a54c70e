#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "scalelab/grid.hpp"

namespace scalelab {

/// Fourier coefficients of a Field over the full wavenumber lattice.
///
/// Normalization: coeffs = (1/points) * sum_x f(x) exp(-i k.x), so the zero mode is
/// the spatial mean. Coefficients of k and -k are conjugate for real data.
struct SpectralField {
  SpectralField(const Grid& grid, int components);

  Grid grid;
  int components;
  std::vector<std::complex<double>> coeffs;

  std::span<std::complex<double>> component(int c);
  std::span<const std::complex<double>> component(int c) const;
};

SpectralField to_spectral(const Field& f);
/// Real part of the inverse transform.
Field from_spectral(const SpectralField& s, double t = 0.0, double eta = 0.0);

/// d^order f / dx_axis^order. The Nyquist mode is dropped for odd orders.
Field spectral_derivative(const Field& f, int axis, int order);
/// Mixed partial with per-axis orders.
Field partial_derivative(const Field& f, std::array<int, 2> orders);
Field laplacian(const Field& f);
/// Gradient of a scalar field: dim components.
Field gradient(const Field& scalar);
/// Divergence of a dim-component field.
Field divergence(const Field& vec);

/// 2/3 rule: zero every mode with some |k_axis| >= size/3. Products of two fields inside
/// the band then alias only onto truncated modes.
SpectralField dealias(const SpectralField& s);
Field dealias(const Field& f);
bool in_dealiased_band(const Grid& grid, std::size_t mode);

/// Pointwise product of two single-component fields, both truncated to the 2/3 band and
/// the result truncated again. Exact (alias-free) for band-limited inputs.
Field dealiased_product(const Field& a, const Field& b);
/// Same, for inputs already inside the band (skips the input truncation).
Field banded_product(const Field& a, const Field& b);

struct Norms {
  double l2;
  double max;
};

/// l2 = root-mean-square over all components and points times the torus measure;
/// max = largest |value|.
Norms field_norms(const Field& f);
/// The l2 norm of field_norms computed from coefficients (Parseval).
double spectral_l2(const SpectralField& s);

}  // namespace scalelab
