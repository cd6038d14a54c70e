#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scalelab/grid.hpp"
#include "scalelab/heat_filter.hpp"

namespace scalelab {

/// Amplitude g(t) = (a0 + a1 sin(omega t))^power, power in {1, 2}.
struct TimeProfile {
  double a0 = 1.0;
  double a1 = 0.0;
  double omega = 0.0;
  int power = 1;

  double value(double t) const;
  double rate(double t) const;
};

/// One term coeff * g(t) * exp(-decay * eta) * cos(k.x + phase) of a field component.
/// The term solves the scale heat equation exactly when decay == |k|^2.
struct ModeTerm {
  int component = 0;
  int k[2] = {0, 0};
  double phase = 0.0;
  double coeff = 1.0;
  TimeProfile time;
  double decay = 0.0;
};

/// Closed-form space-time-scale family built from a finite sum of Fourier modes. All
/// derivatives (t, eta, spatial) are available exactly, which makes these families the
/// manufactured solutions behind the convergence experiments.
class ModeFamily {
 public:
  ModeFamily(std::string name, int n, int N, std::vector<ModeTerm> terms);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return n_; }
  int components() const noexcept { return N_; }
  const std::vector<ModeTerm>& terms() const noexcept { return terms_; }
  /// True when every term has decay == |k|^2 (the family is a filter map).
  bool filtered() const;

  Field u(const Grid& grid, double t, double eta) const;
  Field u_t(const Grid& grid, double t, double eta) const;
  Field u_eta(const Grid& grid, double t, double eta) const;
  /// psi = (d_eta - Laplacian) u, exactly.
  Field psi(const Grid& grid, double t, double eta) const;
  /// d_t psi, exactly.
  Field psi_t(const Grid& grid, double t, double eta) const;

  /// Stacks of u and u_t sampled at eta_j = first_eta + j * delta_eta.
  ScaleStack stack(const Grid& grid, double t, double first_eta, double delta_eta, int K) const;
  ScaleStack stack_t(const Grid& grid, double t, double first_eta, double delta_eta, int K) const;

 private:
  enum class Part { value, t_rate, eta_rate, defect, defect_rate };
  Field evaluate(const Grid& grid, double t, double eta, Part part) const;

  std::string name_;
  int n_;
  int N_;
  std::vector<ModeTerm> terms_;
};

/// Filtered Taylor-Green fluid family (n = 2, N = 3): v = g(t) e^{-2 eta}
/// (sin x cos y, -cos x sin y), plus `perturbation` times the velocity of the
/// streamfunction cos(x + 2y), and the pressure g^2 e^{-4 eta} (cos 2x + cos 2y) / 4,
/// which balances the TG advection exactly.
ModeFamily taylor_green_family(const TimeProfile& g, double perturbation = 0.0);

/// Random divergence-free fluid family (n = 2, N = 3) with streamfunction and pressure
/// modes |k_i| <= kmax. When `filtered` is false every term decays at a rate different
/// from |k|^2, so psi != 0.
ModeFamily solenoidal_family(std::uint64_t seed, int kmax, double amplitude, bool filtered);

/// Random scalar family (n = 1, N = 1) with modes 1 <= k <= kmax (plus a mean).
ModeFamily scalar_family(std::uint64_t seed, int kmax, double amplitude, bool filtered);

}  // namespace scalelab
