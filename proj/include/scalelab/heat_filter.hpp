#pragma once

#include <vector>

#include "scalelab/grid.hpp"

namespace scalelab {

/// Mode-wise solution operator of the scale heat equation (d_eta - Laplacian) u = 0 on
/// the torus: mode k is multiplied by exp(-delta_eta |k|^2). The zero mode multiplier
/// is exactly 1, which is the periodic counterpart of a unit-mass Gaussian kernel.
class HeatPropagator {
 public:
  HeatPropagator(const Grid& grid, double delta_eta);

  const Grid& grid() const noexcept { return grid_; }
  double delta_eta() const noexcept { return delta_eta_; }
  const std::vector<double>& multipliers() const noexcept { return multipliers_; }

  /// Propagates f; the result carries eta + delta_eta.
  Field apply(const Field& f) const;

 private:
  Grid grid_;
  double delta_eta_;
  std::vector<double> multipliers_;
};

/// Rejects negative increments: backward heat flow is not supported.
Field heat_propagate(const Field& f, double delta_eta);

/// Fields at uniformly spaced scale nodes eta_j = epsilon + j * delta_eta, j = 0..K-1,
/// all at one time t.
class ScaleStack {
 public:
  /// Validates K >= 5, delta_eta > 0 and that every field's eta matches its node.
  ScaleStack(double epsilon, double delta_eta, std::vector<Field> fields, double eta0);

  double epsilon() const noexcept { return epsilon_; }
  double eta0() const noexcept { return eta0_; }
  double delta_eta() const noexcept { return delta_eta_; }
  int size() const noexcept { return static_cast<int>(fields_.size()); }
  double eta(int node) const noexcept { return epsilon_ + node * delta_eta_; }
  const Field& operator[](int node) const { return fields_.at(static_cast<std::size_t>(node)); }
  const std::vector<Field>& fields() const noexcept { return fields_; }

 private:
  double epsilon_;
  double delta_eta_;
  double eta0_;
  std::vector<Field> fields_;
};

/// Heat-propagates `generator` (the field at scale epsilon) to K uniform nodes spanning
/// [epsilon, eta0]. Requires 0 < epsilon < eta0 <= 1 and K >= 5.
ScaleStack build_scale_stack(const Field& generator, double epsilon, double eta0, int K);

/// Stack of K nodes starting at `first_eta` with spacing delta_eta, each node the exact
/// propagation of `generator` (which must sit at scale <= first_eta).
ScaleStack propagated_stack(const Field& generator, double first_eta, double delta_eta, int K);

/// Centered second-order difference in eta (order 1 or 2) at an interior node.
Field eta_derivative(const ScaleStack& stack, int node, int order);

/// psi = d_eta u - Laplacian u at an interior node.
Field filter_defect(const ScaleStack& stack, int node);

/// psi at every node; the two end nodes use one-sided second-order eta stencils.
ScaleStack filter_defect_stack(const ScaleStack& stack);

/// Integral over [epsilon, eta_target] of heat_propagate(psi(eta'), eta_target - eta'),
/// composite trapezoid over the stack nodes 0..target_node.
Field duhamel_integral(const ScaleStack& psi_stack, int target_node);

}  // namespace scalelab
