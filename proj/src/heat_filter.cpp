#include "scalelab/heat_filter.hpp"

#include <cmath>
#include <string>

#include "scalelab/error.hpp"
#include "scalelab/kernels.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

HeatPropagator::HeatPropagator(const Grid& grid, double delta_eta)
    : grid_(grid), delta_eta_(delta_eta), multipliers_(grid.points()) {
  if (!(delta_eta >= 0.0)) {
    throw ValidationError("heat propagation needs delta_eta >= 0 (backward flow is ill-posed)");
  }
  const auto n = static_cast<std::ptrdiff_t>(grid.points());
#pragma omp parallel for schedule(static) if (n >= 8192)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    multipliers_[p] = std::exp(-delta_eta * grid.wavenumber_sq(static_cast<std::size_t>(p)));
  }
}

Field HeatPropagator::apply(const Field& f) const {
  if (!(f.grid() == grid_)) throw ValidationError("heat propagator built for another grid");
  if (delta_eta_ == 0.0) return f;
  SpectralField s = to_spectral(f);
  for (int c = 0; c < s.components; ++c) kernels::scale_modes(s.component(c), multipliers_);
  return from_spectral(s, f.t(), f.eta() + delta_eta_);
}

Field heat_propagate(const Field& f, double delta_eta) {
  return HeatPropagator(f.grid(), delta_eta).apply(f);
}

ScaleStack::ScaleStack(double epsilon, double delta_eta, std::vector<Field> fields, double eta0)
    : epsilon_(epsilon), delta_eta_(delta_eta), eta0_(eta0), fields_(std::move(fields)) {
  if (fields_.size() < 5) {
    throw ValidationError("scale stack needs at least 5 nodes, got " +
                          std::to_string(fields_.size()));
  }
  if (!(delta_eta > 0.0)) throw ValidationError("scale stack spacing must be positive");
  for (int j = 0; j < size(); ++j) {
    const double expected = eta(j);
    const double tol = 1e-12 * std::max(1.0, std::abs(expected));
    if (std::abs(fields_[j].eta() - expected) > tol) {
      throw ValidationError("scale stack node " + std::to_string(j) +
                            " is not on the uniform eta grid");
    }
    if (!(fields_[j].grid() == fields_[0].grid()) ||
        fields_[j].components() != fields_[0].components()) {
      throw ValidationError("scale stack fields must share grid and component count");
    }
  }
}

ScaleStack build_scale_stack(const Field& generator, double epsilon, double eta0, int K) {
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(epsilon < eta0)) throw ValidationError("epsilon must be below eta0");
  if (eta0 > 1.0) throw ValidationError("eta0 must not exceed 1");
  if (K < 5) throw ValidationError("scale stack needs K >= 5");
  const double d_eta = (eta0 - epsilon) / (K - 1);
  return propagated_stack(generator.with_coords(generator.t(), epsilon), epsilon, d_eta, K);
}

ScaleStack propagated_stack(const Field& generator, double first_eta, double delta_eta, int K) {
  if (K < 5) throw ValidationError("scale stack needs K >= 5");
  std::vector<Field> fields;
  fields.reserve(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    const double eta_j = first_eta + j * delta_eta;
    fields.push_back(heat_propagate(generator, eta_j - generator.eta()).with_coords(generator.t(), eta_j));
  }
  return ScaleStack(first_eta, delta_eta, std::move(fields), first_eta + (K - 1) * delta_eta);
}

Field eta_derivative(const ScaleStack& stack, int node, int order) {
  if (order != 1 && order != 2) throw ValidationError("eta derivative order must be 1 or 2");
  if (node < 1 || node > stack.size() - 2) {
    throw ValidationError("eta derivative needs an interior node, got " + std::to_string(node));
  }
  const double h = stack.delta_eta();
  const Field& lo = stack[node - 1];
  const Field& hi = stack[node + 1];
  Field out = hi;
  if (order == 1) {
    out -= lo;
    out *= 1.0 / (2.0 * h);
  } else {
    out += lo;
    out.add_scaled(-2.0, stack[node]);
    out *= 1.0 / (h * h);
  }
  return out.with_coords(stack[node].t(), stack[node].eta());
}

Field filter_defect(const ScaleStack& stack, int node) {
  Field psi = eta_derivative(stack, node, 1);
  psi -= laplacian(stack[node]);
  return psi;
}

ScaleStack filter_defect_stack(const ScaleStack& stack) {
  const int K = stack.size();
  const double h = stack.delta_eta();
  std::vector<Field> psi;
  psi.reserve(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    Field d(stack[j].grid(), stack[j].components(), stack[j].t(), stack[j].eta());
    if (j == 0) {
      d.add_scaled(-1.5 / h, stack[0]).add_scaled(2.0 / h, stack[1]).add_scaled(-0.5 / h, stack[2]);
    } else if (j == K - 1) {
      d.add_scaled(1.5 / h, stack[K - 1])
          .add_scaled(-2.0 / h, stack[K - 2])
          .add_scaled(0.5 / h, stack[K - 3]);
    } else {
      d = eta_derivative(stack, j, 1);
    }
    d -= laplacian(stack[j]);
    psi.push_back(std::move(d));
  }
  return ScaleStack(stack.epsilon(), h, std::move(psi), stack.eta0());
}

Field duhamel_integral(const ScaleStack& psi_stack, int target_node) {
  if (target_node < 1 || target_node >= psi_stack.size()) {
    throw ValidationError("Duhamel integral needs at least 2 nodes in [epsilon, eta]");
  }
  const double h = psi_stack.delta_eta();
  const double eta = psi_stack.eta(target_node);
  Field acc(psi_stack[0].grid(), psi_stack[0].components(), psi_stack[0].t(), eta);
  for (int j = 0; j <= target_node; ++j) {
    const double w = (j == 0 || j == target_node) ? 0.5 * h : h;
    acc.add_scaled(w, heat_propagate(psi_stack[j], eta - psi_stack.eta(j)));
  }
  return acc.with_coords(psi_stack[0].t(), eta);
}

}  // namespace scalelab
