#include "scalelab/residual.hpp"

#include <set>
#include <string>

#include "scalelab/error.hpp"
#include "scalelab/kernels.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

Field exact_residual(const CoreFunction& core, const JetValues& jets) {
  return jet_evaluate(core.symbolic, jets);
}

JetValues core_jets(const CoreFunction& core, const Field& u, const Field& u_t) {
  std::set<JetIndex> vars;
  for (const auto& v : variables(core.symbolic)) vars.insert(v);
  for (const auto& v : variables(derive_source(core.symbolic))) vars.insert(v);
  // Coefficients of the linearization only reference variables of F itself.
  return make_jets({vars.begin(), vars.end()}, u, &u_t);
}

ResidualStacks residual_stacks(const CoreFunction& core, const ScaleStack& u,
                               const ScaleStack& u_t) {
  if (u.size() != u_t.size() || u.delta_eta() != u_t.delta_eta()) {
    throw ValidationError("u and u_t stacks must share their eta nodes");
  }
  const JetExpr source = derive_source(core.symbolic);
  std::vector<Field> r;
  std::vector<Field> s;
  for (int j = 0; j < u.size(); ++j) {
    const JetValues jets = core_jets(core, u[j], u_t[j]);
    r.push_back(exact_residual(core, jets));
    s.push_back(jet_evaluate(source, jets));
  }
  return {ScaleStack(u.epsilon(), u.delta_eta(), std::move(r), u.eta0()), std::move(s)};
}

Field residual_defect(const ScaleStack& r_stack, const Field& s_at_node, int node) {
  Field e = eta_derivative(r_stack, node, 1);
  e -= laplacian(r_stack[node]);
  e -= s_at_node;
  return e;
}

Field frechet_contraction(const FrechetTable& table, const JetValues& u_jets, const Field& psi,
                          const Field& psi_t) {
  if (psi.components() != table.N || psi_t.components() != table.N) {
    throw ValidationError("psi must have one component per unknown");
  }
  const Grid& grid = psi.grid();
  const int rows = static_cast<int>(table.zeroth.size());
  std::vector<Field> psi_b, psi_tb;
  for (int b = 0; b < table.N; ++b) {
    psi_b.push_back(dealias(psi.extract(b)));
    psi_tb.push_back(dealias(psi_t.extract(b)));
  }
  std::vector<Field> out;
  for (int alpha = 0; alpha < rows; ++alpha) {
    Field acc(grid, 1, psi.t(), psi.eta());
    for (int beta = 0; beta < table.N; ++beta) {
      auto accumulate = [&](const Polynomial& coeff, const Field& factor) {
        if (coeff.is_zero()) return;
        acc += banded_product(jet_evaluate(coeff, u_jets), factor);
      };
      accumulate(table.c0(alpha, beta), psi_b[beta]);
      for (int axis = 0; axis < grid.dim(); ++axis) {
        accumulate(table.c1(alpha, beta, spatial(axis)),
                   dealias(spectral_derivative(psi_b[beta], axis, 1)));
      }
      accumulate(table.c1(alpha, beta, Coord::t), psi_tb[beta]);
      if (!table.c1(alpha, beta, Coord::eta).is_zero()) {
        throw ValidationError("frechet_contraction: cores depending on u_eta are not supported");
      }
    }
    out.push_back(std::move(acc));
  }
  return concat(out).with_coords(psi.t(), psi.eta());
}

Field solve_residual_closure(const Field& s, double eta) {
  if (!(eta > 0.0)) throw ValidationError("closure scale eta must be positive");
  const Grid& grid = s.grid();
  std::vector<double> m(grid.points());
  for (std::size_t p = 0; p < grid.points(); ++p) m[p] = 1.0 / (grid.wavenumber_sq(p) + 1.0 / eta);
  SpectralField spec = to_spectral(s);
  for (int c = 0; c < spec.components; ++c) kernels::scale_modes(spec.component(c), m);
  return from_spectral(spec, s.t(), s.eta());
}

BoundCheck closure_error_bound(const ScaleStack& r_stack, int node) {
  const double eta = r_stack.eta(node);
  Field lhs_field = eta_derivative(r_stack, node, 1);
  lhs_field.add_scaled(-1.0 / eta, r_stack[node]);
  double sup_second = 0.0;
  for (int j = 1; j < r_stack.size() - 1; ++j) {
    sup_second = std::max(sup_second, kernels::max_abs(eta_derivative(r_stack, j, 2).values()));
  }
  return {kernels::max_abs(lhs_field.values()), 0.5 * eta * sup_second};
}

}  // namespace scalelab
