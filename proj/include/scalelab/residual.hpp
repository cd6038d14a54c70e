#pragma once

#include <optional>
#include <vector>

#include "scalelab/fluid.hpp"
#include "scalelab/heat_filter.hpp"
#include "scalelab/jet.hpp"

namespace scalelab {

/// Residual r = F(u), source s = (W - L)F evaluated on u, and (once a scale stack is
/// available) the transport defect e = (d_eta - Laplacian) r - s.
struct ResidualSet {
  Field r;
  Field s;
  std::optional<Field> e;
};

/// r = F(u, u_i) evaluated symbolically on the jets, dealiased.
Field exact_residual(const CoreFunction& core, const JetValues& jets);

/// Jets of u (and u_t) covering every variable of the core and of its derived source.
JetValues core_jets(const CoreFunction& core, const Field& u, const Field& u_t);

/// r and s at every node of a (u, u_t) stack pair.
struct ResidualStacks {
  ScaleStack r;
  std::vector<Field> s;
};
ResidualStacks residual_stacks(const CoreFunction& core, const ScaleStack& u,
                               const ScaleStack& u_t);

/// e = d_eta r - Laplacian r - s at an interior node (centered differences in eta).
Field residual_defect(const ScaleStack& r_stack, const Field& s_at_node, int node);

/// Left side of the linearized identity: sum_beta (C^{alpha i}_beta d_i psi^beta +
/// C^alpha_beta psi^beta), with the coefficients evaluated on u's jets. psi_t supplies
/// d_t psi; spatial derivatives of psi are spectral.
Field frechet_contraction(const FrechetTable& table, const JetValues& u_jets, const Field& psi,
                          const Field& psi_t);

/// Mode-wise solution of Laplacian r - r / eta + s = 0: r_k = s_k / (|k|^2 + 1/eta).
Field solve_residual_closure(const Field& s, double eta);

struct BoundCheck {
  double lhs;
  double rhs;
  bool holds(double rel_tol) const { return lhs <= rhs * (1.0 + rel_tol); }
};

/// lhs = max|d_eta r - r/eta| at the node; rhs = (eta/2) * max over interior nodes of
/// |d^2 r / d eta^2|. Both eta derivatives are centered differences.
BoundCheck closure_error_bound(const ScaleStack& r_stack, int node);

}  // namespace scalelab
