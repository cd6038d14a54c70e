#pragma once

#include <functional>
#include <string>
#include <utility>

#include "scalelab/grid.hpp"
#include "scalelab/jet.hpp"

namespace scalelab {

/// Symmetric n x n tensor field; each unordered pair (a, b) is stored once.
class TensorField {
 public:
  TensorField(const Grid& grid, double t, double eta);

  int dim() const noexcept { return grid_.dim(); }
  const Grid& grid() const noexcept { return grid_; }
  double t() const noexcept { return storage_.t(); }
  double eta() const noexcept { return storage_.eta(); }
  std::span<const double> operator()(int a, int b) const { return storage_.component(slot(a, b)); }
  std::span<double> operator()(int a, int b) { return storage_.component(slot(a, b)); }
  /// The (a, b) entry as a scalar field.
  Field entry(int a, int b) const { return storage_.extract(slot(a, b)); }

 private:
  int slot(int a, int b) const;

  Grid grid_;
  Field storage_;
};

/// Velocity (n components, divergence-free) and pressure (zero mean) on one grid.
class FluidState {
 public:
  /// Removes the pressure mean and rejects max|div v| > 1e-10.
  FluidState(Field v, Field p);

  const Field& v() const noexcept { return v_; }
  const Field& p() const noexcept { return p_; }
  /// u = (v, p) as one n+1 component field.
  Field as_unknown() const;

 private:
  Field v_;
  Field p_;
};

double max_divergence(const Field& v);

/// A PDE core F with its symbolic form and a direct numeric evaluator
/// numeric(u, u_t) -> F(u, u_i).
struct CoreFunction {
  std::string name;
  int N;
  int n;
  JetExpr symbolic;
  std::function<Field(const Field& u, const Field& u_t)> numeric;
  int jet_order;
};

/// Inviscid Burgers, N = n = 1: u_t + u u_x.
CoreFunction burgers_core();
/// Ideal fluid, N = n + 1: (v_t + v.grad v + grad p, div v).
CoreFunction fluid_core(int n);
/// Looks a core up by name ("burgers", "fluid"); n is ignored for burgers.
CoreFunction core_by_name(const std::string& name, int n);

/// sigma^{ab} = sum_c dv^a/dx^c dv^b/dx^c with dealiased products.
TensorField sigma(const Field& v);

/// n momentum components -2 div sigma followed by a zero pressure component. Prints a
/// warning to stderr when max|div v| > 1e-8, where the divergence form no longer applies.
Field fluid_source(const Field& v);

/// a = v_t + (v.grad) v, dealiased.
Field acceleration(const Field& v, const Field& v_t);

/// Dealiased advection (a.grad) b for n-component a and b.
Field advect(const Field& a, const Field& b);

struct LerayParts {
  Field solenoidal;
  Field potential;
};

/// w = solenoidal + grad(potential), computed mode-wise; potential has zero mean.
LerayParts leray_project(const Field& w);

/// (v_t + v.grad v + grad p, div v).
Field fluid_core_eval(const FluidState& state, const Field& v_t);

}  // namespace scalelab
