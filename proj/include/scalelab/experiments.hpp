#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scalelab/config.hpp"
#include "scalelab/jet.hpp"

namespace scalelab {

/// One named pass/fail measurement.
struct CheckLine {
  std::string name;
  double value;
  double tol;
  bool pass;
};

/// Heat-semigroup properties on a 64^2 and a 128-point grid: composition, mean
/// preservation, derivative commutation, divergence preservation, closed-form decay.
/// Values are relative errors.
std::vector<CheckLine> filter_semigroup_checks(std::uint64_t seed);

/// Built-in core name ("burgers", "fluid") or core text, as a symbolic core in n dims.
JetExpr resolve_core_expr(const std::string& text, int n);

/// "s = ..." for single-component cores, "s1 = ...", "s2 = ..." otherwise.
std::vector<std::string> source_lines(const JetExpr& core);

/// One row of an eta-refinement sweep. order is NaN on the coarsest row.
struct SweepRow {
  double delta_eta;
  double max_e;
  double order;
  /// Linearization columns (non-filtered generators only): max|contraction - e| and its
  /// ratio to max|e|.
  double max_gap;
  double relative_gap;
};

/// Residual-transport defect at check.eta for delta_eta in {4h, 2h, h}, for the
/// configured generator. Filtered generators measure e -> 0; the "solenoidal"
/// generator is non-filtered and compares e with the linearization contracted with psi.
std::vector<SweepRow> residual_sweep(const AppConfig& config);

struct BoundRow {
  std::string stack;
  int node;
  double eta;
  double lhs;
  double rhs;
  bool holds;
};

/// Closure-bound rows at every interior node of closed-form residual stacks with r(0) = 0.
std::vector<BoundRow> manufactured_bound_rows(int K);

/// Closure-bound rows for the exact Burgers-core residual of the filtered reference
/// solution at time t, on [epsilon, eta0] with K nodes.
std::vector<BoundRow> burgers_bound_rows(const BurgersReferenceConfig& reference, double t,
                                         double epsilon, double eta0, int K);

/// Closed-form and back-substitution checks of the Helmholtz closure solver.
std::vector<CheckLine> closure_solver_checks(std::uint64_t seed);

struct DuhamelRow {
  std::string stack;
  int nodes;
  double delta_eta;
  /// max|duhamel - (u - u_bar)| at the last node.
  double max_gap;
  double order;
  /// max over nodes of max|u - u_bar| / (eta * sup|psi|).
  double bound_ratio;
};

/// Duhamel reconstruction and deviation bound on non-filtered stacks over
/// [check.epsilon, check.eta0], node counts {(nodes-1)/4+1, (nodes-1)/2+1, nodes}.
std::vector<DuhamelRow> duhamel_sweep(const CheckConfig& check, std::uint64_t seed);

/// Commands: filter-check, derive-source, residual-check, closure-check, duhamel-check,
/// evolve, burgers-reference.
const std::vector<std::string>& command_names();

/// Runs one command, writing artifacts into out_dir and a summary to `out`. Returns 0 on
/// success and 1 when a check fails; library errors propagate as exceptions.
int run_command(const std::string& command, const AppConfig& config, const std::string& out_dir,
                std::ostream& out);

/// Exit code of an exception: 2 validation, 3 numerical, 4 I/O.
int exit_code_for(const std::exception& e);

}  // namespace scalelab
