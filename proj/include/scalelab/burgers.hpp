#pragma once

#include <utility>
#include <vector>

#include "scalelab/heat_filter.hpp"

namespace scalelab {

struct BurgersReferenceConfig {
  /// Grid the filtered fields are studied on; the solve runs on coarse_size * refine.
  int coarse_size = 128;
  int refine = 4;
  /// Times to record; the last one bounds the solve and must stay below 1 (the gradient
  /// of sin x blows up at t = 1).
  std::vector<double> snapshot_times{0.5};
  double dt = 1e-3;
};

/// Fine-grid inviscid Burgers state: u and u_t = -u u_x at one time.
struct BurgersSnapshot {
  double t;
  Field u;
  Field u_t;
};

/// Pseudo-spectral RK4 solve of u_t + u u_x = 0, u(0) = sin x, with 2/3 dealiasing.
std::vector<BurgersSnapshot> reference_burgers(const BurgersReferenceConfig& config);

/// Implicit characteristic solution u = sin(x - u t), Newton per grid point. Independent
/// of the spectral solver.
Field burgers_characteristics(const Grid& grid, double t, double tol = 1e-14);

/// Spectral restriction onto a coarser grid (modes with |k| < coarse.size()/2 kept).
Field restrict_to(const Field& fine, const Grid& coarse);

/// (u, u_t) stacks of the snapshot's heat-filtered fields on the coarse grid.
std::pair<ScaleStack, ScaleStack> burgers_filtered_stacks(const BurgersSnapshot& snapshot,
                                                          const Grid& coarse, double first_eta,
                                                          double delta_eta, int K);

}  // namespace scalelab
