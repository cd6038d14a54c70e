#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scalelab/grid.hpp"

namespace scalelab {

enum class Closure { none, helmholtz };
enum class PsiForcing { zero, supplied };

std::string to_string(Closure c);
std::string to_string(PsiForcing f);

struct InitialCondition {
  /// "taylor-green", "random" (solenoidal, |k_i| <= kmax, drawn from the run seed) or
  /// "rigid" (constant velocity).
  std::string name = "taylor-green";
  double amplitude = 1.0;
  int kmax = 3;
  std::vector<double> velocity;
};

/// Everything a slice run needs. Produced by parse_config, which fills defaults and
/// validates; dt is resolved against the advective bound once the initial field exists.
struct RunConfig {
  int grid = 32;
  int dim = 2;
  double eta = 0.05;
  std::optional<double> beta;
  std::optional<double> delta;
  std::optional<double> dt;
  double t_end = 0.1;
  std::string core = "fluid";
  Closure closure = Closure::helmholtz;
  InitialCondition initial;
  bool couple_psi = false;
  /// "zero" or "mode" (a single divergence-free mode of size psi_amplitude).
  std::string psi_initial = "zero";
  double psi_amplitude = 1e-3;
  PsiForcing psi_forcing = PsiForcing::zero;
  /// Checkpoint holding e_(v) when psi_forcing is supplied.
  std::string psi_forcing_file;
  int output_every = 10;
  std::uint64_t seed = 0;
  /// Hash of the effective configuration; stamped into every emitted file.
  std::string config_hash;
};

struct EvolutionState {
  double t = 0.0;
  Field v;
  Field psi;
  double eta = 0.05;
  long step_count = 0;
};

struct DiagnosticsRecord {
  long step;
  double t;
  double energy;
  double max_div_v;
  double r_l2;
  double r_max;
  double psi_l2;
  double psi_max;
  /// Running sup over steps of max|psi_(v)|.
  double psi_sup;
  /// eta * psi_sup: the deviation bound |u - u_bar| <= eta sup|psi|.
  double bound;
};

/// Column order of the diagnostics CSV.
inline constexpr const char* kDiagnosticsHeader =
    "step,t,energy,max_div_v,r_l2,r_max,psi_l2,psi_max,psi_sup,bound";

/// Projected right-hand side of the slice momentum equation:
/// P(-v.grad v + r), r = closure(fluid_source(v)) or 0. The projection discards the
/// pressure gradient.
Field macroscopic_rhs(const Field& v, Closure closure, double eta);

/// Closure residual r_(v) for the current velocity (zero field when closure is none).
Field closure_residual(const Field& v, Closure closure, double eta);

/// P(-v.grad psi - psi.grad v + e).
Field psi_rhs(const Field& psi, const Field& v, const Field& e);

struct StepOptions {
  Closure closure = Closure::helmholtz;
  bool couple_psi = false;
  /// e_(v) forcing; zero when absent.
  const Field* e_forcing = nullptr;
};

/// Classical RK4 on (v, psi) with the closure re-solved at every stage and a final
/// re-projection. Throws NumericalError on non-finite values.
EvolutionState step_rk4(const EvolutionState& state, double dt, const StepOptions& options);

/// Largest dt allowed by dt <= 0.5 * spacing / max|v0|.
double advective_dt_limit(const Field& v0);

/// Initial velocity and psi for a config.
Field initial_velocity(const RunConfig& config);
Field initial_psi(const RunConfig& config);

struct SimulationResult {
  std::vector<DiagnosticsRecord> records;
  EvolutionState final_state;
  double dt;
};

/// Runs the slice to t_end, recording diagnostics every output_every steps (and at the
/// first and last step). Throws NumericalError with a state summary if the run blows up.
SimulationResult run_simulation(const RunConfig& config);

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records,
                           const std::string& config_hash);

}  // namespace scalelab
