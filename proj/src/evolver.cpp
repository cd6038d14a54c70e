#include "scalelab/evolver.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "scalelab/checkpoint.hpp"
#include "scalelab/error.hpp"
#include "scalelab/families.hpp"
#include "scalelab/fluid.hpp"
#include "scalelab/kernels.hpp"
#include "scalelab/residual.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

std::string to_string(Closure c) { return c == Closure::none ? "none" : "helmholtz"; }
std::string to_string(PsiForcing f) { return f == PsiForcing::zero ? "zero" : "supplied"; }

namespace {

Field momentum_part(const Field& s, int n) {
  std::vector<Field> parts;
  for (int a = 0; a < n; ++a) parts.push_back(s.extract(a));
  return concat(parts).with_coords(s.t(), s.eta());
}

Field project(const Field& w) { return leray_project(w).solenoidal; }

double energy(const Field& v) {
  const double ms = kernels::sum_squares(v.values()) / static_cast<double>(v.grid().points());
  return 0.5 * ms * v.grid().measure();
}

void require_finite(const EvolutionState& s, const char* what) {
  if (!s.v.all_finite() || !s.psi.all_finite()) {
    std::ostringstream os;
    os << "non-finite " << what << " at step " << s.step_count << ", t = " << s.t;
    throw NumericalError(os.str());
  }
}

}  // namespace

Field closure_residual(const Field& v, Closure closure, double eta) {
  const int n = v.grid().dim();
  if (closure == Closure::none) return Field(v.grid(), n, v.t(), v.eta());
  return solve_residual_closure(momentum_part(fluid_source(v), n), eta);
}

Field macroscopic_rhs(const Field& v, Closure closure, double eta) {
  Field w = advect(v, v);
  w *= -1.0;
  if (closure == Closure::helmholtz) w += closure_residual(v, closure, eta);
  return project(w);
}

Field psi_rhs(const Field& psi, const Field& v, const Field& e) {
  Field w = advect(v, psi);
  w += advect(psi, v);
  w *= -1.0;
  w += e;
  return project(w);
}

EvolutionState step_rk4(const EvolutionState& state, double dt, const StepOptions& options) {
  const Grid& grid = state.v.grid();
  const Field zero(grid, grid.dim(), state.t, state.eta);
  const Field& e = options.e_forcing != nullptr ? *options.e_forcing : zero;

  auto rhs = [&](const Field& v, const Field& psi, Field& dv, Field& dpsi) {
    dv = macroscopic_rhs(v, options.closure, state.eta);
    if (options.couple_psi) dpsi = psi_rhs(psi, v, e);
  };
  auto stage = [](const Field& base, double h, const Field& slope) {
    Field out = base;
    out.add_scaled(h, slope);
    return out;
  };

  Field k1v = zero, k2v = zero, k3v = zero, k4v = zero;
  Field k1p = zero, k2p = zero, k3p = zero, k4p = zero;
  rhs(state.v, state.psi, k1v, k1p);
  rhs(stage(state.v, 0.5 * dt, k1v), stage(state.psi, 0.5 * dt, k1p), k2v, k2p);
  rhs(stage(state.v, 0.5 * dt, k2v), stage(state.psi, 0.5 * dt, k2p), k3v, k3p);
  rhs(stage(state.v, dt, k3v), stage(state.psi, dt, k3p), k4v, k4p);

  auto combine = [dt](const Field& base, const Field& a, const Field& b, const Field& c,
                      const Field& d) {
    Field out = base;
    out.add_scaled(dt / 6.0, a).add_scaled(dt / 3.0, b).add_scaled(dt / 3.0, c).add_scaled(dt / 6.0, d);
    return out;
  };

  EvolutionState next{state.t + dt, zero, zero, state.eta, state.step_count + 1};
  next.v = project(combine(state.v, k1v, k2v, k3v, k4v)).with_coords(next.t, state.eta);
  next.psi = options.couple_psi
                 ? project(combine(state.psi, k1p, k2p, k3p, k4p)).with_coords(next.t, state.eta)
                 : state.psi.with_coords(next.t, state.eta);
  require_finite(next, "state");
  return next;
}

double advective_dt_limit(const Field& v0) {
  const Grid& grid = v0.grid();
  double vmax = 0.0;
  for (std::size_t p = 0; p < grid.points(); ++p) {
    double s2 = 0.0;
    for (int c = 0; c < v0.components(); ++c) s2 += v0.component(c)[p] * v0.component(c)[p];
    vmax = std::max(vmax, std::sqrt(s2));
  }
  const double c = 0.5;
  return vmax > 0.0 ? c * grid.spacing() / vmax : c * grid.spacing();
}

Field initial_velocity(const RunConfig& config) {
  const Grid grid = make_grid(config.dim, config.grid);
  const auto& ic = config.initial;
  if (ic.name == "taylor-green") {
    if (config.dim != 2) throw ValidationError("initial.name: taylor-green needs dim = 2");
    const Field u = taylor_green_family(TimeProfile{}).u(grid, 0.0, 0.0);
    Field v = concat(std::vector<Field>{u.extract(0), u.extract(1)});
    v *= ic.amplitude;
    return v.with_coords(0.0, config.eta);
  }
  if (ic.name == "random") {
    if (config.dim != 2) throw ValidationError("initial.name: random needs dim = 2");
    if (3 * ic.kmax >= config.grid) throw ValidationError("initial.kmax outside the dealiased band");
    const Field u = solenoidal_family(config.seed, ic.kmax, ic.amplitude, true).u(grid, 0.0, 0.0);
    return project(concat(std::vector<Field>{u.extract(0), u.extract(1)})).with_coords(0.0, config.eta);
  }
  if (ic.name == "rigid") {
    if (static_cast<int>(ic.velocity.size()) != config.dim) {
      throw ValidationError("initial.velocity must have dim entries");
    }
    Field v(grid, config.dim, 0.0, config.eta);
    for (int c = 0; c < config.dim; ++c) {
      for (double& x : v.component(c)) x = ic.velocity[c];
    }
    return v;
  }
  throw ValidationError("initial.name: unknown initial condition '" + ic.name + "'");
}

Field initial_psi(const RunConfig& config) {
  const Grid grid = make_grid(config.dim, config.grid);
  Field psi(grid, config.dim, 0.0, config.eta);
  if (config.psi_initial == "zero") return psi;
  if (config.psi_initial == "mode") {
    if (config.dim != 2) throw ValidationError("psi.initial: mode needs dim = 2");
    // Velocity of the streamfunction a cos(2x + y): (-a sin(2x+y), 2a sin(2x+y)).
    const double a = config.psi_amplitude;
    auto px = psi.component(0);
    auto py = psi.component(1);
    for (std::size_t p = 0; p < grid.points(); ++p) {
      const double s = std::sin(2.0 * grid.coordinate(p, 0) + grid.coordinate(p, 1));
      px[p] = -a * s;
      py[p] = 2.0 * a * s;
    }
    return psi;
  }
  throw ValidationError("psi.initial: unknown value '" + config.psi_initial + "'");
}

SimulationResult run_simulation(const RunConfig& config) {
  if (config.core != "fluid") throw ValidationError("core: evolve supports the fluid core only");
  if (!(config.eta > 0.0 && config.eta <= 1.0)) throw ValidationError("eta must lie in (0, 1]");
  if (!(config.t_end > 0.0)) throw ValidationError("t_end must be positive");
  if (config.output_every < 1) throw ValidationError("output_every must be at least 1");

  const Field v0 = initial_velocity(config);
  const double limit = advective_dt_limit(v0);
  double dt = config.dt.value_or(limit);
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt = " << dt << " violates the advective bound " << limit;
    throw ValidationError(os.str());
  }
  const long steps = static_cast<long>(std::ceil(config.t_end / dt - 1e-9));
  dt = config.t_end / static_cast<double>(steps);

  std::optional<Field> forcing;
  if (config.couple_psi && config.psi_forcing == PsiForcing::supplied) {
    Checkpoint chk = read_checkpoint(config.psi_forcing_file);
    if (!(chk.field.grid() == v0.grid()) || chk.field.components() != config.dim) {
      throw ValidationError("psi.forcing_file does not match the run grid");
    }
    forcing = project(chk.field);
  }
  StepOptions options{config.closure, config.couple_psi, forcing ? &*forcing : nullptr};

  EvolutionState state{0.0, v0, initial_psi(config), config.eta, 0};
  if (!options.couple_psi) state.psi *= 0.0;

  SimulationResult result{{}, state, dt};
  double psi_sup = kernels::max_abs(state.psi.values());
  auto record = [&](const EvolutionState& s) {
    const Norms r = field_norms(closure_residual(s.v, config.closure, config.eta));
    const Norms psi = field_norms(s.psi);
    result.records.push_back({s.step_count, s.t, energy(s.v), max_divergence(s.v), r.l2, r.max,
                              psi.l2, psi.max, psi_sup, config.eta * psi_sup});
  };
  record(state);
  for (long k = 1; k <= steps; ++k) {
    try {
      state = step_rk4(state, dt, options);
    } catch (const NumericalError& err) {
      std::ostringstream os;
      os << err.what() << " (last finite energy " << result.records.back().energy << " at t = "
         << result.records.back().t << ")";
      throw NumericalError(os.str());
    }
    // Last step lands exactly on t_end.
    if (k == steps) state.t = config.t_end;
    psi_sup = std::max(psi_sup, kernels::max_abs(state.psi.values()));
    if (k % config.output_every == 0 || k == steps) record(state);
  }
  result.final_state = state;
  return result;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records,
                           const std::string& config_hash) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "# config_hash=" << config_hash << '\n' << kDiagnosticsHeader << '\n';
  out << std::setprecision(17);
  for (const auto& r : records) {
    out << r.step << ',' << r.t << ',' << r.energy << ',' << r.max_div_v << ',' << r.r_l2 << ','
        << r.r_max << ',' << r.psi_l2 << ',' << r.psi_max << ',' << r.psi_sup << ',' << r.bound
        << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace scalelab
