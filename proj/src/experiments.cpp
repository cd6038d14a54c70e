#include "scalelab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "scalelab/burgers.hpp"
#include "scalelab/checkpoint.hpp"
#include "scalelab/error.hpp"
#include "scalelab/families.hpp"
#include "scalelab/fluid.hpp"
#include "scalelab/heat_filter.hpp"
#include "scalelab/jet_parser.hpp"
#include "scalelab/kernels.hpp"
#include "scalelab/residual.hpp"
#include "scalelab/spectral.hpp"

namespace scalelab {

namespace {

using nlohmann::json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double max_abs(const Field& f) { return kernels::max_abs(f.values()); }

double max_diff(const Field& a, const Field& b) { return max_abs(a - b); }

double rel_diff(const Field& a, const Field& b) {
  const double scale = std::max(max_abs(b), std::numeric_limits<double>::min());
  return max_diff(a, b) / scale;
}

CheckLine check_le(std::string name, double value, double tol) {
  return {std::move(name), value, tol, value <= tol};
}

double mean_of(const Field& f) { return to_spectral(f).coeffs[0].real(); }

double measured_order(double coarse, double fine, double ratio = 2.0) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return kNaN;
  return std::log(coarse / fine) / std::log(ratio);
}

}  // namespace

std::vector<CheckLine> filter_semigroup_checks(std::uint64_t seed) {
  std::vector<CheckLine> out;
  const double tol = 1e-12;
  const double a = 0.013, b = 0.029;

  const Grid g2 = make_grid(2, 64);
  const ModeFamily fam = solenoidal_family(seed, 20, 1.0, true);
  const Field all = fam.u(g2, 0.0, 0.0);
  const Field scalar = all.extract(2);
  const Field vel = concat(std::vector<Field>{all.extract(0), all.extract(1)});
  const Field rough = sample(g2, [](double x, double y) {
    return std::exp(std::sin(x) + 0.5 * std::cos(2.0 * y)) + 0.1 * std::cos(32.0 * x);
  });

  const Grid g1 = make_grid(1, 128);
  const Field line = scalar_family(seed + 1, 64, 1.0, true).u(g1, 0.0, 0.0);

  for (const auto& [label, f] : {std::pair<std::string, Field>{"64x64", scalar},
                                 std::pair<std::string, Field>{"64x64-rough", rough},
                                 std::pair<std::string, Field>{"128", line}}) {
    out.push_back(check_le("composition " + label,
                           rel_diff(heat_propagate(heat_propagate(f, a), b), heat_propagate(f, a + b)),
                           tol));
    out.push_back(check_le("mean " + label,
                           std::abs(mean_of(heat_propagate(f, a + b)) - mean_of(f)) / max_abs(f), tol));
    for (int axis = 0; axis < f.grid().dim(); ++axis) {
      for (int order = 1; order <= 2; ++order) {
        out.push_back(check_le(
            "commutation d" + std::to_string(order) + "/dx" + std::to_string(axis + 1) + " " + label,
            rel_diff(heat_propagate(spectral_derivative(f, axis, order), a),
                     spectral_derivative(heat_propagate(f, a), axis, order)),
            tol));
      }
    }
  }

  const Field filtered_vel = heat_propagate(vel, a);
  out.push_back(check_le("divergence-free preserved 64x64",
                         max_abs(divergence(filtered_vel)) / max_abs(gradient(vel.extract(0))), tol));
  const Field w = concat(std::vector<Field>{scalar, rough});
  out.push_back(check_le("divergence commutation 64x64",
                         rel_diff(divergence(heat_propagate(w, a)), heat_propagate(divergence(w), a)),
                         tol));

  const double eta = 0.1;
  const Field mode = sample(g2, [](double x, double y) { return std::cos(3.0 * x + 2.0 * y); });
  out.push_back(check_le("closed-form decay k=(3,2) 64x64",
                         rel_diff(heat_propagate(mode, eta), std::exp(-13.0 * eta) * mode), tol));
  const Field nyq = sample(g1, [](double x, double) { return std::cos(64.0 * x); });
  out.push_back(check_le("closed-form decay nyquist 128",
                         rel_diff(heat_propagate(nyq, 1e-3), std::exp(-4.096) * nyq), tol));
  return out;
}

JetExpr resolve_core_expr(const std::string& text, int n) {
  if (text == "burgers") return burgers_core().symbolic;
  if (text == "fluid") return fluid_core(n).symbolic;
  return parse_core(text, n);
}

std::vector<std::string> source_lines(const JetExpr& core) {
  const JetExpr s = derive_source(core);
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < s.components.size(); ++a) {
    const std::string lhs = s.components.size() == 1 ? "s" : "s" + std::to_string(a + 1);
    lines.push_back(lhs + " = " + to_string(s.components[a]));
  }
  return lines;
}

namespace {

struct StackPair {
  ScaleStack u;
  ScaleStack u_t;
};

StackPair generator_stacks(const AppConfig& config, const ModeFamily* family, const Grid& grid,
                           const BurgersSnapshot* snapshot, double first_eta, double delta_eta,
                           int K) {
  if (family) {
    return {family->stack(grid, config.check.t, first_eta, delta_eta, K),
            family->stack_t(grid, config.check.t, first_eta, delta_eta, K)};
  }
  auto [u, ut] = burgers_filtered_stacks(*snapshot, grid, first_eta, delta_eta, K);
  return {std::move(u), std::move(ut)};
}

}  // namespace

std::vector<SweepRow> residual_sweep(const AppConfig& config) {
  const CheckConfig& check = config.check;
  const bool burgers = check.generator == "burgers";
  const CoreFunction core = burgers ? burgers_core() : fluid_core(2);
  const Grid grid = burgers ? make_grid(1, config.burgers.coarse_size) : make_grid(2, check.grid);

  std::optional<ModeFamily> family;
  std::optional<BurgersSnapshot> snapshot;
  const TimeProfile g{1.0, 0.3, 2.0, 1};
  if (check.generator == "taylor-green") family = taylor_green_family(g);
  else if (check.generator == "perturbed") family = taylor_green_family(g, 0.2);
  else if (check.generator == "solenoidal") family = solenoidal_family(config.run.seed, 3, 0.5, false);
  else {
    BurgersReferenceConfig ref = config.burgers;
    ref.snapshot_times = {check.t};
    snapshot = reference_burgers(ref).back();
  }
  const bool compare_linearization = family && !family->filtered();
  const FrechetTable table = jet_frechet(core.symbolic);

  std::vector<SweepRow> rows;
  for (int level = 0; level < 3; ++level) {
    const double d = check.h * static_cast<double>(4 >> level);
    const StackPair st = generator_stacks(config, family ? &*family : nullptr, grid,
                                          snapshot ? &*snapshot : nullptr, check.eta - 2.0 * d, d, 5);
    const ResidualStacks rs = residual_stacks(core, st.u, st.u_t);
    const Field e = residual_defect(rs.r, rs.s[2], 2);
    SweepRow row{d, max_abs(e), kNaN, kNaN, kNaN};
    if (compare_linearization) {
      const JetValues jets = core_jets(core, st.u[2], st.u_t[2]);
      const Field lin = frechet_contraction(table, jets, family->psi(grid, check.t, check.eta),
                                            family->psi_t(grid, check.t, check.eta));
      row.max_gap = max_diff(lin, e);
      row.relative_gap = row.max_gap / row.max_e;
    }
    if (!rows.empty()) {
      row.order = compare_linearization ? measured_order(rows.back().max_gap, row.max_gap)
                                        : measured_order(rows.back().max_e, row.max_e);
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

ScaleStack closed_form_stack(const Grid& grid, double first_eta, double delta_eta, int K,
                             const std::function<double(double, double, double)>& fn) {
  std::vector<Field> fields;
  for (int j = 0; j < K; ++j) {
    const double eta = first_eta + j * delta_eta;
    fields.push_back(sample(grid, [&](double x, double y) { return fn(x, y, eta); }, 0.0, eta));
  }
  return ScaleStack(first_eta, delta_eta, std::move(fields), first_eta + (K - 1) * delta_eta);
}

void append_bound_rows(std::vector<BoundRow>& rows, const std::string& name, const ScaleStack& r) {
  for (int j = 1; j < r.size() - 1; ++j) {
    const BoundCheck b = closure_error_bound(r, j);
    rows.push_back({name, j, r.eta(j), b.lhs, b.rhs, b.holds(0.10)});
  }
}

}  // namespace

std::vector<BoundRow> manufactured_bound_rows(int K) {
  std::vector<BoundRow> rows;
  const double first = 0.01, last = 0.5;
  const double d = (last - first) / (K - 1);
  const Grid g1 = make_grid(1, 64);
  const Grid g2 = make_grid(2, 32);
  append_bound_rows(rows, "eta*exp(-2eta)*sin(x)",
                    closed_form_stack(g1, first, d, K, [](double x, double, double eta) {
                      return eta * std::exp(-2.0 * eta) * std::sin(x);
                    }));
  append_bound_rows(rows, "(1-exp(-3eta))*cos(x+2y)+eta^2*sin(2x)",
                    closed_form_stack(g2, first, d, K, [](double x, double y, double eta) {
                      return (1.0 - std::exp(-3.0 * eta)) * std::cos(x + 2.0 * y) +
                             eta * eta * std::sin(2.0 * x);
                    }));
  append_bound_rows(rows, "sin(eta)*exp(-5eta)*cos(2x-y)",
                    closed_form_stack(g2, first, d, K, [](double x, double y, double eta) {
                      return std::sin(eta) * std::exp(-5.0 * eta) * std::cos(2.0 * x - y);
                    }));
  return rows;
}

std::vector<BoundRow> burgers_bound_rows(const BurgersReferenceConfig& reference, double t,
                                         double epsilon, double eta0, int K) {
  BurgersReferenceConfig ref = reference;
  ref.snapshot_times = {t};
  const BurgersSnapshot snap = reference_burgers(ref).back();
  const Grid coarse = make_grid(1, ref.coarse_size);
  const double d = (eta0 - epsilon) / (K - 1);
  auto [u, ut] = burgers_filtered_stacks(snap, coarse, epsilon, d, K);
  const ResidualStacks rs = residual_stacks(burgers_core(), u, ut);
  std::vector<BoundRow> rows;
  std::ostringstream name;
  name << "burgers t=" << t;
  append_bound_rows(rows, name.str(), rs.r);
  return rows;
}

std::vector<CheckLine> closure_solver_checks(std::uint64_t seed) {
  std::vector<CheckLine> out;
  const Grid g1 = make_grid(1, 64);
  const Grid g2 = make_grid(2, 64);

  out.push_back(check_le("zero source", max_abs(solve_residual_closure(Field(g2, 2), 0.1)), 1e-12));
  const Field sx = sample(g1, [](double x, double) { return std::sin(x); });
  out.push_back(check_le("sin x, eta=0.1",
                         max_diff(solve_residual_closure(sx, 0.1), (1.0 / 11.0) * sx), 1e-12));
  const Field mode = sample(g2, [](double x, double y) { return std::cos(2.0 * x + 3.0 * y); });
  out.push_back(check_le("cos(2x+3y), eta=0.05",
                         max_diff(solve_residual_closure(mode, 0.05), (1.0 / 33.0) * mode), 1e-12));
  const Field c = sample(g2, [](double, double) { return 2.5; });
  out.push_back(check_le("constant 2.5, eta=0.2",
                         max_diff(solve_residual_closure(c, 0.2), 0.2 * c), 1e-12));

  const Field s = fluid_source(
      concat(std::vector<Field>{solenoidal_family(seed, 4, 1.0, true).u(g2, 0.0, 0.0).extract(0),
                                solenoidal_family(seed, 4, 1.0, true).u(g2, 0.0, 0.0).extract(1)}));
  for (double eta : {1.0, 0.05, 1e-3}) {
    const Field r = solve_residual_closure(s, eta);
    Field res = laplacian(r);
    res.add_scaled(-1.0 / eta, r);
    res += s;
    std::ostringstream name;
    name << "back-substitution fluid source, eta=" << eta;
    out.push_back(check_le(name.str(), max_abs(res), 1e-10));
  }
  double previous = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (double eta : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double m = max_abs(solve_residual_closure(s, eta));
    monotone = monotone && m < previous;
    previous = m;
  }
  out.push_back({"closure shrinks as eta -> 0 (max|r| at eta=1e-4)", previous,
                 std::numeric_limits<double>::infinity(), monotone});
  return out;
}

std::vector<DuhamelRow> duhamel_sweep(const CheckConfig& check, std::uint64_t seed) {
  if ((check.nodes - 1) % 4 != 0) throw ValidationError("check.nodes: need nodes - 1 divisible by 4");
  struct Case {
    std::string name;
    ModeFamily family;
    Grid grid;
  };
  const std::vector<Case> cases{
      {"solenoidal seed " + std::to_string(seed), solenoidal_family(seed, 3, 0.5, false), make_grid(2, 64)},
      {"solenoidal seed " + std::to_string(seed + 1), solenoidal_family(seed + 1, 4, 1.0, false),
       make_grid(2, 64)},
      {"scalar seed " + std::to_string(seed), scalar_family(seed, 6, 1.0, false), make_grid(1, 128)},
  };
  std::vector<DuhamelRow> rows;
  for (const auto& c : cases) {
    double previous_gap = kNaN;
    for (int level = 0; level < 3; ++level) {
      const int K = (check.nodes - 1) / (4 >> level) + 1;
      const double d = (check.eta0 - check.epsilon) / (K - 1);
      const ScaleStack u = c.family.stack(c.grid, check.t, check.epsilon, d, K);
      const ScaleStack psi = filter_defect_stack(u);
      double ratio = 0.0;
      double sup_psi = 0.0;
      double gap = 0.0;
      for (int j = 0; j < K; ++j) {
        sup_psi = std::max(sup_psi, max_abs(psi[j]));
        if (j == 0) continue;
        const Field deviation = u[j] - heat_propagate(u[0], u.eta(j) - u.eta(0));
        ratio = std::max(ratio, max_abs(deviation) / (u.eta(j) * sup_psi));
        if (j == K - 1) gap = max_diff(duhamel_integral(psi, j), deviation);
      }
      rows.push_back({c.name, K, d, gap, measured_order(previous_gap, gap), ratio});
      previous_gap = gap;
    }
  }
  return rows;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"filter-check",  "derive-source", "residual-check",
                                              "closure-check", "duhamel-check", "evolve",
                                              "burgers-reference"};
  return names;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::validation: return 2;
      case ErrorKind::numerical: return 3;
      case ErrorKind::io: return 4;
    }
  }
  return 3;
}

namespace {

namespace fs = std::filesystem;

std::string artifact_path(const std::string& dir, const std::string& file) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return (fs::path(dir) / file).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json checks_json(const std::vector<CheckLine>& lines) {
  json arr = json::array();
  for (const auto& l : lines) {
    json item = {{"name", l.name}, {"value", l.value}, {"pass", l.pass}};
    item["tol"] = std::isfinite(l.tol) ? json(l.tol) : json(nullptr);
    arr.push_back(item);
  }
  return arr;
}

json bounds_json(const std::vector<BoundRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"stack", r.stack}, {"node", r.node}, {"eta", r.eta}, {"lhs", r.lhs},
                   {"rhs", r.rhs}, {"holds", r.holds}});
  }
  return arr;
}

bool all_pass(const std::vector<CheckLine>& lines) {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

bool all_hold(const std::vector<BoundRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.holds; });
}

void print_checks(std::ostream& out, const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    out << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.value << '\n';
  }
}

json report(const AppConfig& config, const std::string& command) {
  return {{"config_hash", config.run.config_hash},
          {"command", command},
          {"config", json::parse(config.canonical)}};
}

int cmd_filter_check(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const auto lines = filter_semigroup_checks(config.run.seed);
  json doc = report(config, "filter-check");
  doc["checks"] = checks_json(lines);
  doc["pass"] = all_pass(lines);
  const std::string path = artifact_path(dir, "filter_check.json");
  write_text(path, doc.dump(2) + "\n");
  print_checks(out, lines);
  out << "wrote " << path << '\n';
  return all_pass(lines) ? 0 : 1;
}

int cmd_derive_source(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const JetExpr core = resolve_core_expr(config.core_text, config.run.dim);
  const auto lines = source_lines(core);
  for (const auto& l : lines) out << l << '\n';
  const FrechetTable table = jet_frechet(core);
  json coeffs = json::array();
  for (int a = 0; a < static_cast<int>(table.zeroth.size()); ++a) {
    for (int b = 0; b < table.N; ++b) {
      json entry = {{"alpha", a + 1}, {"beta", b + 1}, {"C", to_string(table.c0(a, b))}};
      for (int i = 0; i < kCoordCount; ++i) {
        const Coord c = static_cast<Coord>(i);
        if (!table.c1(a, b, c).is_zero()) entry["C_" + coord_name(c)] = to_string(table.c1(a, b, c));
      }
      coeffs.push_back(entry);
    }
  }
  json doc = report(config, "derive-source");
  doc["core"] = to_string(core);
  doc["source"] = lines;
  doc["linearization"] = coeffs;
  const std::string path = artifact_path(dir, "source.json");
  write_text(path, doc.dump(2) + "\n");
  return 0;
}

int cmd_residual_check(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const auto rows = residual_sweep(config);
  const bool linear = config.check.generator == "solenoidal";
  std::ostringstream csv;
  csv << "# config_hash=" << config.run.config_hash << " generator=" << config.check.generator << '\n';
  csv << "delta_eta,max_e,order" << (linear ? ",max_gap,relative_gap" : "") << '\n';
  for (const auto& r : rows) {
    csv << csv_number(r.delta_eta) << ',' << csv_number(r.max_e) << ',' << csv_number(r.order);
    if (linear) csv << ',' << csv_number(r.max_gap) << ',' << csv_number(r.relative_gap);
    csv << '\n';
  }
  const std::string path = artifact_path(dir, "residual_check.csv");
  write_text(path, csv.str());
  out << csv.str();
  const SweepRow& fine = rows.back();
  const bool ok = linear ? fine.relative_gap <= 0.05 : fine.order >= 1.9;
  out << (ok ? "PASS" : "FAIL") << " residual-check " << config.check.generator << '\n';
  return ok ? 0 : 1;
}

int cmd_closure_check(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const auto lines = closure_solver_checks(config.run.seed);
  const auto bounds = manufactured_bound_rows(config.check.nodes);
  json doc = report(config, "closure-check");
  doc["checks"] = checks_json(lines);
  doc["bound"] = bounds_json(bounds);
  const bool ok = all_pass(lines) && all_hold(bounds);
  doc["pass"] = ok;
  const std::string path = artifact_path(dir, "closure_check.json");
  write_text(path, doc.dump(2) + "\n");
  print_checks(out, lines);
  out << (all_hold(bounds) ? "PASS" : "FAIL") << " closure bound on " << bounds.size()
      << " interior nodes\n";
  return ok ? 0 : 1;
}

int cmd_duhamel_check(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const auto rows = duhamel_sweep(config.check, config.run.seed);
  std::ostringstream csv;
  csv << "# config_hash=" << config.run.config_hash << '\n';
  csv << "stack,nodes,delta_eta,max_gap,order,bound_ratio\n";
  bool ok = true;
  for (const auto& r : rows) {
    csv << r.stack << ',' << r.nodes << ',' << csv_number(r.delta_eta) << ','
        << csv_number(r.max_gap) << ',' << csv_number(r.order) << ',' << csv_number(r.bound_ratio)
        << '\n';
    ok = ok && r.bound_ratio <= 1.05;
    if (r.nodes == config.check.nodes) ok = ok && r.order >= 1.5;
  }
  const std::string path = artifact_path(dir, "duhamel_check.csv");
  write_text(path, csv.str());
  out << csv.str() << (ok ? "PASS" : "FAIL") << " duhamel-check\n";
  return ok ? 0 : 1;
}

int cmd_evolve(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const SimulationResult result = run_simulation(config.run);
  const std::string csv = artifact_path(dir, "diagnostics.csv");
  write_diagnostics_csv(csv, result.records, config.run.config_hash);
  const std::string chk = artifact_path(dir, "final_v.chk");
  write_checkpoint(chk, result.final_state.v, config.run.core, config.run.config_hash);
  if (config.run.couple_psi) {
    write_checkpoint(artifact_path(dir, "final_psi.chk"), result.final_state.psi, config.run.core,
                     config.run.config_hash);
  }
  const DiagnosticsRecord& last = result.records.back();
  json doc = report(config, "evolve");
  doc["dt"] = result.dt;
  doc["steps"] = result.final_state.step_count;
  doc["final"] = {{"t", last.t},           {"energy", last.energy}, {"max_div_v", last.max_div_v},
                  {"r_l2", last.r_l2},     {"psi_sup", last.psi_sup}, {"bound", last.bound}};
  const std::string summary = artifact_path(dir, "summary.json");
  write_text(summary, doc.dump(2) + "\n");
  out << "steps " << result.final_state.step_count << ", dt " << result.dt << ", energy "
      << last.energy << ", max|div v| " << last.max_div_v << '\n'
      << "wrote " << csv << ", " << chk << ", " << summary << '\n';
  return 0;
}

int cmd_burgers_reference(const AppConfig& config, const std::string& dir, std::ostream& out) {
  const auto snaps = reference_burgers(config.burgers);
  std::ostringstream csv;
  csv << "# config_hash=" << config.run.config_hash << '\n' << "t,max_diff_characteristics\n";
  bool ok = true;
  json snapshots = json::array();
  for (const auto& s : snaps) {
    const double diff = max_diff(s.u, burgers_characteristics(s.u.grid(), s.t));
    ok = ok && diff <= 1e-10;
    csv << csv_number(s.t) << ',' << csv_number(diff) << '\n';
    snapshots.push_back({{"t", s.t}, {"max_diff_characteristics", diff}});
  }
  const CheckConfig& ch = config.check;
  std::vector<BoundRow> bounds;
  for (const auto& s : snaps) {
    if (s.t == 0.0) continue;
    const auto rows = burgers_bound_rows(config.burgers, s.t, ch.epsilon, ch.eta0, ch.nodes);
    bounds.insert(bounds.end(), rows.begin(), rows.end());
  }
  ok = ok && all_hold(bounds);
  const std::string path = artifact_path(dir, "burgers_reference.csv");
  write_text(path, csv.str());
  json doc = report(config, "burgers-reference");
  doc["snapshots"] = snapshots;
  doc["bound"] = bounds_json(bounds);
  doc["pass"] = ok;
  const std::string summary = artifact_path(dir, "burgers_reference.json");
  write_text(summary, doc.dump(2) + "\n");
  out << csv.str() << (all_hold(bounds) ? "PASS" : "FAIL") << " closure bound on "
      << bounds.size() << " interior nodes\nwrote " << path << ", " << summary << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::string& command, const AppConfig& config, const std::string& out_dir,
                std::ostream& out) {
  if (command == "filter-check") return cmd_filter_check(config, out_dir, out);
  if (command == "derive-source") return cmd_derive_source(config, out_dir, out);
  if (command == "residual-check") return cmd_residual_check(config, out_dir, out);
  if (command == "closure-check") return cmd_closure_check(config, out_dir, out);
  if (command == "duhamel-check") return cmd_duhamel_check(config, out_dir, out);
  if (command == "evolve") return cmd_evolve(config, out_dir, out);
  if (command == "burgers-reference") return cmd_burgers_reference(config, out_dir, out);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace scalelab
