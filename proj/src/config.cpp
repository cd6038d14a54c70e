#include "scalelab/config.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "scalelab/error.hpp"

namespace scalelab {

namespace {

using nlohmann::json;

json defaults() {
  const RunConfig run;
  const CheckConfig check;
  const BurgersReferenceConfig burgers;
  return {
      {"grid", run.grid},
      {"dim", run.dim},
      {"eta", run.eta},
      {"beta", nullptr},
      {"delta", nullptr},
      {"dt", nullptr},
      {"t_end", run.t_end},
      {"core", run.core},
      {"closure", to_string(run.closure)},
      {"initial",
       {{"name", run.initial.name},
        {"amplitude", run.initial.amplitude},
        {"kmax", run.initial.kmax},
        {"velocity", json::array()}}},
      {"psi",
       {{"couple", run.couple_psi},
        {"initial", run.psi_initial},
        {"amplitude", run.psi_amplitude},
        {"forcing", to_string(run.psi_forcing)},
        {"forcing_file", run.psi_forcing_file}}},
      {"output_every", run.output_every},
      {"seed", run.seed},
      {"check",
       {{"generator", check.generator},
        {"grid", check.grid},
        {"t", check.t},
        {"eta", check.eta},
        {"h", check.h},
        {"nodes", check.nodes},
        {"epsilon", check.epsilon},
        {"eta0", check.eta0}}},
      {"burgers",
       {{"coarse_size", burgers.coarse_size},
        {"refine", burgers.refine},
        {"times", burgers.snapshot_times},
        {"dt", burgers.dt}}},
      {"derive", {{"core", "fluid"}}},
  };
}

bool is_integer(const json& v) { return v.is_number_integer() || v.is_number_unsigned(); }

/// Overlays `user` onto `base`, rejecting unknown keys and type mismatches.
void merge_strict(json& base, const json& user, const std::string& prefix) {
  if (!user.is_object()) {
    throw ValidationError((prefix.empty() ? std::string("config") : prefix) + ": expected an object");
  }
  for (const auto& [key, value] : user.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (!base.contains(key)) throw ValidationError(name + ": unknown key");
    json& slot = base[key];
    if (slot.is_object()) {
      merge_strict(slot, value, name);
      continue;
    }
    bool ok = false;
    if (slot.is_null()) ok = value.is_null() || value.is_number();
    else if (slot.is_boolean()) ok = value.is_boolean();
    else if (slot.is_string()) ok = value.is_string();
    else if (is_integer(slot)) ok = is_integer(value);
    else if (slot.is_number_float()) ok = value.is_number();
    else if (slot.is_array()) {
      ok = value.is_array();
      for (const auto& item : value) ok = ok && item.is_number();
    }
    if (!ok) throw ValidationError(name + ": wrong type (" + std::string(value.type_name()) + ")");
    slot = value;
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError("config parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(column));
  }
}

void apply_override(json& user, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("override '" + assignment + "': expected key=value");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  json* node = &user;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (key.empty()) throw ValidationError("override '" + assignment + "': empty key");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    json& child = (*node)[key];
    if (child.is_null()) child = json::object();
    if (!child.is_object()) throw ValidationError(path.substr(0, dot) + ": not an object");
    node = &child;
    start = dot + 1;
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

Closure closure_from(const std::string& s) {
  if (s == "none") return Closure::none;
  if (s == "helmholtz") return Closure::helmholtz;
  throw ValidationError("closure: expected 'none' or 'helmholtz', got '" + s + "'");
}

PsiForcing forcing_from(const std::string& s) {
  if (s == "zero") return PsiForcing::zero;
  if (s == "supplied") return PsiForcing::supplied;
  throw ValidationError("psi.forcing: expected 'zero' or 'supplied', got '" + s + "'");
}

void check_grid(int dim, int size, const std::string& field) {
  try {
    make_grid(dim, size);
  } catch (const ValidationError& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AppConfig parse_app_config(const std::string& text, const std::vector<std::string>& overrides) {
  json user = text.find_first_not_of(" \t\r\n") == std::string::npos ? json::object()
                                                                       : parse_json(text);
  if (!user.is_object()) throw ValidationError("config: top level must be an object");
  for (const auto& o : overrides) apply_override(user, o);
  const bool eta_given = user.contains("eta");

  json cfg = defaults();
  merge_strict(cfg, user, "");

  AppConfig out;
  RunConfig& run = out.run;
  run.grid = cfg["grid"].get<int>();
  run.dim = cfg["dim"].get<int>();
  require(run.dim == 1 || run.dim == 2, "dim: must be 1 or 2");
  check_grid(run.dim, run.grid, "grid");

  const bool has_beta = !cfg["beta"].is_null(), has_delta = !cfg["delta"].is_null();
  require(has_beta == has_delta, "beta: beta and delta must be given together");
  if (has_beta) {
    require(!eta_given, "eta: give either eta or (beta, delta), not both");
    run.beta = cfg["beta"].get<double>();
    run.delta = cfg["delta"].get<double>();
    require(*run.beta > 0.0, "beta: must be positive");
    require(*run.delta > 0.0, "delta: must be positive");
    cfg["eta"] = *run.beta * *run.delta * *run.delta;
  }
  run.eta = cfg["eta"].get<double>();
  require(run.eta > 0.0 && run.eta <= 1.0, "eta: must lie in (0, 1]");
  if (!cfg["dt"].is_null()) {
    run.dt = cfg["dt"].get<double>();
    require(*run.dt > 0.0, "dt: must be positive");
  }
  run.t_end = cfg["t_end"].get<double>();
  require(run.t_end > 0.0, "t_end: must be positive");
  run.core = cfg["core"].get<std::string>();
  require(run.core == "fluid" || run.core == "burgers", "core: expected 'fluid' or 'burgers'");
  run.closure = closure_from(cfg["closure"].get<std::string>());

  const json& ic = cfg["initial"];
  run.initial.name = ic["name"].get<std::string>();
  require(run.initial.name == "taylor-green" || run.initial.name == "random" ||
              run.initial.name == "rigid",
          "initial.name: expected 'taylor-green', 'random' or 'rigid'");
  run.initial.amplitude = ic["amplitude"].get<double>();
  run.initial.kmax = ic["kmax"].get<int>();
  require(run.initial.kmax >= 1, "initial.kmax: must be at least 1");
  run.initial.velocity = ic["velocity"].get<std::vector<double>>();

  const json& psi = cfg["psi"];
  run.couple_psi = psi["couple"].get<bool>();
  run.psi_initial = psi["initial"].get<std::string>();
  require(run.psi_initial == "zero" || run.psi_initial == "mode",
          "psi.initial: expected 'zero' or 'mode'");
  run.psi_amplitude = psi["amplitude"].get<double>();
  run.psi_forcing = forcing_from(psi["forcing"].get<std::string>());
  run.psi_forcing_file = psi["forcing_file"].get<std::string>();
  require(run.psi_forcing == PsiForcing::zero || !run.psi_forcing_file.empty(),
          "psi.forcing_file: required when psi.forcing is 'supplied'");

  run.output_every = cfg["output_every"].get<int>();
  require(run.output_every >= 1, "output_every: must be at least 1");
  require(cfg["seed"].is_number_unsigned() || cfg["seed"].get<std::int64_t>() >= 0,
          "seed: must be non-negative");
  run.seed = cfg["seed"].get<std::uint64_t>();

  const json& ch = cfg["check"];
  CheckConfig& check = out.check;
  check.generator = ch["generator"].get<std::string>();
  require(check.generator == "taylor-green" || check.generator == "perturbed" ||
              check.generator == "burgers" || check.generator == "solenoidal",
          "check.generator: expected 'taylor-green', 'perturbed', 'burgers' or 'solenoidal'");
  check.grid = ch["grid"].get<int>();
  check_grid(2, check.grid, "check.grid");
  check.t = ch["t"].get<double>();
  check.eta = ch["eta"].get<double>();
  check.h = ch["h"].get<double>();
  require(check.h > 0.0, "check.h: must be positive");
  require(check.eta - 8.0 * check.h > 0.0, "check.eta: must exceed 8 * check.h");
  check.nodes = ch["nodes"].get<int>();
  require(check.nodes >= 5, "check.nodes: must be at least 5");
  check.epsilon = ch["epsilon"].get<double>();
  check.eta0 = ch["eta0"].get<double>();
  require(check.epsilon > 0.0 && check.epsilon < check.eta0 && check.eta0 <= 1.0,
          "check.epsilon: need 0 < epsilon < eta0 <= 1");

  const json& bg = cfg["burgers"];
  out.burgers.coarse_size = bg["coarse_size"].get<int>();
  check_grid(1, out.burgers.coarse_size, "burgers.coarse_size");
  out.burgers.refine = bg["refine"].get<int>();
  require(out.burgers.refine >= 4, "burgers.refine: must be at least 4");
  out.burgers.snapshot_times = bg["times"].get<std::vector<double>>();
  require(!out.burgers.snapshot_times.empty(), "burgers.times: must not be empty");
  for (double t : out.burgers.snapshot_times) {
    require(t >= 0.0 && t < 1.0, "burgers.times: entries must lie in [0, 1)");
  }
  out.burgers.dt = bg["dt"].get<double>();
  require(out.burgers.dt > 0.0, "burgers.dt: must be positive");

  out.core_text = cfg["derive"]["core"].get<std::string>();

  out.canonical = cfg.dump();
  run.config_hash = fnv1a_hex(out.canonical);
  return out;
}

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  return parse_app_config(text, overrides).run;
}

}  // namespace scalelab
