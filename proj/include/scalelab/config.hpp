#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scalelab/burgers.hpp"
#include "scalelab/evolver.hpp"

namespace scalelab {

/// Parameters of the stack-based checks (residual-check, duhamel-check, closure-check).
struct CheckConfig {
  /// "taylor-green", "perturbed", "burgers" or "solenoidal".
  std::string generator = "taylor-green";
  /// Grid size of the generator (ignored for burgers, which uses burgers.coarse_size).
  int grid = 32;
  /// Time at which the family is sampled.
  double t = 0.3;
  /// Scale at the centre node of the residual sweep.
  double eta = 0.1;
  /// Finest scale spacing h of the sweep {4h, 2h, h}.
  double h = 0.0025;
  /// Node count of duhamel and bound stacks.
  int nodes = 33;
  double epsilon = 1e-4;
  double eta0 = 0.3;
};

/// A fully parsed experiment configuration.
struct AppConfig {
  RunConfig run;
  CheckConfig check;
  BurgersReferenceConfig burgers;
  /// Core for derive-source: a built-in name ("burgers", "fluid") or core text.
  std::string core_text = "fluid";
  /// Canonical JSON of the effective configuration, defaults included.
  std::string canonical;
};

/// Strict JSON config parsing: unknown keys and wrong types are ValidationErrors naming
/// the offending field; syntax errors report line and column. `overrides` are dotted
/// key=value assignments applied before validation; values parse as JSON, falling back
/// to strings.
AppConfig parse_app_config(const std::string& text, const std::vector<std::string>& overrides = {});

/// The run part of parse_app_config.
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});

/// 64-bit FNV-1a of `text` as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace scalelab
