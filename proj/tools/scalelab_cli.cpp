#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scalelab/config.hpp"
#include "scalelab/error.hpp"
#include "scalelab/experiments.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw scalelab::IoError("cannot open config " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scalelab: scale-filtered PDE experiments on the periodic torus"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "scalelab-out";
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  bool seed_given = false;

  const std::map<std::string, std::string> help{
      {"filter-check", "heat-semigroup property suite (JSON report)"},
      {"derive-source", "print the source (W - L)F of a core; core from derive.core"},
      {"residual-check", "scale-refinement study of the residual transport defect (CSV)"},
      {"closure-check", "Helmholtz closure solver and closure error bound (JSON report)"},
      {"duhamel-check", "Duhamel reconstruction and deviation bound (CSV)"},
      {"evolve", "integrate the slice equations (CSV diagnostics, checkpoints, JSON summary)"},
      {"burgers-reference", "fine-grid Burgers reference vs characteristics, closure bound"},
  };
  for (const auto& name : scalelab::command_names()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--set", overrides, "override key=value (dotted keys, repeatable)");
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (seed_given) overrides.push_back("seed=" + std::to_string(seed));
    const std::string text = config_path.empty() ? std::string("{}") : read_file(config_path);
    const scalelab::AppConfig config = scalelab::parse_app_config(text, overrides);
    return scalelab::run_command(command, config, out_dir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "scalelab " << command << ": " << e.what() << '\n';
    return scalelab::exit_code_for(e);
  }
}
