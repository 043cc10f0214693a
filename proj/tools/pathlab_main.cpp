#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathlab/config.hpp"
#include "pathlab/experiment.hpp"
#include "pathlab/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pathlab: pathwise calculus and robust hedging experiments"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::vector<std::string> overrides;
  auto* run = app.add_subcommand("run", "run an experiment described by a config file");
  run->add_option("--config", config_path, "key=value config file")->required();
  run->add_option("--set", overrides, "override a config key, e.g. --set generator.hurst=0.6");
  run->add_option("--out", out_dir, "output directory")->required();

  auto* schemas = app.add_subcommand("schemas", "print the output CSV schemas");
  auto* version = app.add_subcommand("version", "print the tool version");

  CLI11_PARSE(app, argc, argv);

  if (schemas->parsed()) {
    std::cout << pathlab::csv_schemas_text();
    return 0;
  }
  if (version->parsed()) {
    std::cout << "pathlab " << pathlab::kVersion << "\n";
    return 0;
  }

  pathlab::ExperimentConfig cfg;
  try {
    auto kv = pathlab::KeyValues::parse_file(config_path);
    for (const auto& ov : overrides) {
      const auto eq = ov.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --set expects key=value, got '" << ov << "'\n";
        return 2;
      }
      kv.set(ov.substr(0, eq), ov.substr(eq + 1));
    }
    cfg = pathlab::ExperimentConfig::from_keyvalues(kv);
  } catch (const pathlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto result = pathlab::run_experiment(cfg, out_dir);
    std::cout << result.summary;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
