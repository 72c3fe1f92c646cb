#include "shc/errors.hpp"
#include "shc/lab.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;

void list_experiments() {
  for (const auto& info : shc::lab::experiments()) {
    std::cout << info.name << "\t" << info.description << "\n";
  }
}

int run(const std::string& config_path, std::vector<std::string> overrides,
        unsigned workers, const std::string& out_dir) {
  if (workers > 0) overrides.push_back("workers=" + std::to_string(workers));
  const auto config = shc::lab::load_config(config_path, overrides);
  const auto result = shc::lab::run_experiment(config);
  const auto csv = shc::lab::write_outputs(result, out_dir);
  std::cout << csv.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral heat content laboratory"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run one experiment from a key=value config");
  std::string config_path;
  std::vector<std::string> overrides;
  unsigned workers = 0;
  std::string out_dir = ".";
  run_cmd->add_option("config", config_path, "configuration file")->required();
  run_cmd->add_option("--set", overrides, "override a config entry, key=value")
      ->take_all()
      ->expected(1);
  run_cmd->add_option("--workers", workers, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", out_dir, "output directory");

  auto* list_cmd = app.add_subcommand("list-experiments", "print the experiment names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*list_cmd) {
      list_experiments();
      return kOk;
    }
    return run(config_path, overrides, workers, out_dir);
  } catch (const shc::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const shc::DomainError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const shc::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
