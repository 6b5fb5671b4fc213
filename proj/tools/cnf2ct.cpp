// Command-line front end: sparsify, compile, verify, constants, pipeline.
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cnf2ct/error.hpp"
#include "cnf2ct/pipeline.hpp"

using namespace cnf2ct;

int main(int argc, char** argv) {
  CLI::App app{"3-CNF sparsification and Clifford+T counting circuits"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML-style configuration file; flags win");

  PipelineConfig config;
  std::string out_dir;
  std::string format = "json";
  app.add_option("--theta1", config.theta1, "sunflower threshold for (2,1) and (3,2)");
  app.add_option("--theta2", config.theta2, "sunflower threshold for (3,1)");
  app.add_option("--qubit-cap", config.qubit_cap, "largest dense simulation");
  app.add_option("--bf-cap", config.brute_force_cap, "largest brute-force n");
  app.add_option("--node-budget", config.node_budget, "recursion node limit");
  app.add_option("--tol", config.tolerance, "amplitude tolerance");
  app.add_option("--out", out_dir, "directory for artifacts");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json"}));
  app.add_option("--threads", config.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--eliminate-units", config.eliminate_units,
               "propagate unit clauses before anything else");

  std::string input;
  auto* sparsify = app.add_subcommand("sparsify", "split into sparse leaves");
  sparsify->add_option("input", input, "DIMACS file")->required();
  auto* compile = app.add_subcommand("compile", "emit reversible and QASM circuits");
  compile->add_option("input", input, "DIMACS file")->required();
  auto* pipeline = app.add_subcommand("pipeline", "sparsify, then compile and verify every leaf");
  pipeline->add_option("input", input, "DIMACS file")->required();

  std::vector<std::string> inputs;
  auto* verify = app.add_subcommand("verify", "check <0|C|0> against the satisfying fraction");
  verify->add_option("inputs", inputs, "DIMACS files")->required();

  ConstantsOptions constants;
  auto* cmd_const = app.add_subcommand("constants", "exponent bookkeeping");
  cmd_const->add_option("--a", constants.a, "exponent per unit of length");
  cmd_const->add_option("--budget", constants.budget, "exponent budget");
  cmd_const->add_flag("--optimize", constants.optimize, "grid search over thetas");
  cmd_const->add_flag("--check-14x", constants.check_14x, "14 T gates per length unit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  config.output_dir = out_dir;

  CommandResult result;
  if (*sparsify) {
    result = cmd_sparsify(input, config);
  } else if (*compile) {
    result = cmd_compile(input, config);
  } else if (*pipeline) {
    result = cmd_pipeline(input, config);
  } else if (*verify) {
    result = cmd_verify({inputs.begin(), inputs.end()}, config);
  } else {
    if (app.count("--theta1") || app.count("--theta2")) {
      try {
        constants.thetas = config.thetas();
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
      }
    }
    result = cmd_constants(constants);
  }
  std::cout << dump(result.report);
  return result.exit_code;
}
