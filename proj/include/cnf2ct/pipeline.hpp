#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnf2ct/amplitude.hpp"
#include "cnf2ct/bounds.hpp"
#include "cnf2ct/clifford_t.hpp"
#include "cnf2ct/formula.hpp"
#include "cnf2ct/reversible.hpp"
#include "cnf2ct/sparsifier.hpp"

namespace cnf2ct {

using Json = nlohmann::json;

/// Documented process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitRecursionBudget = 3,
  kExitResourceBudget = 4,
  kExitMismatch = 5,
};

struct PipelineConfig {
  double theta1 = kReferenceThetas.theta1();
  double theta2 = kReferenceThetas.theta2();
  std::uint32_t qubit_cap = kDefaultQubitCap;
  std::uint32_t brute_force_cap = kDefaultBruteForceCap;
  std::size_t node_budget = 10'000'000;
  double tolerance = 1e-9;
  std::filesystem::path output_dir;  // empty: write nothing
  unsigned threads = 1;
  bool eliminate_units = false;

  /// Throws InvalidTheta or DomainError.
  void validate() const;
  ThetaParams thetas() const { return ThetaParams(theta1, theta2); }
};

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
};

/// Maps a library error onto the exit-code contract.
int exit_code_for(Errc code) noexcept;

Json to_json(const ThetaParams& t);
Json to_json(const SparsifyResult& r);
Json to_json(const BoundReport& r);
Json to_json(const AmplitudeReport& r);
Json to_json(const ExponentReport& r);
Json to_json(const ConsistencyReport& r);
Json to_json(const OptimizationResult& r);
/// Gate and qubit accounting for the tidy circuit of phi.
Json compile_summary(const Formula& phi, const ReversibleCircuit& tidy,
                     const QuantumCircuit& lowered);

/// Stable text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

/// Reads and parses a DIMACS file; unit elimination applied when configured.
Formula load_formula(const std::filesystem::path& input,
                     const PipelineConfig& config);

CommandResult cmd_sparsify(const std::filesystem::path& input,
                           const PipelineConfig& config);
CommandResult cmd_compile(const std::filesystem::path& input,
                          const PipelineConfig& config);
CommandResult cmd_verify(const std::vector<std::filesystem::path>& inputs,
                         const PipelineConfig& config);
/// sparsify, then compile and verify every leaf.
CommandResult cmd_pipeline(const std::filesystem::path& input,
                           const PipelineConfig& config);

struct ConstantsOptions {
  double a = kPerLengthExponent;
  double budget = kLog2OnePointThree;
  std::optional<ThetaParams> thetas;  // defaults to the published pair
  bool optimize = false;
  bool check_14x = false;
  ThetaGrid grid;
};

CommandResult cmd_constants(const ConstantsOptions& options);

}  // namespace cnf2ct
