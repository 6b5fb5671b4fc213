#include "cnf2ct/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "cnf2ct/error.hpp"

namespace cnf2ct {

namespace fs = std::filesystem;

void PipelineConfig::validate() const {
  (void)thetas();
  if (qubit_cap == 0 || brute_force_cap == 0 || node_budget == 0 ||
      threads == 0) {
    throw Error(Errc::DomainError, "caps and thread count must be positive");
  }
  if (!(tolerance > 0.0)) throw Error(Errc::DomainError, "tolerance must be > 0");
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::RecursionBudgetExceeded:
      return kExitRecursionBudget;
    case Errc::QubitBudgetExceeded:
    case Errc::TooManyVariables:
    case Errc::Overflow:
      return kExitResourceBudget;
    default:
      return kExitInputError;
  }
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const ThetaParams& t) {
  return {{"theta1", t.theta1()}, {"theta2", t.theta2()}};
}

namespace {

Json formula_shape(const Formula& phi) {
  return {{"n", phi.num_vars()},
          {"m", phi.num_clauses()},
          {"m1", phi.m1()},
          {"m2", phi.m2()},
          {"m3", phi.m3()},
          {"L", length(phi)}};
}

Json error_report(const Error& e) {
  return {{"error", {{"code", std::string(errc_name(e.code()))},
                     {"message", e.what()}}}};
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::DomainError, "cannot write " + path.string());
  out << text;
}

std::string leaf_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "leaf_%04zu.cnf", i);
  return buf;
}

void write_leaves(const fs::path& dir, const std::vector<Formula>& leaves) {
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    write_text(dir / "leaves" / leaf_name(i), emit_dimacs(leaves[i]));
  }
}

template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e.code()), error_report(e)};
  }
}

}  // namespace

Json to_json(const SparsifyResult& r) {
  Json leaves = Json::array();
  for (std::size_t i = 0; i < r.leaves.size(); ++i) {
    const Formula& leaf = r.leaves[i];
    leaves.push_back({{"id", i},
                      {"L", length(leaf)},
                      {"m", leaf.num_clauses()},
                      {"m1", leaf.m1()},
                      {"m2", leaf.m2()},
                      {"m3", leaf.m3()}});
  }
  const auto& s = r.stats;
  return {{"thetas", to_json(r.thetas)},
          {"root", formula_shape(r.root)},
          {"leaves", std::move(leaves)},
          {"stats",
           {{"node_count", s.node_count},
            {"leaf_count", s.leaf_count},
            {"max_depth", s.max_depth},
            {"max_r2", s.max_r2},
            {"immigrant_1_total", s.immigrant_1_total},
            {"immigrant_2_total", s.immigrant_2_total},
            {"petal_steps_per_path_max", s.petal_steps_per_path_max}}}};
}

Json to_json(const BoundReport& r) {
  Json checks = Json::array();
  for (const BoundCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"observed", c.observed},
                      {"bound", c.bound},
                      {"relation", c.strict ? "<" : "<="},
                      {"holds", c.holds}});
  }
  return {{"checks", std::move(checks)}, {"all_hold", r.all_hold()}};
}

Json to_json(const AmplitudeReport& r) {
  return {{"n", r.n},
          {"satisfying", r.satisfying},
          {"expected", r.expected},
          {"expected_value", r.expected_value},
          {"amplitude", {{"re", r.amplitude.real()}, {"im", r.amplitude.imag()}}},
          {"abs_error", r.abs_error},
          {"tolerance", r.tolerance},
          {"match", r.match},
          {"imaginary_ok", r.imaginary_ok},
          {"within_half_step", r.within_half_ulp_of_count},
          {"nonzero_decides_sat", r.nonzero_decides_sat},
          {"qubits", r.qubits},
          {"gate_count", r.gate_count},
          {"t_count", r.t_count},
          {"t_bound", r.t_bound}};
}

Json to_json(const ExponentReport& r) {
  return {{"thetas", to_json(r.thetas)},
          {"eta", r.eta},
          {"gamma", r.gamma},
          {"a", r.a},
          {"total_exponent", r.total_exponent},
          {"displayed_exponent", r.displayed_exponent},
          {"budget", r.budget},
          {"passes", r.passes},
          {"displayed_passes", r.displayed_passes}};
}

Json to_json(const ConsistencyReport& r) {
  return {{"per_t_exponent", r.per_t_exponent},
          {"t_gates_per_length", r.t_gates_per_length},
          {"product", r.product},
          {"stated", r.stated},
          {"relative_deviation", r.relative_deviation},
          {"tolerance", r.tolerance},
          {"budget", r.budget},
          {"passes", r.passes}};
}

Json to_json(const OptimizationResult& r) {
  return {{"best", to_json(r.best)},
          {"reference", to_json(r.reference)},
          {"evaluations", r.evaluations},
          {"reference_relative_gap", r.reference_relative_gap},
          {"reference_within_one_percent", r.reference_within_one_percent},
          {"best_within_budget", r.best_within_budget}};
}

Json compile_summary(const Formula& phi, const ReversibleCircuit& tidy,
                     const QuantumCircuit& lowered) {
  const std::size_t len = length(phi);
  return {{"n", phi.num_vars()},
          {"L", len},
          {"toffoli_count", tidy.toffoli_count()},
          {"toffoli_bound", 2 * len},
          {"ancilla_count", tidy.n_ancillas},
          {"qubits", lowered.n_qubits},
          {"gate_count", lowered.gates.size()},
          {"clifford_count", lowered.clifford_count()},
          {"t_count", lowered.t_count()},
          {"t_bound", 14 * len},
          {"within_bound", lowered.t_count() <= 14 * len &&
                               tidy.toffoli_count() <= 2 * len}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Commands

Formula load_formula(const fs::path& input, const PipelineConfig& config) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Error(Errc::InputUnreadable, "cannot read " + input.string());
  std::ostringstream text;
  text << in.rdbuf();
  Formula phi = parse_dimacs(text.str()).formula;
  if (config.eliminate_units) phi = eliminate_units(phi).formula;
  return phi;
}

CommandResult cmd_sparsify(const fs::path& input, const PipelineConfig& config) {
  return guarded([&]() -> CommandResult {
    config.validate();
    const Formula phi = load_formula(input, config);
    SparsifyOptions opts;
    opts.node_budget = config.node_budget;
    opts.threads = config.threads;
    const SparsifyResult r = sparsify(phi, config.thetas(), opts);

    Json report = to_json(r);
    report["input"] = input.filename().string();
    report["bounds"] = to_json(check_leaf_bounds(r, phi.num_vars()));
    if (!config.output_dir.empty()) {
      write_leaves(config.output_dir, r.leaves);
      write_text(config.output_dir / "sparsify.json", dump(report));
    }
    return {kExitOk, std::move(report)};
  });
}

CommandResult cmd_compile(const fs::path& input, const PipelineConfig& config) {
  return guarded([&]() -> CommandResult {
    config.validate();
    const Formula phi = load_formula(input, config);
    if (!phi.empty() && counting_circuit_qubits(phi) > config.qubit_cap) {
      throw Error(Errc::QubitBudgetExceeded,
                  std::to_string(counting_circuit_qubits(phi)) +
                      " qubits exceed the cap of " +
                      std::to_string(config.qubit_cap));
    }
    const ReversibleCircuit tidy = compile_formula(phi);
    const QuantumCircuit lowered = lower_circuit(tidy);
    const QuantumCircuit counting = build_counting_circuit(phi, config.qubit_cap);

    Json report = compile_summary(phi, tidy, lowered);
    report["input"] = input.filename().string();
    report["counting_gate_count"] = counting.gates.size();
    if (!config.output_dir.empty()) {
      write_text(config.output_dir / "circuit.rev", serialize(tidy));
      write_text(config.output_dir / "circuit.qasm", emit_qasm(lowered));
      write_text(config.output_dir / "counting.qasm", emit_qasm(counting));
      write_text(config.output_dir / "compile.json", dump(report));
    }
    return {kExitOk, std::move(report)};
  });
}

namespace {

AmplitudeOptions amplitude_options(const PipelineConfig& config) {
  return {config.qubit_cap, config.brute_force_cap, config.tolerance};
}

}  // namespace

CommandResult cmd_verify(const std::vector<fs::path>& inputs,
                         const PipelineConfig& config) {
  return guarded([&]() -> CommandResult {
    config.validate();
    if (inputs.empty()) throw Error(Errc::DomainError, "no input files");
    Json results = Json::array();
    bool all_match = true;
    for (const fs::path& input : inputs) {
      const Formula phi = load_formula(input, config);
      Json one = to_json(verify_counting_identity(phi, amplitude_options(config)));
      one["input"] = input.filename().string();
      all_match = all_match && one["match"].get<bool>();
      results.push_back(std::move(one));
    }
    Json report = inputs.size() == 1
                      ? results[0]
                      : Json{{"results", results}, {"all_match", all_match}};
    if (!config.output_dir.empty()) {
      write_text(config.output_dir / "verify.json", dump(report));
    }
    return {all_match ? kExitOk : kExitMismatch, std::move(report)};
  });
}

CommandResult cmd_pipeline(const fs::path& input, const PipelineConfig& config) {
  return guarded([&]() -> CommandResult {
    config.validate();
    const Formula phi = load_formula(input, config);
    SparsifyOptions opts;
    opts.node_budget = config.node_budget;
    opts.threads = config.threads;
    const SparsifyResult r = sparsify(phi, config.thetas(), opts);

    // Leaves are independent; results are stored by index.
    const AmplitudeOptions amp = amplitude_options(config);
    auto verify_leaf = [&](std::size_t i) {
      const Formula& leaf = r.leaves[i];
      Json entry;
      entry["id"] = i;
      entry["verify"] = to_json(verify_counting_identity(leaf, amp));
      if (leaf.empty()) {
        entry["compile"] = nullptr;
      } else {
        const ReversibleCircuit tidy = compile_formula(leaf);
        entry["compile"] = compile_summary(leaf, tidy, lower_circuit(tidy));
      }
      return entry;
    };
    std::vector<Json> entries(r.leaves.size());
    for (std::size_t start = 0; start < r.leaves.size(); start += config.threads) {
      const std::size_t stop =
          std::min<std::size_t>(start + config.threads, r.leaves.size());
      std::vector<std::future<Json>> batch;
      for (std::size_t i = start + 1; i < stop; ++i) {
        batch.push_back(std::async(std::launch::async, verify_leaf, i));
      }
      entries[start] = verify_leaf(start);
      for (std::size_t i = start + 1; i < stop; ++i) {
        entries[i] = batch[i - start - 1].get();
      }
    }

    bool all_match = true;
    bool any_leaf_sat = false;
    bool within_bounds = true;
    Json leaves = Json::array();
    for (Json& e : entries) {
      all_match = all_match && e["verify"]["match"].get<bool>();
      any_leaf_sat = any_leaf_sat || e["verify"]["satisfying"].get<std::uint64_t>() > 0;
      if (!e["compile"].is_null()) {
        within_bounds = within_bounds && e["compile"]["within_bound"].get<bool>();
      }
      leaves.push_back(std::move(e));
    }
    const bool root_sat = count_satisfying(r.root, config.brute_force_cap) > 0;

    Json report;
    report["input"] = input.filename().string();
    report["sparsify"] = to_json(r);
    report["bounds"] = to_json(check_leaf_bounds(r, phi.num_vars()));
    report["leaves"] = std::move(leaves);
    report["summary"] = {{"all_match", all_match},
                         {"all_within_t_bound", within_bounds},
                         {"root_satisfiable", root_sat},
                         {"any_leaf_satisfiable", any_leaf_sat},
                         {"satisfiability_preserved", root_sat == any_leaf_sat}};
    if (!config.output_dir.empty()) {
      write_leaves(config.output_dir, r.leaves);
      write_text(config.output_dir / "pipeline.json", dump(report));
    }
    const bool ok = all_match && root_sat == any_leaf_sat;
    return {ok ? kExitOk : kExitMismatch, std::move(report)};
  });
}

CommandResult cmd_constants(const ConstantsOptions& options) {
  return guarded([&]() -> CommandResult {
    const ThetaParams thetas = options.thetas.value_or(kReferenceThetas);
    const ExponentReport r = compose_exponent(options.a, thetas, options.budget);
    Json report;
    report["composition"] = to_json(r);
    report["composition"]["note"] =
        "total_exponent = a*eta + gamma; displayed_exponent = a*(eta + gamma) "
        "multiplies gamma by a as well";
    if (options.check_14x) report["check_14x"] = to_json(tcount_constant_check());
    if (options.optimize) {
      report["optimization"] =
          to_json(optimize_thetas(options.a, options.budget, options.grid));
    }
    return {kExitOk, std::move(report)};
  });
}

}  // namespace cnf2ct
