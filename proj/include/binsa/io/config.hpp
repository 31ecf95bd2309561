#pragma once

// Study configuration and state-definition files (JSON).

#include <optional>
#include <string>
#include <vector>

#include "binsa/benchmarks.hpp"
#include "binsa/binning.hpp"
#include "binsa/io/report.hpp"
#include "binsa/sampling.hpp"
#include "binsa/simdec.hpp"
#include "binsa/sobol_oracle.hpp"

namespace binsa::io {

/// Dependence between two inputs named by column.
struct NamedDependence {
  DependenceKind kind = DependenceKind::copula;
  std::string a;
  std::string b;
  double rho = 0.0;
  double fraction = 0.0;
  bool negative = false;
};

struct SimdecSettings {
  std::size_t max_inputs = 3;
  double threshold = 0.8;
  int output_bins = 100;
  std::optional<std::string> states_file;
};

struct OracleSettings {
  std::size_t n = 1500;
  OracleSampler sampler = OracleSampler::qmc;
};

struct SweepSettings {
  std::size_t n = 100000;
  std::vector<double> grid = {-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<DependenceKind> kinds = {DependenceKind::copula, DependenceKind::equal_portion};
  std::vector<ModelId> models = {ModelId::additive(), ModelId::multiplicative()};
};

struct StudyConfig {
  std::optional<ModelId> model;
  std::optional<std::string> dataset;
  ToyLaw toy_law = ToyLaw::normal;
  std::vector<InputSpec> inputs;  // empty: model defaults
  SamplingPlan sampling;
  std::vector<NamedDependence> dependence;
  BinningConfig binning;
  SimdecSettings simdec;
  OracleSettings oracle;
  SweepSettings sweep;
  std::string out_dir = ".";

  /// Exactly one of model and dataset must be set.
  void validate() const;
  /// `inputs` when given, otherwise the model's default marginals.
  std::vector<InputSpec> specs() const;
};

/// Unknown keys are rejected with InputError.
StudyConfig parse_config(const Json& j);
StudyConfig load_config(const std::string& path);

/// Resolves names against `specs`; throws InputError for unknown columns.
std::vector<DependencePlan> resolve_dependence(const std::vector<NamedDependence>& deps,
                                               const std::vector<InputSpec>& specs);

/// {"states": [{"input": name, "states": [{"label", "min", "max"} | {"label", "levels"}]}]}
/// Entries are taken in file order, first one most influential.
std::vector<StateDefinition> parse_states(const Json& j, const Dataset& data);
std::vector<StateDefinition> load_states(const std::string& path, const Dataset& data);

Json read_json_file(const std::string& path);

}  // namespace binsa::io
