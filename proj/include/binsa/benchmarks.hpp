#pragma once

// Built-in analytic models and their reference index values.

#include <string>
#include <string_view>
#include <vector>

#include "binsa/core.hpp"
#include "binsa/sampling.hpp"

namespace binsa {

enum class ModelKind {
  toy_portfolio,
  ishigami,
  two_factor_additive,
  two_factor_multiplicative,
  nested_interaction,
};

struct ModelId {
  ModelKind kind = ModelKind::toy_portfolio;
  double a = 7.0;  // ishigami only
  double b = 0.1;  // ishigami only

  static ModelId toy_portfolio() { return {ModelKind::toy_portfolio}; }
  static ModelId ishigami(double a = 7.0, double b = 0.1);
  static ModelId additive() { return {ModelKind::two_factor_additive}; }
  static ModelId multiplicative() { return {ModelKind::two_factor_multiplicative}; }
  static ModelId nested_interaction() { return {ModelKind::nested_interaction}; }

  bool operator==(const ModelId&) const = default;
};

/// "toy_portfolio", "ishigami", "additive", "multiplicative",
/// "nested_interaction".
std::string model_name(const ModelId& model);
ModelId parse_model(std::string_view name);

std::size_t model_arity(const ModelId& model);

/// Row-wise model output.
///   toy_portfolio      Y = C_s P_s + C_t P_t + C_j P_j, columns P_s,C_s,P_t,C_t,P_j,C_j
///   ishigami           Y = sin X1 + a sin² X2 + b X3⁴ sin X1
///   additive           Y = A + B
///   multiplicative     Y = A B
///   nested_interaction Y = A                      if B < 0.5
///                      Y = (A + 3 (B - 0.5)) C    otherwise
/// Throws InputError on an arity mismatch.
std::vector<double> evaluate(const ModelId& model, const Matrix& inputs);

enum class ToyLaw { normal, uniform };

/// Toy model marginals. The second parameter of each normal law is the
/// standard deviation; the uniform variant spans mean ± 2 sd.
std::vector<InputSpec> toy_default_specs(ToyLaw law = ToyLaw::normal);

/// Default marginals of any built-in model (ishigami: U(-π, π)³; two-factor
/// models: U(0, 5)²; nested_interaction: A, C ~ U(-1, 1), B ~ U(0, 1)).
std::vector<InputSpec> default_specs(const ModelId& model, ToyLaw law = ToyLaw::normal);

struct IshigamiIndices {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s13 = 0.0;
  double variance = 0.0;
};

/// Closed-form indices for inputs U(-π, π)³. Throws NumericError when the
/// output variance vanishes.
IshigamiIndices ishigami_analytic_indices(double a, double b);

/// Draws the design of `plan`, maps it through `specs`, applies each
/// dependence plan in turn (the i-th with seed dependence_seed(plan.seed, i))
/// and evaluates the model.
Dataset sample_model(const ModelId& model, const std::vector<InputSpec>& specs,
                     const SamplingPlan& plan, std::span<const DependencePlan> dependence = {});

std::uint64_t dependence_seed(std::uint64_t seed, std::size_t index);

}  // namespace binsa
