#include "binsa/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace binsa {
namespace {

constexpr double kNestedThreshold = 0.5;  // b0: midpoint of B's default range
constexpr double kNestedSlope = 3.0;      // c

}  // namespace

ModelId ModelId::ishigami(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("ishigami parameters must be finite");
  }
  ModelId m{ModelKind::ishigami};
  m.a = a;
  m.b = b;
  return m;
}

std::string model_name(const ModelId& model) {
  switch (model.kind) {
    case ModelKind::toy_portfolio:
      return "toy_portfolio";
    case ModelKind::ishigami:
      return "ishigami";
    case ModelKind::two_factor_additive:
      return "additive";
    case ModelKind::two_factor_multiplicative:
      return "multiplicative";
    case ModelKind::nested_interaction:
      return "nested_interaction";
  }
  return "unknown";
}

ModelId parse_model(std::string_view name) {
  if (name == "toy_portfolio" || name == "toy") return ModelId::toy_portfolio();
  if (name == "ishigami") return ModelId::ishigami();
  if (name == "additive" || name == "two_factor_additive") return ModelId::additive();
  if (name == "multiplicative" || name == "two_factor_multiplicative") {
    return ModelId::multiplicative();
  }
  if (name == "nested_interaction" || name == "nested") return ModelId::nested_interaction();
  throw InputError("unknown model '" + std::string(name) + "'");
}

std::size_t model_arity(const ModelId& model) {
  switch (model.kind) {
    case ModelKind::toy_portfolio:
      return 6;
    case ModelKind::ishigami:
    case ModelKind::nested_interaction:
      return 3;
    case ModelKind::two_factor_additive:
    case ModelKind::two_factor_multiplicative:
      return 2;
  }
  return 0;
}

std::vector<double> evaluate(const ModelId& model, const Matrix& inputs) {
  const std::size_t k = model_arity(model);
  if (inputs.cols() != k) {
    throw InputError(model_name(model) + " expects " + std::to_string(k) + " inputs, got " +
                     std::to_string(inputs.cols()));
  }
  std::vector<double> y(inputs.rows());
  for (std::size_t r = 0; r < inputs.rows(); ++r) {
    const auto x = inputs.row(r);
    switch (model.kind) {
      case ModelKind::toy_portfolio:
        y[r] = x[1] * x[0] + x[3] * x[2] + x[5] * x[4];
        break;
      case ModelKind::ishigami: {
        const double s1 = std::sin(x[0]);
        const double s2 = std::sin(x[1]);
        const double x3sq = x[2] * x[2];
        y[r] = s1 + model.a * s2 * s2 + model.b * x3sq * x3sq * s1;
        break;
      }
      case ModelKind::two_factor_additive:
        y[r] = x[0] + x[1];
        break;
      case ModelKind::two_factor_multiplicative:
        y[r] = x[0] * x[1];
        break;
      case ModelKind::nested_interaction:
        y[r] = x[1] < kNestedThreshold
                   ? x[0]
                   : (x[0] + kNestedSlope * (x[1] - kNestedThreshold)) * x[2];
        break;
    }
  }
  return y;
}

std::vector<InputSpec> toy_default_specs(ToyLaw law) {
  struct Row {
    const char* name;
    double mean;
    double sd;
  };
  // Column order P_s, C_s, P_t, C_t, P_j, C_j.
  constexpr Row rows[] = {{"P_s", 0.0, 4.0},     {"C_s", 250.0, 200.0}, {"P_t", 0.0, 2.0},
                          {"C_t", 400.0, 300.0}, {"P_j", 0.0, 1.0},     {"C_j", 500.0, 400.0}};
  std::vector<InputSpec> specs;
  for (const Row& r : rows) {
    InputSpec s{r.name};
    s.distribution = law == ToyLaw::normal
                         ? MarginalDistribution::normal(r.mean, r.sd)
                         : MarginalDistribution::uniform(r.mean - 2.0 * r.sd, r.mean + 2.0 * r.sd);
    specs.push_back(std::move(s));
  }
  return specs;
}

std::vector<InputSpec> default_specs(const ModelId& model, ToyLaw law) {
  using std::numbers::pi;
  switch (model.kind) {
    case ModelKind::toy_portfolio:
      return toy_default_specs(law);
    case ModelKind::ishigami:
      return {{"x1", MarginalDistribution::uniform(-pi, pi)},
              {"x2", MarginalDistribution::uniform(-pi, pi)},
              {"x3", MarginalDistribution::uniform(-pi, pi)}};
    case ModelKind::two_factor_additive:
    case ModelKind::two_factor_multiplicative:
      return {{"A", MarginalDistribution::uniform(0.0, 5.0)},
              {"B", MarginalDistribution::uniform(0.0, 5.0)}};
    case ModelKind::nested_interaction:
      return {{"A", MarginalDistribution::uniform(-1.0, 1.0)},
              {"B", MarginalDistribution::uniform(0.0, 1.0)},
              {"C", MarginalDistribution::uniform(-1.0, 1.0)}};
  }
  throw InputError("default_specs: unknown model");
}

IshigamiIndices ishigami_analytic_indices(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("ishigami parameters must be finite");
  }
  using std::numbers::pi;
  const double pi4 = pi * pi * pi * pi;
  const double pi8 = pi4 * pi4;
  const double g = 1.0 + b * pi4 / 5.0;
  const double v1 = 0.5 * g * g;
  const double v2 = a * a / 8.0;
  const double v13 = 8.0 * b * b * pi8 / 225.0;
  const double v = v1 + v2 + v13;
  if (!(v > 0.0) || !std::isfinite(v)) throw NumericError("ishigami: zero output variance");
  return {v1 / v, v2 / v, 0.0, v13 / v, v};
}

std::uint64_t dependence_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
}

Dataset sample_model(const ModelId& model, const std::vector<InputSpec>& specs,
                     const SamplingPlan& plan, std::span<const DependencePlan> dependence) {
  if (specs.size() != model_arity(model)) {
    throw InputError(model_name(model) + " takes " + std::to_string(model_arity(model)) +
                     " inputs, " + std::to_string(specs.size()) + " specs given");
  }
  Matrix x = transform_marginals(unit_points(plan, specs.size()), specs);
  for (std::size_t i = 0; i < dependence.size(); ++i) {
    x = apply_dependence(x, specs, dependence[i], dependence_seed(plan.seed, i));
  }
  std::vector<double> y = evaluate(model, x);
  return Dataset(specs, x, std::move(y));
}

}  // namespace binsa
