#include <algorithm>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "binsa/benchmarks.hpp"
#include "binsa/sampling.hpp"
#include "binsa/stats.hpp"

using namespace binsa;
using std::numbers::pi;

namespace {

double eval1(const ModelId& m, std::vector<double> x) {
  Matrix in(1, x.size());
  for (std::size_t c = 0; c < x.size(); ++c) in(0, c) = x[c];
  return evaluate(m, in)[0];
}

}  // namespace

TEST_SUITE("benchmarks") {

TEST_CASE("model formulas at fixed points") {
  CHECK(eval1(ModelId::toy_portfolio(), {2, 10, 3, 100, -1, 7}) == 2 * 10 + 3 * 100 - 7);
  CHECK(eval1(ModelId::additive(), {1.5, 2.25}) == 3.75);
  CHECK(eval1(ModelId::multiplicative(), {1.5, 2}) == 3.0);
  const double x1 = 0.3, x2 = -1.1, x3 = 2.0;
  CHECK(eval1(ModelId::ishigami(), {x1, x2, x3}) ==
        doctest::Approx(std::sin(x1) + 7 * std::sin(x2) * std::sin(x2) + 0.1 * 16 * std::sin(x1)));
  CHECK(eval1(ModelId::nested_interaction(), {0.4, 0.2, -0.9}) == 0.4);
  CHECK(eval1(ModelId::nested_interaction(), {0.4, 0.8, -0.5}) == doctest::Approx((0.4 + 0.9) * -0.5));
  CHECK_THROWS_AS(evaluate(ModelId::ishigami(), Matrix(2, 2)), InputError);
}

TEST_CASE("model names round-trip") {
  for (const ModelId& m : {ModelId::toy_portfolio(), ModelId::ishigami(), ModelId::additive(),
                           ModelId::multiplicative(), ModelId::nested_interaction()}) {
    CHECK(parse_model(model_name(m)) == m);
    CHECK(default_specs(m).size() == model_arity(m));
  }
  CHECK_THROWS_AS(parse_model("borehole"), InputError);
  CHECK_THROWS_AS(ModelId::ishigami(NAN, 0.1), InputError);
}

TEST_CASE("toy model laws") {
  const auto n = toy_default_specs(ToyLaw::normal);
  REQUIRE(n.size() == 6);
  CHECK(n[0].name == "P_s");
  CHECK(n[1].name == "C_s");
  CHECK(n[0].distribution.sd() == 4.0);
  CHECK(n[5].distribution.mean() == 500.0);
  const auto u = toy_default_specs(ToyLaw::uniform);
  CHECK(u[1].distribution.lo() == 250.0 - 400.0);
  CHECK(u[1].distribution.hi() == 250.0 + 400.0);
}

TEST_CASE("Ishigami analytic indices") {
  const auto s = ishigami_analytic_indices(7, 0.1);
  CHECK(s.s1 == doctest::Approx(0.3139).epsilon(1e-3));
  CHECK(s.s2 == doctest::Approx(0.4424).epsilon(1e-3));
  CHECK(s.s3 == 0.0);
  CHECK(s.s13 == doctest::Approx(0.2437).epsilon(1e-3));
  CHECK(s.s1 + s.s2 + s.s13 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(ishigami_analytic_indices(INFINITY, 0.1), InputError);
  // b = 0 leaves an additive model with no interaction.
  const auto z = ishigami_analytic_indices(7, 0.0);
  CHECK(z.s13 == 0.0);
  CHECK(z.s1 + z.s2 == doctest::Approx(1.0));
}

TEST_CASE("Ishigami closed forms agree with direct integration") {
  // Nested quasi-random integration: 1024 outer (x1, x3) points, each with a
  // 1024-point inner mean over x2.
  const ModelId m = ModelId::ishigami();
  const auto specs = default_specs(m);
  const Matrix outer = transform_marginals(sobol_points(2, 1024, true, 3), std::vector<InputSpec>{specs[0], specs[2]});
  const Matrix inner = sobol_points(1, 1024, true, 4);
  std::vector<double> cond13(1024), cond1(1024), all;
  all.reserve(1 << 20);
  for (std::size_t o = 0; o < 1024; ++o) {
    Matrix x(1024, 3);
    for (std::size_t i = 0; i < 1024; ++i) {
      x(i, 0) = outer(o, 0);
      x(i, 1) = -pi + 2 * pi * inner(i, 0);
      x(i, 2) = outer(o, 1);
    }
    const auto y = evaluate(m, x);
    cond13[o] = mean(y);
    all.insert(all.end(), y.begin(), y.end());
    // E[Y | x1] needs x3 integrated out too; reuse the inner points for it.
    for (std::size_t i = 0; i < 1024; ++i) x(i, 2) = -pi + 2 * pi * inner(i, 0);
    for (std::size_t i = 0; i < 1024; ++i) x(i, 1) = -pi + 2 * pi * inner((i * 7 + 3) % 1024, 0);
    cond1[o] = mean(evaluate(m, x));
  }
  const auto ref = ishigami_analytic_indices(7, 0.1);
  const double v = variance(all);
  CHECK(v == doctest::Approx(ref.variance).epsilon(0.01));
  const double v1 = variance(cond1);
  const double v13 = variance(cond13);
  CHECK(v1 / v == doctest::Approx(ref.s1).epsilon(0.02));
  CHECK((v13 - v1) / v == doctest::Approx(ref.s13).epsilon(0.03));
}

TEST_CASE("sample_model is deterministic and applies dependence") {
  const ModelId m = ModelId::additive();
  const SamplingPlan plan{SamplingMethod::qmc, 4096, 12};
  const Dataset a = sample_model(m, default_specs(m), plan);
  const Dataset b = sample_model(m, default_specs(m), plan);
  CHECK(a == b);
  const DependencePlan dep = DependencePlan::copula(0, 1, 0.75);
  const Dataset c = sample_model(m, default_specs(m), plan, std::span(&dep, 1));
  CHECK(std::ranges::equal(c.column(0), a.column(0)));
  CHECK(pearson(c.column(0), c.column(1)) == doctest::Approx(0.73).epsilon(0.03));
  CHECK_THROWS_AS(sample_model(m, default_specs(ModelId::ishigami()), plan), InputError);
}

}
