// binsa: sensitivity analysis by binning, from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binsa/benchmarks.hpp"
#include "binsa/binning.hpp"
#include "binsa/io/config.hpp"
#include "binsa/io/csv.hpp"
#include "binsa/io/report.hpp"
#include "binsa/io/svg.hpp"
#include "binsa/simdec.hpp"
#include "binsa/sobol_oracle.hpp"
#include "binsa/stats.hpp"

namespace fs = std::filesystem;
using namespace binsa;
using io::Json;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<std::string> sampler;
  std::optional<int> bins;
  std::optional<std::string> out;
  std::optional<std::string> states;
  std::optional<std::string> model;
  std::optional<unsigned> threads;
  std::string dataset;  // positional
  bool json_errors = false;
};

void add_common(CLI::App* cmd, Flags& f, bool with_dataset) {
  cmd->add_option("--config", f.config, "Study configuration (JSON)");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--n", f.n, "Sample size");
  cmd->add_option("--sampler", f.sampler, "mc, qmc or ffd");
  cmd->add_option("--bins", f.bins, "First-order bin count (default: interpolated rule)");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--model", f.model,
                  "toy_portfolio, ishigami, additive, multiplicative or nested_interaction");
  cmd->add_option("--threads", f.threads, "Worker threads for the estimator (0 = all cores)");
  cmd->add_flag("--json-errors", f.json_errors, "Report errors as JSON on stderr");
  if (with_dataset) cmd->add_option("dataset", f.dataset, "Dataset CSV (instead of a model)");
}

io::StudyConfig merged_config(const Flags& f) {
  io::StudyConfig c = f.config.empty() ? io::StudyConfig{} : io::load_config(f.config);
  if (f.model) {
    c.model = parse_model(*f.model);
    c.dataset.reset();
    c.inputs.clear();
  }
  if (!f.dataset.empty()) {
    c.dataset = f.dataset;
    c.model.reset();
  }
  if (f.seed) c.sampling.seed = *f.seed;
  if (f.n) c.sampling.n = *f.n;
  if (f.sampler) c.sampling.method = parse_sampling_method(*f.sampler);
  if (f.bins) c.binning.n_bins_first = *f.bins;
  if (f.threads) c.binning.threads = *f.threads;
  if (f.out) c.out_dir = *f.out;
  if (f.states) c.simdec.states_file = *f.states;
  return c;
}

io::RunMetadata metadata(const std::string& command, const io::StudyConfig& c,
                         const Dataset& data) {
  io::RunMetadata m;
  m.command = command;
  m.n = data.n_rows();
  if (c.model) {
    m.source = model_name(*c.model);
    m.seed = c.sampling.seed;
    m.sampler = std::string(to_string(c.sampling.method));
    if (c.model->kind == ModelKind::ishigami) m.extra["ishigami"] = {{"a", c.model->a}, {"b", c.model->b}};
    if (c.model->kind == ModelKind::toy_portfolio && c.inputs.empty()) {
      m.extra["toy_law"] = c.toy_law == ToyLaw::normal ? "normal" : "uniform";
    }
    if (c.sampling.method == SamplingMethod::qmc) m.extra["scramble"] = c.sampling.scramble;
    Json deps = Json::array();
    for (const auto& d : c.dependence) {
      deps.push_back({{"kind", std::string(to_string(d.kind))}, {"a", d.a}, {"b", d.b},
                      {"rho", d.rho}, {"fraction", d.fraction}, {"negative", d.negative}});
    }
    if (!deps.empty()) m.extra["dependence"] = deps;
  } else {
    m.source = *c.dataset;
  }
  if (c.binning.n_bins_first) m.extra["bins_override"] = *c.binning.n_bins_first;
  if (c.binning.n_bins_second_per_dim) m.extra["bins_second_override"] = *c.binning.n_bins_second_per_dim;
  if (c.binning.marginals == BinningConfig::SecondOrderMarginals::reuse_first_order) {
    m.extra["marginals"] = "reuse_first_order";
  }
  return m;
}

Dataset load_dataset(const io::StudyConfig& c) {
  c.validate();
  if (c.dataset) return io::read_dataset(*c.dataset, c.inputs);
  const auto specs = c.specs();
  const auto deps = io::resolve_dependence(c.dependence, specs);
  return sample_model(*c.model, specs, c.sampling, deps);
}

fs::path out_dir(const io::StudyConfig& c) {
  fs::path dir(c.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  auto os = io::open_output(path.string());
  os << text;
}

std::string with_note(std::string svg, const io::RunMetadata& m) {
  const std::size_t eol = svg.find('\n');
  const std::string desc = "<desc>binsa " + std::string(io::tool_version()) + "; source " +
                           m.source + "; seed " + std::to_string(m.seed) + "; n " +
                           std::to_string(m.n) + "</desc>\n";
  return svg.insert(eol + 1, desc);
}

void print_report(const SensitivityReport& r) {
  std::cout << "input         first    combined\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %7.4f %9.4f\n", r.names[i].c_str(), r.first_order[i],
                  r.combined[i]);
    std::cout << line;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      char line[160];
      std::snprintf(line, sizeof line, "S[%s,%s] = %.4f\n", r.names[i].c_str(), r.names[j].c_str(),
                    r.second_order(i, j));
      std::cout << line;
    }
  }
  std::cout << "sum of indices: " << conservation_check(r) << '\n';
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_sample(const Flags& f) {
  const io::StudyConfig c = merged_config(f);
  if (!c.model) throw InputError("sample needs a model (--model or config 'model')");
  const Dataset data = load_dataset(c);
  const fs::path dir = out_dir(c);
  io::write_dataset((dir / "dataset.csv").string(), data);
  io::write_json((dir / "dataset.meta.json").string(),
                 {{"schema_version", io::kSchemaVersion}, {"metadata", io::metadata_json(metadata("sample", c, data))}});
  std::cout << "wrote " << (dir / "dataset.csv").string() << " (" << data.n_rows() << " rows)\n";
  return 0;
}

int cmd_analyze(const Flags& f) {
  const io::StudyConfig c = merged_config(f);
  const Dataset data = load_dataset(c);
  const SensitivityReport rep = analyze(data, c.binning);
  const fs::path dir = out_dir(c);
  io::ReportBundle bundle{metadata("analyze", c, data), rep, std::nullopt, std::nullopt};
  io::write_json((dir / "report.json").string(), io::bundle_json(bundle));
  {
    auto os = io::open_output((dir / "indices.csv").string());
    io::write_indices_csv(os, rep);
  }
  write_text(dir / "combined.svg",
             with_note(io::bar_chart_svg(rep.names, rep.combined, "Combined sensitivity indices"),
                       bundle.meta));
  print_report(rep);
  return 0;
}

int cmd_simdec(const Flags& f) {
  const io::StudyConfig c = merged_config(f);
  const Dataset data = load_dataset(c);
  const SensitivityReport rep = analyze(data, c.binning);
  std::vector<StateDefinition> states;
  if (c.simdec.states_file) {
    states = io::load_states(*c.simdec.states_file, data);
  } else {
    const auto selected = select_inputs(rep, c.simdec.max_inputs, c.simdec.threshold);
    states = default_states(data, selected);
  }
  const Decomposition d = decompose(data, std::move(states), c.simdec.output_bins);
  const fs::path dir = out_dir(c);
  io::RunMetadata meta = metadata("simdec", c, data);
  meta.extra["output_bins"] = c.simdec.output_bins;
  if (c.simdec.states_file) meta.extra["states_file"] = *c.simdec.states_file;
  io::ReportBundle bundle{meta, rep, std::nullopt, d};
  io::write_json((dir / "simdec.json").string(), io::bundle_json(bundle));
  {
    auto os = io::open_output((dir / "scenarios.csv").string());
    io::write_scenarios_csv(os, d);
  }
  {
    auto os = io::open_output((dir / "histogram.csv").string());
    io::write_histogram_csv(os, d);
  }
  write_text(dir / "simdec.svg", with_note(io::stacked_histogram_svg(d, "Simulation decomposition"), meta));
  for (const Scenario& s : d.scenarios) {
    std::cout << s.color << " sc" << s.id;
    for (const auto& l : s.state_labels) std::cout << ' ' << l;
    std::cout << "  p=" << s.probability;
    if (s.stats) {
      std::cout << "  min=" << s.stats->min << " mean=" << s.stats->mean << " max=" << s.stats->max;
    } else {
      std::cout << "  (empty)";
    }
    std::cout << '\n';
  }
  return 0;
}

Json delta_rows(const std::vector<std::string>& names, const SensitivityReport& bin,
                const SobolEstimate& orc) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    rows.push_back({{"index", "S_" + names[i]},
                    {"binning", bin.first_order[i]},
                    {"oracle", orc.first_order[i]},
                    {"delta", bin.first_order[i] - orc.first_order[i]}});
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      rows.push_back({{"index", "S_" + names[i] + "," + names[j]},
                      {"binning", bin.second_order(i, j)},
                      {"oracle", orc.second_order(i, j)},
                      {"delta", bin.second_order(i, j) - orc.second_order(i, j)}});
    }
  }
  return rows;
}

int cmd_compare(const Flags& f) {
  io::StudyConfig c = merged_config(f);
  if (!c.model) throw InputError("compare needs a model (--model or config 'model')");
  if (!c.dependence.empty()) throw InputError("oracle requires independent inputs");
  const Dataset data = load_dataset(c);
  const SensitivityReport rep = analyze(data, c.binning);
  const SobolEstimate orc =
      estimate_sobol(*c.model, c.specs(), c.oracle.n, c.sampling.seed, c.oracle.sampler);
  io::RunMetadata meta = metadata("compare", c, data);
  meta.extra["oracle_n"] = c.oracle.n;
  meta.extra["oracle_sampler"] = c.oracle.sampler == OracleSampler::qmc ? "qmc" : "mc";
  io::ReportBundle bundle{meta, rep, orc, std::nullopt};
  Json j = io::bundle_json(bundle);
  j["comparison"] = delta_rows(rep.names, rep, orc);
  if (c.model->kind == ModelKind::ishigami) {
    const auto a = ishigami_analytic_indices(c.model->a, c.model->b);
    j["analytic"] = {{"S_x1", a.s1}, {"S_x2", a.s2}, {"S_x3", a.s3}, {"S_x1,x3", a.s13}, {"variance", a.variance}};
  }
  const fs::path dir = out_dir(c);
  io::write_json((dir / "compare.json").string(), j);
  std::cout << "index          binning    oracle     delta\n";
  for (const auto& row : j["comparison"]) {
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %9.4f %9.4f %9.4f\n",
                  row["index"].get<std::string>().c_str(), row["binning"].get<double>(),
                  row["oracle"].get<double>(), row["delta"].get<double>());
    std::cout << line;
  }
  std::cout << "oracle evaluations: " << orc.evaluations << '\n';
  return 0;
}

int cmd_sweep(const Flags& f) {
  io::StudyConfig c = merged_config(f);
  if (f.n) c.sweep.n = *f.n;
  const fs::path dir = out_dir(c);
  auto os = io::open_output((dir / "sweep.csv").string());
  os << "model,kind,parameter,pearson,spearman,S_A,S_B,S_AB,sum,status\n";
  auto cell = [](std::optional<double> v) { return v ? io::format_number(*v) : std::string(); };
  for (const ModelId& model : c.sweep.models) {
    if (model_arity(model) != 2) throw InputError("sweep-dependence needs a two-factor model");
    const auto specs = default_specs(model);
    for (DependenceKind kind : c.sweep.kinds) {
      for (double g : c.sweep.grid) {
        const DependencePlan plan = kind == DependenceKind::copula
                                        ? DependencePlan::copula(0, 1, g)
                                        : DependencePlan::equal_portion(0, 1, std::abs(g), g < 0);
        SamplingPlan sp = c.sampling;
        sp.n = c.sweep.n;
        const Dataset data = sample_model(model, specs, sp, std::span(&plan, 1));
        std::optional<double> pr, sr, sa, sb, sab, sum;
        std::string status = "ok";
        try {
          pr = pearson(data.column(0), data.column(1));
          sr = spearman(data.column(0), data.column(1));
        } catch (const NumericError&) {
        }
        try {
          const SensitivityReport r = analyze(data, c.binning);
          sa = r.first_order[0];
          sb = r.first_order[1];
          sab = r.second_order(0, 1);
          sum = conservation_check(r);
        } catch (const NumericError&) {
          status = "degenerate";
        }
        os << model_name(model) << ',' << to_string(kind) << ',' << io::format_number(g) << ','
           << cell(pr) << ',' << cell(sr) << ',' << cell(sa) << ',' << cell(sb) << ','
           << cell(sab) << ',' << cell(sum) << ',' << status << '\n';
      }
    }
  }
  io::RunMetadata meta;
  meta.command = "sweep-dependence";
  meta.source = "two-factor models";
  meta.seed = c.sampling.seed;
  meta.n = c.sweep.n;
  meta.sampler = std::string(to_string(c.sampling.method));
  meta.extra["grid"] = c.sweep.grid;
  io::write_json((dir / "sweep.meta.json").string(),
                 {{"schema_version", io::kSchemaVersion}, {"metadata", io::metadata_json(meta)}});
  std::cout << "wrote " << (dir / "sweep.csv").string() << '\n';
  return 0;
}

int fail(const Flags& f, const char* type, const std::string& message, int code) {
  if (f.json_errors) {
    std::cerr << Json{{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}}.dump()
              << '\n';
  } else {
    std::cerr << "binsa: " << message << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-based sensitivity analysis by binning, with simulation decomposition"};
  app.set_version_flag("--version", std::string(io::tool_version()));
  app.require_subcommand(1);
  Flags f;

  auto* sample = app.add_subcommand("sample", "Sample a built-in model and write a dataset CSV");
  add_common(sample, f, false);
  auto* an = app.add_subcommand("analyze", "First- and second-order indices of a dataset");
  add_common(an, f, true);
  auto* sd = app.add_subcommand("simdec", "Decompose the output into scenarios");
  add_common(sd, f, true);
  sd->add_option("--states", f.states, "State definitions (JSON)");
  auto* cmp = app.add_subcommand("compare", "Binning estimator against the pick-freeze oracle");
  add_common(cmp, f, false);
  auto* sw = app.add_subcommand("sweep-dependence", "Indices of two-factor models under dependence");
  add_common(sw, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(f, "usage_error", e.what(), 2);
  }

  try {
    if (sample->parsed()) return cmd_sample(f);
    if (an->parsed()) return cmd_analyze(f);
    if (sd->parsed()) return cmd_simdec(f);
    if (cmp->parsed()) return cmd_compare(f);
    if (sw->parsed()) return cmd_sweep(f);
  } catch (const InputError& e) {
    return fail(f, "input_error", e.what(), 2);
  } catch (const NumericError& e) {
    return fail(f, "numeric_error", e.what(), 1);
  } catch (const std::exception& e) {
    return fail(f, "internal_error", e.what(), 1);
  }
  return 1;
}
