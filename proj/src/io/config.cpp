#include "binsa/io/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>

namespace binsa::io {
namespace {

void allow_keys(const Json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw InputError("unknown key '" + key + "' in " + where);
    }
  }
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(where + ": missing or invalid '" + key + "'");
  }
}

template <class T>
void maybe(const Json& j, const char* key, T& out, const std::string& where) {
  if (j.contains(key)) out = get<T>(j, key, where);
}

MarginalDistribution parse_distribution(const Json& j, const std::string& where) {
  const auto kind = get<std::string>(j, "distribution", where);
  if (kind == "uniform") {
    return MarginalDistribution::uniform(get<double>(j, "lo", where), get<double>(j, "hi", where));
  }
  if (kind == "normal") {
    return MarginalDistribution::normal(get<double>(j, "mean", where), get<double>(j, "sd", where));
  }
  if (kind == "categorical") {
    return MarginalDistribution::categorical(get<std::vector<std::string>>(j, "labels", where),
                                             get<std::vector<double>>(j, "probabilities", where));
  }
  throw InputError(where + ": unknown distribution '" + kind + "'");
}

DependenceKind parse_kind(const std::string& s) {
  if (s == "copula") return DependenceKind::copula;
  if (s == "equal_portion") return DependenceKind::equal_portion;
  throw InputError("unknown dependence kind '" + s + "'");
}

OracleSampler parse_oracle_sampler(const std::string& s) {
  if (s == "qmc") return OracleSampler::qmc;
  if (s == "mc") return OracleSampler::mc;
  throw InputError("oracle sampler must be mc or qmc");
}

}  // namespace

void StudyConfig::validate() const {
  if (model.has_value() == dataset.has_value()) {
    throw InputError("configure exactly one of a model or a dataset path");
  }
  if (model && !inputs.empty() && inputs.size() != model_arity(*model)) {
    throw InputError(model_name(*model) + " takes " + std::to_string(model_arity(*model)) + " inputs");
  }
}

std::vector<InputSpec> StudyConfig::specs() const {
  if (!inputs.empty()) return inputs;
  if (model) return default_specs(*model, toy_law);
  return {};
}

StudyConfig parse_config(const Json& j) {
  allow_keys(j, {"model", "dataset", "ishigami", "toy_law", "inputs", "sampling", "seed", "dependence",
                 "binning", "simdec", "oracle", "sweep", "out"},
             "config");
  StudyConfig c;
  if (j.contains("model")) c.model = parse_model(get<std::string>(j, "model", "config"));
  if (j.contains("dataset")) c.dataset = get<std::string>(j, "dataset", "config");
  if (j.contains("ishigami")) {
    const Json& p = j["ishigami"];
    allow_keys(p, {"a", "b"}, "ishigami");
    if (!c.model || c.model->kind != ModelKind::ishigami) {
      throw InputError("'ishigami' parameters given for another model");
    }
    double a = c.model->a, b = c.model->b;
    maybe(p, "a", a, "ishigami");
    maybe(p, "b", b, "ishigami");
    c.model = ModelId::ishigami(a, b);
  }
  if (j.contains("toy_law")) {
    const auto law = get<std::string>(j, "toy_law", "config");
    if (law == "normal") c.toy_law = ToyLaw::normal;
    else if (law == "uniform") c.toy_law = ToyLaw::uniform;
    else throw InputError("toy_law must be normal or uniform");
  }
  if (j.contains("inputs")) {
    for (const Json& in : j["inputs"]) {
      allow_keys(in, {"name", "distribution", "lo", "hi", "mean", "sd", "labels", "probabilities", "unit"},
                 "input");
      const auto name = get<std::string>(in, "name", "input");
      InputSpec s{name, parse_distribution(in, "input '" + name + "'")};
      maybe(in, "unit", s.unit, "input");
      c.inputs.push_back(std::move(s));
    }
    validate_specs(c.inputs);
  }
  if (j.contains("sampling")) {
    const Json& s = j["sampling"];
    allow_keys(s, {"method", "n", "seed", "scramble"}, "sampling");
    if (s.contains("method")) c.sampling.method = parse_sampling_method(get<std::string>(s, "method", "sampling"));
    maybe(s, "n", c.sampling.n, "sampling");
    maybe(s, "seed", c.sampling.seed, "sampling");
    maybe(s, "scramble", c.sampling.scramble, "sampling");
  }
  maybe(j, "seed", c.sampling.seed, "config");
  if (j.contains("dependence")) {
    for (const Json& d : j["dependence"]) {
      allow_keys(d, {"kind", "a", "b", "rho", "fraction", "negative"}, "dependence");
      NamedDependence nd;
      nd.kind = parse_kind(get<std::string>(d, "kind", "dependence"));
      nd.a = get<std::string>(d, "a", "dependence");
      nd.b = get<std::string>(d, "b", "dependence");
      maybe(d, "rho", nd.rho, "dependence");
      maybe(d, "fraction", nd.fraction, "dependence");
      maybe(d, "negative", nd.negative, "dependence");
      c.dependence.push_back(std::move(nd));
    }
  }
  if (j.contains("binning")) {
    const Json& b = j["binning"];
    allow_keys(b, {"n_bins_first", "n_bins_second_per_dim", "marginals", "threads"}, "binning");
    if (b.contains("n_bins_first")) c.binning.n_bins_first = get<int>(b, "n_bins_first", "binning");
    if (b.contains("n_bins_second_per_dim")) {
      c.binning.n_bins_second_per_dim = get<int>(b, "n_bins_second_per_dim", "binning");
    }
    if (b.contains("marginals")) {
      const auto m = get<std::string>(b, "marginals", "binning");
      if (m == "recompute") c.binning.marginals = BinningConfig::SecondOrderMarginals::recompute;
      else if (m == "reuse_first_order") c.binning.marginals = BinningConfig::SecondOrderMarginals::reuse_first_order;
      else throw InputError("binning.marginals must be recompute or reuse_first_order");
    }
    maybe(b, "threads", c.binning.threads, "binning");
  }
  if (j.contains("simdec")) {
    const Json& s = j["simdec"];
    allow_keys(s, {"max_inputs", "threshold", "output_bins", "states_file"}, "simdec");
    maybe(s, "max_inputs", c.simdec.max_inputs, "simdec");
    maybe(s, "threshold", c.simdec.threshold, "simdec");
    maybe(s, "output_bins", c.simdec.output_bins, "simdec");
    if (s.contains("states_file")) c.simdec.states_file = get<std::string>(s, "states_file", "simdec");
  }
  if (j.contains("oracle")) {
    const Json& o = j["oracle"];
    allow_keys(o, {"n", "sampler"}, "oracle");
    maybe(o, "n", c.oracle.n, "oracle");
    if (o.contains("sampler")) c.oracle.sampler = parse_oracle_sampler(get<std::string>(o, "sampler", "oracle"));
  }
  if (j.contains("sweep")) {
    const Json& s = j["sweep"];
    allow_keys(s, {"n", "grid", "kinds", "models"}, "sweep");
    maybe(s, "n", c.sweep.n, "sweep");
    maybe(s, "grid", c.sweep.grid, "sweep");
    if (s.contains("kinds")) {
      c.sweep.kinds.clear();
      for (const auto& k : get<std::vector<std::string>>(s, "kinds", "sweep")) c.sweep.kinds.push_back(parse_kind(k));
    }
    if (s.contains("models")) {
      c.sweep.models.clear();
      for (const auto& m : get<std::vector<std::string>>(s, "models", "sweep")) c.sweep.models.push_back(parse_model(m));
    }
  }
  maybe(j, "out", c.out_dir, "config");
  if (c.model && c.dataset) throw InputError("configure exactly one of a model or a dataset path");
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

StudyConfig load_config(const std::string& path) { return parse_config(read_json_file(path)); }

std::vector<DependencePlan> resolve_dependence(const std::vector<NamedDependence>& deps,
                                               const std::vector<InputSpec>& specs) {
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (specs[i].name == name) return i;
    }
    throw InputError("dependence refers to unknown input '" + name + "'");
  };
  std::vector<DependencePlan> out;
  for (const NamedDependence& d : deps) {
    const std::size_t a = index(d.a);
    const std::size_t b = index(d.b);
    DependencePlan p = d.kind == DependenceKind::copula
                           ? DependencePlan::copula(a, b, d.rho)
                           : DependencePlan::equal_portion(a, b, d.fraction, d.negative);
    p.validate(specs.size());
    out.push_back(p);
  }
  return out;
}

std::vector<StateDefinition> parse_states(const Json& j, const Dataset& data) {
  allow_keys(j, {"states"}, "states file");
  if (!j.contains("states") || !j["states"].is_array() || j["states"].empty()) {
    throw InputError("states file needs a non-empty 'states' array");
  }
  std::vector<StateDefinition> defs;
  for (const Json& entry : j["states"]) {
    allow_keys(entry, {"input", "states"}, "states entry");
    const auto name = get<std::string>(entry, "input", "states entry");
    const auto col = data.find(name);
    if (!col) throw InputError("states file refers to unknown column '" + name + "'");
    const InputSpec& spec = data.spec(*col);
    StateDefinition def{*col, name, spec.distribution.is_categorical(), {}};
    if (!entry.contains("states") || !entry["states"].is_array()) {
      throw InputError("states of '" + name + "' must be an array");
    }
    for (const Json& s : entry["states"]) {
      const std::string where = "state of '" + name + "'";
      State st;
      st.label = get<std::string>(s, "label", where);
      if (def.categorical) {
        allow_keys(s, {"label", "levels"}, where);
        const auto& labels = spec.distribution.labels();
        for (const auto& lv : get<std::vector<std::string>>(s, "levels", where)) {
          const auto it = std::find(labels.begin(), labels.end(), lv);
          if (it == labels.end()) throw InputError(where + " names unknown level '" + lv + "'");
          st.levels.push_back(static_cast<std::size_t>(it - labels.begin()));
        }
      } else {
        allow_keys(s, {"label", "min", "max"}, where);
        st.min = get<double>(s, "min", where);
        st.max = get<double>(s, "max", where);
      }
      def.states.push_back(std::move(st));
    }
    defs.push_back(std::move(def));
  }
  validate_states(data, defs);
  return defs;
}

std::vector<StateDefinition> load_states(const std::string& path, const Dataset& data) {
  return parse_states(read_json_file(path), data);
}

}  // namespace binsa::io
