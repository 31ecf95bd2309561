#include "binsa/io/report.hpp"

#include <fstream>
#include <ostream>

#include "binsa/binning.hpp"
#include "binsa/io/csv.hpp"

#ifndef BINSA_VERSION
#define BINSA_VERSION "0.0.0"
#endif

namespace binsa::io {
namespace {

Json matrix_entries(const std::vector<std::string>& names, const SymmetricMatrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      arr.push_back({{"a", names[i]}, {"b", names[j]}, {"value", m(i, j)}});
    }
  }
  return arr;
}

Json named(const std::vector<std::string>& names, const std::vector<double>& v) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) obj[names[i]] = v[i];
  return obj;
}

}  // namespace

std::string_view tool_version() { return BINSA_VERSION; }

Json metadata_json(const RunMetadata& meta) {
  Json j = {{"tool", "binsa"},
            {"version", std::string(tool_version())},
            {"command", meta.command},
            {"source", meta.source},
            {"seed", meta.seed},
            {"n", meta.n}};
  if (!meta.sampler.empty()) j["sampler"] = meta.sampler;
  for (const auto& [key, value] : meta.extra.items()) j[key] = value;
  return j;
}

Json report_json(const SensitivityReport& r) {
  return {{"inputs", r.names},
          {"n_bins_first", r.n_bins_first},
          {"n_bins_second_per_dim", r.n_bins_second_per_dim},
          {"var_y", r.var_y},
          {"first_order", named(r.names, r.first_order)},
          {"second_order", matrix_entries(r.names, r.second_order)},
          {"combined", named(r.names, r.combined)},
          {"conservation_sum", conservation_check(r)},
          {"warnings", r.warnings}};
}

Json oracle_json(const SobolEstimate& e) {
  return {{"inputs", e.names},
          {"evaluations", e.evaluations},
          {"variance", e.variance},
          {"first_order", named(e.names, e.first_order)},
          {"second_order", matrix_entries(e.names, e.second_order)},
          {"closed_second_order", matrix_entries(e.names, e.closed_second)}};
}

Json decomposition_json(const Decomposition& d) {
  Json states = Json::array();
  for (const StateDefinition& def : d.states) {
    Json list = Json::array();
    for (const State& s : def.states) {
      Json st = {{"label", s.label}};
      if (def.categorical) {
        st["levels"] = s.levels;
      } else {
        st["min"] = s.min;
        st["max"] = s.max;
      }
      list.push_back(std::move(st));
    }
    states.push_back({{"input", def.name}, {"states", std::move(list)}});
  }
  Json scenarios = Json::array();
  for (const Scenario& s : d.scenarios) {
    Json row = {{"scenario", "sc" + std::to_string(s.id)},
                {"states", s.state_labels},
                {"color", s.color},
                {"count", s.count},
                {"probability", s.probability}};
    if (s.stats) {
      row["min"] = s.stats->min;
      row["mean"] = s.stats->mean;
      row["max"] = s.stats->max;
    } else {
      row["min"] = nullptr;
      row["mean"] = nullptr;
      row["max"] = nullptr;
    }
    scenarios.push_back(std::move(row));
  }
  return {{"states", std::move(states)},
          {"scenarios", std::move(scenarios)},
          {"probability_total", d.probability_total()},
          {"histogram", {{"edges", d.histogram.edges}, {"counts", d.histogram.counts}}}};
}

Json bundle_json(const ReportBundle& b) {
  Json j = {{"schema_version", kSchemaVersion}, {"metadata", metadata_json(b.meta)}};
  if (b.report) j["binning"] = report_json(*b.report);
  if (b.oracle) j["oracle"] = oracle_json(*b.oracle);
  if (b.decomposition) j["simdec"] = decomposition_json(*b.decomposition);
  return j;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write '" + path + "'");
  return os;
}

void write_json(const std::string& path, const Json& j) {
  auto os = open_output(path);
  os << j.dump(2) << '\n';
}

void write_indices_csv(std::ostream& os, const SensitivityReport& r) {
  os << "input,first_order";
  for (const auto& n : r.names) os << ',' << n;
  os << ",combined\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    os << r.names[i] << ',' << format_number(r.first_order[i]);
    for (std::size_t j = 0; j < r.size(); ++j) {
      os << ',';
      if (j > i) os << format_number(r.second_order(i, j));
    }
    os << ',' << format_number(r.combined[i]) << '\n';
  }
}

void write_scenarios_csv(std::ostream& os, const Decomposition& d) {
  os << "color,scenario";
  for (const auto& def : d.states) os << ',' << def.name;
  os << ",min,mean,max,probability\n";
  for (const Scenario& s : d.scenarios) {
    os << s.color << ",sc" << s.id;
    for (const auto& label : s.state_labels) os << ',' << label;
    if (s.stats) {
      os << ',' << format_number(s.stats->min) << ',' << format_number(s.stats->mean) << ','
         << format_number(s.stats->max);
    } else {
      os << ",,,";
    }
    os << ',' << format_number(s.probability) << '\n';
  }
}

void write_histogram_csv(std::ostream& os, const Decomposition& d) {
  const Histogram& h = d.histogram;
  os << "bin_lo,bin_hi";
  for (const Scenario& s : d.scenarios) os << ",sc" << s.id;
  os << ",total\n";
  const auto total = h.total();
  for (std::size_t b = 0; b + 1 < h.edges.size(); ++b) {
    os << format_number(h.edges[b]) << ',' << format_number(h.edges[b + 1]);
    for (const auto& row : h.counts) os << ',' << row[b];
    os << ',' << total[b] << '\n';
  }
}

}  // namespace binsa::io
