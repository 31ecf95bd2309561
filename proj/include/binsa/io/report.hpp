#pragma once

// JSON and CSV emission of analysis results.

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "binsa/core.hpp"
#include "binsa/simdec.hpp"
#include "binsa/sobol_oracle.hpp"

namespace binsa::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string_view tool_version();

/// Everything needed to rerun a command and get the same bytes.
struct RunMetadata {
  std::string command;
  std::string source;   // model name or dataset path
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string sampler;  // empty for external datasets
  Json extra = Json::object();
};

struct ReportBundle {
  RunMetadata meta;
  std::optional<SensitivityReport> report;
  std::optional<SobolEstimate> oracle;
  std::optional<Decomposition> decomposition;
};

Json metadata_json(const RunMetadata& meta);
Json report_json(const SensitivityReport& report);
Json oracle_json(const SobolEstimate& est);
Json decomposition_json(const Decomposition& d);
/// schema_version, metadata, then whichever parts are present.
Json bundle_json(const ReportBundle& bundle);

/// Pretty-printed with a trailing newline.
void write_json(const std::string& path, const Json& j);

/// Rows: input, first-order index, the upper triangle of second-order
/// indices (one column per input), combined index.
void write_indices_csv(std::ostream& os, const SensitivityReport& report);

/// color, scenario, one state column per selected input, min, mean, max,
/// probability. Empty scenarios leave the statistics blank.
void write_scenarios_csv(std::ostream& os, const Decomposition& d);

/// bin_lo, bin_hi, one count column per scenario, total.
void write_histogram_csv(std::ostream& os, const Decomposition& d);

/// Opens `path` for writing or throws InputError.
std::ofstream open_output(const std::string& path);

}  // namespace binsa::io
