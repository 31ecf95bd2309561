#pragma once

// Simulation decomposition: split the output distribution into scenarios
// formed by state combinations of the most influential inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binsa/core.hpp"

namespace binsa {

/// Indices of the inputs to decompose by, most influential first: the
/// shortest prefix (by descending combined index) reaching cum_threshold,
/// capped at max_inputs. Throws NumericError("nothing to decompose") when
/// no combined index is positive.
std::vector<std::size_t> select_inputs(const SensitivityReport& report,
                                       std::size_t max_inputs = 3, double cum_threshold = 0.8);

/// A numeric state covers [min, max), except the last state of an input
/// which also includes max. A categorical state is a set of level indices.
struct State {
  std::string label;
  double min = 0.0;
  double max = 0.0;
  std::vector<std::size_t> levels;

  bool operator==(const State&) const = default;
};

struct StateDefinition {
  std::size_t input = 0;
  std::string name;
  bool categorical = false;
  std::vector<State> states;

  bool operator==(const StateDefinition&) const = default;
};

/// Three equal-width states (low/medium/high) for the first selected input,
/// two (low/high) for the others; one state per level for categorical inputs.
/// Throws InputError("degenerate input") for a constant numeric column.
std::vector<StateDefinition> default_states(const Dataset& data,
                                            std::span<const std::size_t> selected);

/// Checks that numeric states are contiguous, ordered and cover the observed
/// range, and that categorical states partition the levels.
void validate_states(const Dataset& data, std::span<const StateDefinition> states);

struct ScenarioStats {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;

  bool operator==(const ScenarioStats&) const = default;
};

struct Scenario {
  std::size_t id = 0;                     // 1-based, "sc<id>"
  std::vector<std::size_t> state_index;   // one per selected input
  std::vector<std::string> state_labels;
  std::string color;                      // "#rrggbb"
  std::int64_t count = 0;
  double probability = 0.0;               // count / N
  std::optional<ScenarioStats> stats;     // empty when no row falls in the scenario

  bool operator==(const Scenario&) const = default;
};

struct Histogram {
  std::vector<double> edges;                       // n_bins + 1
  std::vector<std::vector<std::int64_t>> counts;   // [scenario][bin]

  std::vector<std::int64_t> total() const;
  bool operator==(const Histogram&) const = default;
};

struct Decomposition {
  std::vector<std::size_t> selected;
  std::vector<StateDefinition> states;
  std::vector<Scenario> scenarios;         // lexicographic, first input slowest
  std::vector<std::size_t> row_scenario;   // 0-based scenario position per dataset row
  Histogram histogram;
  std::int64_t n_rows = 0;

  /// Sum of the scenario counts divided by N; exactly 1 for a partition.
  double probability_total() const;
  bool operator==(const Decomposition&) const = default;
};

inline constexpr std::size_t kPaletteSize = 10;

Decomposition decompose(const Dataset& data, std::vector<StateDefinition> states,
                        int n_output_bins = 100);

/// One hue per state of the first selected input (blue, olive-yellow, green,
/// red, purple, orange, teal, brown, pink, grey); scenarios sharing a hue get
/// increasing HSL lightness from 0.30 to 0.85 in scenario order. A hue used by
/// a single scenario is drawn fully saturated at lightness 0.5.
/// Throws InputError("palette exhausted") beyond kPaletteSize top states.
std::vector<std::string> assign_colors(std::span<const Scenario> scenarios);

}  // namespace binsa
