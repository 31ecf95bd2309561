#include "binsa/simdec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "binsa/simd/kernels.hpp"
#include "canonical.hpp"

namespace binsa {
namespace {

struct Hue {
  double h;  // degrees
  double s;
};

// blue, olive-yellow, green, red, purple, orange, teal, brown, pink, grey
constexpr std::array<Hue, kPaletteSize> kPalette = {{
    {210, 0.65}, {55, 0.60}, {120, 0.45}, {0, 0.65}, {275, 0.45},
    {30, 0.85}, {180, 0.55}, {25, 0.45}, {330, 0.60}, {0, 0.0},
}};

std::string hsl_hex(double h, double s, double l) {
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = l - c / 2.0;
  auto byte = [m](double v) {
    return static_cast<unsigned>(std::clamp(std::lround((v + m) * 255.0), 0L, 255L));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(r), byte(g), byte(b));
  return buf;
}

const char* const kThree[] = {"low", "medium", "high"};
const char* const kTwo[] = {"low", "high"};

std::size_t state_of(const StateDefinition& def, double v) {
  if (def.categorical) {
    const auto level = static_cast<std::size_t>(v);
    for (std::size_t s = 0; s < def.states.size(); ++s) {
      const auto& lv = def.states[s].levels;
      if (std::find(lv.begin(), lv.end(), level) != lv.end()) return s;
    }
  } else {
    const std::size_t last = def.states.size() - 1;
    for (std::size_t s = 0; s < last; ++s) {
      if (v < def.states[s].max) return s;
    }
    return last;
  }
  throw InputError("value of '" + def.name + "' matches no state");
}

}  // namespace

std::vector<std::size_t> select_inputs(const SensitivityReport& report, std::size_t max_inputs,
                                       double cum_threshold) {
  if (max_inputs < 1) throw InputError("select_inputs: max_inputs must be at least 1");
  const auto& comb = report.combined;
  for (double c : comb) {
    if (!std::isfinite(c)) throw InputError("select_inputs: non-finite combined index");
  }
  if (std::none_of(comb.begin(), comb.end(), [](double c) { return c > 0.0; })) {
    throw NumericError("nothing to decompose");
  }
  std::vector<std::size_t> order(comb.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return comb[a] > comb[b]; });
  std::vector<std::size_t> out;
  double cum = 0.0;
  for (std::size_t i : order) {
    if (out.size() == max_inputs || comb[i] <= 0.0) break;
    out.push_back(i);
    cum += comb[i];
    if (cum >= cum_threshold) break;
  }
  return out;
}

std::vector<StateDefinition> default_states(const Dataset& data,
                                            std::span<const std::size_t> selected) {
  if (selected.empty()) throw InputError("default_states: no inputs selected");
  std::vector<StateDefinition> defs;
  for (std::size_t pos = 0; pos < selected.size(); ++pos) {
    const std::size_t c = selected[pos];
    if (c >= data.n_inputs()) throw InputError("default_states: input index out of range");
    const InputSpec& spec = data.spec(c);
    StateDefinition def{c, spec.name, spec.distribution.is_categorical(), {}};
    if (def.categorical) {
      const auto& labels = spec.distribution.labels();
      for (std::size_t l = 0; l < labels.size(); ++l) def.states.push_back({labels[l], 0, 0, {l}});
    } else {
      const auto col = data.column(c);
      const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
      const double lo = *mn;
      const double hi = *mx;
      if (!(hi > lo)) throw InputError("degenerate input");
      const std::size_t n = pos == 0 ? 3 : 2;
      const char* const* names = pos == 0 ? kThree : kTwo;
      for (std::size_t s = 0; s < n; ++s) {
        const double a = s == 0 ? lo : lo + (hi - lo) * static_cast<double>(s) / n;
        const double b = s + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(s + 1) / n;
        def.states.push_back({names[s], a, b, {}});
      }
    }
    defs.push_back(std::move(def));
  }
  return defs;
}

void validate_states(const Dataset& data, std::span<const StateDefinition> states) {
  if (states.empty()) throw InputError("no state definitions");
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      if (states[a].input == states[b].input) {
        throw InputError("input '" + states[a].name + "' has two state definitions");
      }
    }
  }
  for (const StateDefinition& def : states) {
    if (def.input >= data.n_inputs()) throw InputError("state definition for an unknown input");
    const InputSpec& spec = data.spec(def.input);
    if (def.categorical != spec.distribution.is_categorical()) {
      throw InputError("states of '" + def.name + "' do not match the input type");
    }
    if (def.states.empty()) throw InputError("input '" + def.name + "' has no states");
    if (def.categorical) {
      std::vector<int> seen(spec.distribution.level_count(), 0);
      for (const State& s : def.states) {
        for (std::size_t l : s.levels) {
          if (l >= seen.size()) throw InputError("state of '" + def.name + "' names an unknown level");
          ++seen[l];
        }
      }
      if (std::any_of(seen.begin(), seen.end(), [](int v) { return v != 1; })) {
        throw InputError("states of '" + def.name + "' must cover every level exactly once");
      }
      continue;
    }
    for (std::size_t s = 0; s < def.states.size(); ++s) {
      const State& st = def.states[s];
      if (!std::isfinite(st.min) || !std::isfinite(st.max) || !(st.min < st.max)) {
        throw InputError("state '" + st.label + "' of '" + def.name + "' needs finite min < max");
      }
      if (s > 0 && def.states[s - 1].max != st.min) {
        throw InputError("states of '" + def.name + "' leave a gap or overlap at '" + st.label + "'");
      }
    }
    const auto col = data.column(def.input);
    const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
    if (*mn < def.states.front().min || *mx > def.states.back().max) {
      throw InputError("states of '" + def.name + "' do not cover the observed range");
    }
  }
}

std::vector<std::int64_t> Histogram::total() const {
  std::vector<std::int64_t> t(edges.empty() ? 0 : edges.size() - 1, 0);
  for (const auto& row : counts) {
    for (std::size_t b = 0; b < row.size(); ++b) t[b] += row[b];
  }
  return t;
}

double Decomposition::probability_total() const {
  std::int64_t total = 0;
  for (const Scenario& s : scenarios) total += s.count;
  return static_cast<double>(total) / static_cast<double>(n_rows);
}

Decomposition decompose(const Dataset& data, std::vector<StateDefinition> states,
                        int n_output_bins) {
  if (n_output_bins < 1) throw InputError("decompose: need at least one output bin");
  validate_states(data, states);

  Decomposition d;
  d.n_rows = static_cast<std::int64_t>(data.n_rows());
  for (const auto& def : states) d.selected.push_back(def.input);

  // Scenario position = mixed-radix number of the state tuple, first input
  // most significant.
  std::vector<std::size_t> radix;
  std::size_t n_scen = 1;
  for (const auto& def : states) {
    radix.push_back(def.states.size());
    n_scen *= def.states.size();
  }
  for (std::size_t s = 0; s < n_scen; ++s) {
    Scenario sc;
    sc.id = s + 1;
    sc.state_index.resize(states.size());
    std::size_t rest = s;
    for (std::size_t p = states.size(); p-- > 0;) {
      sc.state_index[p] = rest % radix[p];
      rest /= radix[p];
    }
    for (std::size_t p = 0; p < states.size(); ++p) {
      sc.state_labels.push_back(states[p].states[sc.state_index[p]].label);
    }
    d.scenarios.push_back(std::move(sc));
  }

  const std::size_t n = data.n_rows();
  d.row_scenario.assign(n, 0);
  for (std::size_t p = 0; p < states.size(); ++p) {
    const auto& col = data.column(states[p].input);
    for (std::size_t r = 0; r < n; ++r) {
      d.row_scenario[r] = d.row_scenario[r] * radix[p] + state_of(states[p], col[r]);
    }
  }

  // Scenario statistics, accumulated in canonical row order.
  const auto& y = data.output();
  const std::vector<std::size_t> order = detail::canonical_order(y);
  std::vector<std::vector<double>> members(n_scen);
  for (std::size_t r : order) members[d.row_scenario[r]].push_back(y[r]);
  for (std::size_t s = 0; s < n_scen; ++s) {
    Scenario& sc = d.scenarios[s];
    const auto& v = members[s];
    sc.count = static_cast<std::int64_t>(v.size());
    sc.probability = static_cast<double>(sc.count) / static_cast<double>(n);
    if (v.empty()) continue;
    // Members are sorted by value, so min and max are the ends.
    sc.stats = ScenarioStats{v.front(), simd::sum(v) / static_cast<double>(v.size()), v.back()};
    sc.stats->mean = std::clamp(sc.stats->mean, v.front(), v.back());
  }

  const std::vector<std::string> colors = assign_colors(d.scenarios);
  for (std::size_t s = 0; s < n_scen; ++s) d.scenarios[s].color = colors[s];

  // Stacked histogram over equal-width output bins.
  const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
  const double lo = *mn;
  const double hi = *mx;
  const auto nb = static_cast<std::size_t>(n_output_bins);
  Histogram& h = d.histogram;
  h.edges.resize(nb + 1);
  const double width = (hi - lo) / static_cast<double>(nb);
  for (std::size_t b = 0; b < nb; ++b) h.edges[b] = lo + static_cast<double>(b) * width;
  h.edges[nb] = hi;
  std::vector<std::int32_t> bin(n, 0);
  if (width > 0.0) simd::bin_index(y, lo, width, n_output_bins - 1, bin);
  h.counts.assign(n_scen, std::vector<std::int64_t>(nb, 0));
  for (std::size_t r = 0; r < n; ++r) ++h.counts[d.row_scenario[r]][static_cast<std::size_t>(bin[r])];

  d.states = std::move(states);
  return d;
}

std::vector<std::string> assign_colors(std::span<const Scenario> scenarios) {
  if (scenarios.empty()) throw InputError("assign_colors: empty scenario table");
  std::size_t n_top = 0;
  for (const Scenario& s : scenarios) {
    if (s.state_index.empty()) throw InputError("assign_colors: scenario without states");
    n_top = std::max(n_top, s.state_index[0] + 1);
  }
  if (n_top > kPaletteSize) throw InputError("palette exhausted");
  std::vector<std::size_t> per_hue(n_top, 0);
  for (const Scenario& s : scenarios) ++per_hue[s.state_index[0]];

  std::vector<std::string> out;
  std::vector<std::size_t> seen(n_top, 0);
  for (const Scenario& s : scenarios) {
    const std::size_t hue = s.state_index[0];
    const Hue& p = kPalette[hue];
    const std::size_t m = per_hue[hue];
    const std::size_t t = seen[hue]++;
    if (m == 1) {
      out.push_back(hsl_hex(p.h, p.s > 0.0 ? 1.0 : 0.0, 0.5));
    } else {
      const double l = 0.30 + 0.55 * static_cast<double>(t) / static_cast<double>(m - 1);
      out.push_back(hsl_hex(p.h, p.s, l));
    }
  }
  return out;
}

}  // namespace binsa
