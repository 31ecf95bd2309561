#pragma once

// Self-contained SVG charts. Output depends only on the data, so the same
// input always produces the same bytes.

#include <span>
#include <string>

#include "binsa/simdec.hpp"

namespace binsa::io {

/// Horizontal bar per input, in the given order.
std::string bar_chart_svg(std::span<const std::string> labels, std::span<const double> values,
                          const std::string& title);

/// Scenario-stacked output histogram with a legend of colors and state labels.
std::string stacked_histogram_svg(const Decomposition& d, const std::string& title);

}  // namespace binsa::io
