#pragma once

// Dataset CSV: comma separated, '.' decimal point, header row, LF endings.
// Numbers are written in the shortest form that reads back bit-exactly.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binsa/core.hpp"

namespace binsa::io {

/// Shortest round-trip text of a finite double.
std::string format_number(double v);

/// Strict parse of a whole cell; nullopt on any trailing garbage.
std::optional<double> parse_number(std::string_view cell);

/// Header: input names then "output". Categorical cells hold the level label.
void write_dataset(std::ostream& os, const Dataset& data);
void write_dataset(const std::string& path, const Dataset& data);

/// Reads a dataset whose output is the column named "output" (or the last
/// column when none is). Columns named in `specs` take that spec; categorical
/// columns are read as labels. Other columns get a uniform spec over their
/// observed range.
/// Throws InputError naming the 1-based data row and the column of any cell
/// that does not parse.
Dataset read_dataset(std::istream& is, std::span<const InputSpec> specs = {});
Dataset read_dataset(const std::string& path, std::span<const InputSpec> specs = {});

}  // namespace binsa::io
