#include "binsa/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace binsa::io {
namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
    if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') {
      cell = cell.substr(1, cell.size() - 2);
    }
    cells.emplace_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool next_line(std::istream& is, std::string& line) {
  if (!std::getline(is, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) throw InputError("cannot write a non-finite number");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

void write_dataset(std::ostream& os, const Dataset& data) {
  const std::size_t k = data.n_inputs();
  for (std::size_t c = 0; c < k; ++c) os << data.spec(c).name << ',';
  os << "output\n";
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const double v = data.column(c)[r];
      const auto& law = data.spec(c).distribution;
      os << (law.is_categorical() ? law.labels()[static_cast<std::size_t>(v)] : format_number(v))
         << ',';
    }
    os << format_number(data.output()[r]) << '\n';
  }
}

void write_dataset(const std::string& path, const Dataset& data) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write '" + path + "'");
  write_dataset(os, data);
  if (!os) throw InputError("error while writing '" + path + "'");
}

Dataset read_dataset(std::istream& is, std::span<const InputSpec> specs) {
  std::string line;
  if (!next_line(is, line)) throw InputError("CSV is empty");
  const std::vector<std::string> header = split(line);
  if (header.size() < 2) throw InputError("CSV needs at least one input column and an output");
  std::size_t out_col = header.size() - 1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "output") out_col = c;
  }

  std::vector<const InputSpec*> given(header.size(), nullptr);
  for (const InputSpec& s : specs) {
    const auto it = std::find(header.begin(), header.end(), s.name);
    if (it == header.end()) throw InputError("column '" + s.name + "' not found in CSV header");
    given[static_cast<std::size_t>(it - header.begin())] = &s;
  }

  std::vector<std::vector<double>> cols(header.size());
  std::size_t row = 0;
  while (next_line(is, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++row;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != header.size()) {
      throw InputError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const InputSpec* spec = given[c];
      if (spec && spec->distribution.is_categorical() && c != out_col) {
        const auto& labels = spec->distribution.labels();
        const auto it = std::find(labels.begin(), labels.end(), cells[c]);
        if (it == labels.end()) {
          throw InputError("row " + std::to_string(row) + ", column '" + header[c] +
                           "': unknown level '" + cells[c] + "'");
        }
        cols[c].push_back(static_cast<double>(it - labels.begin()));
        continue;
      }
      const auto v = parse_number(cells[c]);
      if (!v) {
        throw InputError("row " + std::to_string(row) + ", column '" + header[c] +
                         "': cannot parse '" + cells[c] + "' as a number");
      }
      cols[c].push_back(*v);
    }
  }
  if (row < 2) throw InputError("CSV needs at least two data rows");

  std::vector<InputSpec> out_specs;
  std::vector<std::vector<double>> inputs;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == out_col) continue;
    if (given[c]) {
      out_specs.push_back(*given[c]);
    } else {
      const auto [mn, mx] = std::minmax_element(cols[c].begin(), cols[c].end());
      const double hi = *mx > *mn ? *mx : *mn + std::max(1.0, std::abs(*mn));
      out_specs.push_back({header[c], MarginalDistribution::uniform(*mn, hi)});
    }
    inputs.push_back(std::move(cols[c]));
  }
  return Dataset(std::move(out_specs), std::move(inputs), std::move(cols[out_col]));
}

Dataset read_dataset(const std::string& path, std::span<const InputSpec> specs) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open '" + path + "'");
  return read_dataset(is, specs);
}

}  // namespace binsa::io
