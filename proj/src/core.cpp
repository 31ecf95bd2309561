#include "binsa/core.hpp"

#include <cmath>
#include <set>

namespace binsa {

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::uniform:
      return "uniform";
    case DistributionKind::normal:
      return "normal";
    case DistributionKind::categorical:
      return "categorical";
  }
  return "unknown";
}

MarginalDistribution MarginalDistribution::uniform(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InputError("uniform marginal requires finite lo < hi");
  }
  MarginalDistribution d;
  d.kind_ = DistributionKind::uniform;
  d.a_ = lo;
  d.b_ = hi;
  return d;
}

MarginalDistribution MarginalDistribution::normal(double mean, double sd) {
  if (!std::isfinite(mean) || !std::isfinite(sd) || !(sd > 0.0)) {
    throw InputError("normal marginal requires finite mean and sd > 0");
  }
  MarginalDistribution d;
  d.kind_ = DistributionKind::normal;
  d.a_ = mean;
  d.b_ = sd;
  return d;
}

MarginalDistribution MarginalDistribution::categorical(std::vector<std::string> labels,
                                                       std::vector<double> probabilities) {
  if (labels.empty() || labels.size() != probabilities.size()) {
    throw InputError("categorical marginal needs one probability per label");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p > 0.0 && p <= 1.0)) throw InputError("categorical probabilities must lie in (0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InputError("categorical probabilities must sum to 1");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InputError("categorical labels must be unique");
  MarginalDistribution d;
  d.kind_ = DistributionKind::categorical;
  d.labels_ = std::move(labels);
  d.probabilities_ = std::move(probabilities);
  return d;
}

double MarginalDistribution::lo() const {
  if (!is_uniform()) throw InputError("lo() on a non-uniform marginal");
  return a_;
}

double MarginalDistribution::hi() const {
  if (!is_uniform()) throw InputError("hi() on a non-uniform marginal");
  return b_;
}

double MarginalDistribution::mean() const {
  if (!is_normal()) throw InputError("mean() on a non-normal marginal");
  return a_;
}

double MarginalDistribution::sd() const {
  if (!is_normal()) throw InputError("sd() on a non-normal marginal");
  return b_;
}

const std::vector<std::string>& MarginalDistribution::labels() const {
  if (!is_categorical()) throw InputError("labels() on a non-categorical marginal");
  return labels_;
}

const std::vector<double>& MarginalDistribution::probabilities() const {
  if (!is_categorical()) throw InputError("probabilities() on a non-categorical marginal");
  return probabilities_;
}

std::size_t MarginalDistribution::level_count() const { return labels().size(); }

void validate_specs(std::span<const InputSpec> specs) {
  std::set<std::string> names;
  for (const InputSpec& s : specs) {
    if (s.name.empty()) throw InputError("input names must be non-empty");
    if (!names.insert(s.name).second) throw InputError("duplicate input name '" + s.name + "'");
  }
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> values) {
  if (values.size() != rows_) throw InputError("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = values[r];
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) throw InputError("SymmetricMatrix: the diagonal is fixed at zero");
  data_.at(i * k_ + j) = value;
  data_.at(j * k_ + i) = value;
}

Dataset::Dataset(std::vector<InputSpec> specs, std::vector<std::vector<double>> columns,
                 std::vector<double> output)
    : specs_(std::move(specs)), columns_(std::move(columns)), output_(std::move(output)) {
  validate();
}

Dataset::Dataset(std::vector<InputSpec> specs, const Matrix& inputs, std::vector<double> output)
    : specs_(std::move(specs)), output_(std::move(output)) {
  if (inputs.rows() != output_.size()) {
    throw InputError("dataset: input rows and output length differ");
  }
  columns_.reserve(inputs.cols());
  for (std::size_t c = 0; c < inputs.cols(); ++c) columns_.push_back(inputs.column(c));
  validate();
}

void Dataset::validate() const {
  validate_specs(specs_);
  if (columns_.size() != specs_.size()) {
    throw InputError("dataset: " + std::to_string(columns_.size()) + " columns but " +
                     std::to_string(specs_.size()) + " input specs");
  }
  if (output_.size() < 2) throw InputError("dataset: need at least two rows");
  for (double v : output_) {
    if (!std::isfinite(v)) throw InputError("dataset: non-finite output value");
  }
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (columns_[k].size() != output_.size()) {
      throw InputError("dataset: column '" + specs_[k].name + "' has the wrong length");
    }
    const bool categorical = specs_[k].distribution.is_categorical();
    const double levels =
        categorical ? static_cast<double>(specs_[k].distribution.level_count()) : 0.0;
    for (double v : columns_[k]) {
      if (!std::isfinite(v)) {
        throw InputError("dataset: non-finite value in column '" + specs_[k].name + "'");
      }
      if (categorical && (v < 0.0 || v >= levels || v != std::floor(v))) {
        throw InputError("dataset: column '" + specs_[k].name + "' holds an invalid level index");
      }
    }
  }
}

std::optional<std::size_t> Dataset::find(std::string_view name) const {
  for (std::size_t k = 0; k < specs_.size(); ++k) {
    if (specs_[k].name == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const InputSpec& s : specs_) out.push_back(s.name);
  return out;
}

Dataset Dataset::permuted(std::span<const std::size_t> order) const {
  if (order.size() != n_rows()) throw InputError("permuted: order has the wrong length");
  std::vector<std::vector<double>> cols(columns_.size(), std::vector<double>(order.size()));
  std::vector<double> out(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t src = order[r];
    for (std::size_t k = 0; k < columns_.size(); ++k) cols[k][r] = columns_[k].at(src);
    out[r] = output_.at(src);
  }
  return Dataset(specs_, std::move(cols), std::move(out));
}

Dataset Dataset::with_output(std::vector<double> output) const {
  return Dataset(specs_, columns_, std::move(output));
}

}  // namespace binsa
