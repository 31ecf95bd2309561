#pragma once

// Domain types shared by every module: marginals, input specs, datasets,
// sensitivity reports, and the library's error types.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binsa {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed files, or configuration problems. The CLI
/// maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The data cannot support the requested computation (constant output,
/// degenerate correlation, empty binning, ...). The CLI maps these to exit
/// code 1.
class NumericError : public Error {
 public:
  using Error::Error;
};

enum class DistributionKind { uniform, normal, categorical };

std::string_view to_string(DistributionKind kind);

/// Marginal law of one model input. Construct through the named factories;
/// the invariants (lo < hi, sd > 0, categorical probabilities summing to 1)
/// are checked there.
class MarginalDistribution {
 public:
  static MarginalDistribution uniform(double lo, double hi);
  static MarginalDistribution normal(double mean, double sd);
  static MarginalDistribution categorical(std::vector<std::string> labels,
                                          std::vector<double> probabilities);

  DistributionKind kind() const noexcept { return kind_; }
  bool is_uniform() const noexcept { return kind_ == DistributionKind::uniform; }
  bool is_normal() const noexcept { return kind_ == DistributionKind::normal; }
  bool is_categorical() const noexcept { return kind_ == DistributionKind::categorical; }

  // uniform
  double lo() const;
  double hi() const;
  // normal
  double mean() const;
  double sd() const;
  // categorical
  const std::vector<std::string>& labels() const;
  const std::vector<double>& probabilities() const;
  std::size_t level_count() const;

  bool operator==(const MarginalDistribution&) const = default;

 private:
  MarginalDistribution() = default;

  DistributionKind kind_ = DistributionKind::uniform;
  double a_ = 0.0;  // lo or mean
  double b_ = 1.0;  // hi or sd
  std::vector<std::string> labels_;
  std::vector<double> probabilities_;
};

struct InputSpec {
  std::string name;
  MarginalDistribution distribution = MarginalDistribution::uniform(0.0, 1.0);
  std::string unit;

  bool operator==(const InputSpec&) const = default;
};

/// Throws InputError on duplicate or empty names.
void validate_specs(std::span<const InputSpec> specs);

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const double> values);

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// K×K matrix with a zero diagonal whose off-diagonal pairs are written
/// together, so symmetry holds bitwise.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t k) : k_(k), data_(k * k, 0.0) {}

  std::size_t size() const noexcept { return k_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * k_ + j]; }
  /// Sets (i, j) and (j, i). i == j is rejected.
  void set(std::size_t i, std::size_t j, double value);

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<double> data_;
};

/// N×K inputs (column-major; categorical columns hold level indices) plus a
/// length-N output. All entries finite, N >= 2, one spec per column.
class Dataset {
 public:
  Dataset(std::vector<InputSpec> specs, std::vector<std::vector<double>> columns,
          std::vector<double> output);
  Dataset(std::vector<InputSpec> specs, const Matrix& inputs, std::vector<double> output);

  std::size_t n_rows() const noexcept { return output_.size(); }
  std::size_t n_inputs() const noexcept { return specs_.size(); }

  const std::vector<InputSpec>& specs() const noexcept { return specs_; }
  const InputSpec& spec(std::size_t k) const { return specs_.at(k); }
  std::span<const double> column(std::size_t k) const { return columns_.at(k); }
  std::span<const double> output() const noexcept { return output_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::vector<std::string> names() const;

  /// Rows reordered so that row r of the result is row order[r] of this.
  Dataset permuted(std::span<const std::size_t> order) const;
  /// Same inputs, new output column.
  Dataset with_output(std::vector<double> output) const;

  bool operator==(const Dataset&) const = default;

 private:
  void validate() const;

  std::vector<InputSpec> specs_;
  std::vector<std::vector<double>> columns_;
  std::vector<double> output_;
};

/// First-, second-order and combined indices from one dataset.
struct SensitivityReport {
  std::vector<std::string> names;
  std::vector<double> first_order;
  SymmetricMatrix second_order;
  std::vector<double> combined;
  double var_y = 0.0;
  int n_bins_first = 0;
  int n_bins_second_per_dim = 0;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return first_order.size(); }

  bool operator==(const SensitivityReport&) const = default;
};

}  // namespace binsa
