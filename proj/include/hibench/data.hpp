// Copyright 2026 The hibench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hibench/matrix.hpp"

namespace hibench {

/// A T x d matrix of finite reals with one distinct name per column.
/// Rows are time steps in chronological order.
class TimeSeries {
 public:
  /// Validates shape, finiteness and column-name uniqueness; throws a data
  /// Error on violation.
  TimeSeries(Matrix values, std::vector<std::string> column_names, std::string sample_rate = {});

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  const Matrix& values() const noexcept { return values_; }
  MatrixView view() const { return values_.view(); }
  const std::vector<std::string>& column_names() const noexcept { return names_; }
  const std::string& sample_rate() const noexcept { return sample_rate_; }

  /// Index of a named column. "@last" names the final column.
  std::optional<std::size_t> find_column(const std::string& name) const;

  /// Rows [first, first + count) as a new series with the same metadata.
  TimeSeries slice_rows(std::size_t first, std::size_t count) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  Matrix values_;
  std::vector<std::string> names_;
  std::string sample_rate_;
};

struct TableSchema {
  std::size_t expected_columns = 0;  // value columns, timestamp excluded
  bool has_timestamp = true;
  std::optional<std::size_t> expected_rows;
  std::string sample_rate;
};

/// Reads a comma-separated file with one header row. A leading timestamp
/// column is dropped when the schema declares one.
TimeSeries load_table(const std::filesystem::path& path, const TableSchema& schema);

/// Same as load_table, reading from an in-memory buffer. `origin` only feeds
/// diagnostics.
TimeSeries parse_table(const std::string& text, const TableSchema& schema,
                       const std::string& origin = "<memory>");

struct TargetMode {
  enum class Kind { kUnivariate, kMultivariate };
  Kind kind = Kind::kMultivariate;
  std::string column;  // univariate only

  static TargetMode univariate(std::string column) {
    return {Kind::kUnivariate, std::move(column)};
  }
  static TargetMode multivariate() { return {}; }
  bool is_univariate() const noexcept { return kind == Kind::kUnivariate; }
  std::string label() const { return is_univariate() ? "univariate" : "multivariate"; }
};

TimeSeries select_targets(const TimeSeries& ts, const TargetMode& mode);

/// Row borders of a chronological train/val/test split: train [0, train_end),
/// val [train_end, val_end), test [val_end, end).
struct SplitBorders {
  std::size_t train_end = 0;
  std::size_t val_end = 0;
  std::size_t end = 0;

  friend bool operator==(const SplitBorders&, const SplitBorders&) = default;
};

/// Split ratios with an optional explicit override. When `borders` is set the
/// ratios are ignored, which lets calendar-based borders be reproduced.
struct SplitSpec {
  std::array<double, 3> ratios{12.0, 4.0, 4.0};
  std::optional<SplitBorders> borders;  // end == 0 means "to the last row"

  /// border_1 = floor(T r0 / sum), border_2 = floor(T (r0 + r1) / sum).
  SplitBorders resolve(std::size_t rows) const;
};

struct Segments {
  TimeSeries train;
  TimeSeries val;
  TimeSeries test;
};

Segments split(const TimeSeries& ts, const SplitSpec& spec);

enum class StdConvention { kPopulation, kSample };

struct ScalerParams {
  std::vector<double> means;
  std::vector<double> stds;
};

/// Per-column mean and standard deviation of the training segment. Constant
/// columns are rejected.
ScalerParams fit_scaler(const TimeSeries& train,
                        StdConvention convention = StdConvention::kPopulation);

TimeSeries apply_scaler(const TimeSeries& ts, const ScalerParams& params);
TimeSeries invert_scaler(const TimeSeries& ts, const ScalerParams& params);

/// In-place variants over a raw matrix with the scaler's column count.
void apply_scaler_inplace(Matrix& values, const ScalerParams& params);
void invert_scaler_inplace(Matrix& values, const ScalerParams& params);

}  // namespace hibench
