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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hibench/matrix.hpp"

namespace hibench {

enum class Metric { kMse, kMae };

std::string metric_label(Metric m);  // "MSE" / "MAE"
Metric parse_metric(const std::string& text);

/// Mean over windows of the per-window mean squared error. Every prediction
/// must match its truth in shape and all windows must share one shape.
double mse(std::span<const Matrix> predictions, std::span<const Matrix> truths);
/// Mean over windows of the per-window mean absolute error.
double mae(std::span<const Matrix> predictions, std::span<const Matrix> truths);

/// Per-window error means, filled window by window so that large evaluations
/// never hold every forecast in memory.
class WindowErrors {
 public:
  WindowErrors() = default;
  explicit WindowErrors(std::size_t window_count)
      : squared_(window_count, 0.0), absolute_(window_count, 0.0) {}

  /// Stores the mean squared and mean absolute error of one window.
  void record(std::size_t window, MatrixView prediction, MatrixView truth);

  std::size_t size() const noexcept { return squared_.size(); }
  std::span<const double> squared() const noexcept { return squared_; }
  std::span<const double> absolute() const noexcept { return absolute_; }

  /// Averages over windows in window order. The result does not depend on
  /// the order in which windows were recorded.
  double mse() const;
  double mae() const;

 private:
  std::vector<double> squared_;
  std::vector<double> absolute_;
};

/// Pairwise (cascade) sum in index order.
double pairwise_sum(std::span<const double> values);

/// (best_sota - hi) / best_sota. Positive when HI has the lower error.
double relative_improvement(double best_sota, double hi);

struct MetricReport {
  std::string dataset;
  std::string mode;       // "univariate" / "multivariate"
  std::string predictor;  // PredictorSpec::label()
  std::size_t lookback = 0;
  std::size_t horizon = 0;
  std::size_t offset = 1;
  std::size_t stride = 1;
  std::size_t window_count = 0;
  double mse = 0.0;
  double mae = 0.0;
};

struct ReferenceKey {
  std::string dataset;
  std::string mode;  // "univariate" / "multivariate"
  std::size_t horizon = 0;
  Metric metric = Metric::kMse;

  auto operator<=>(const ReferenceKey&) const = default;
};

struct ReferenceEntry {
  std::string model;
  double value = 0.0;
};

/// Published scores of competitor models, keyed by table cell, with models in
/// table order. Scores published for HI itself are kept apart so they never
/// compete for "best reference".
class ReferenceScores {
 public:
  /// Bundled transcription of the published comparison tables.
  static const ReferenceScores& bundled();
  static ReferenceScores load(const std::filesystem::path& path);
  /// CSV: dataset,mode,horizon,metric,model,value with one header row.
  /// Lines starting with '#' are comments.
  static ReferenceScores parse(const std::string& text, const std::string& origin);

  const std::string& version() const noexcept { return version_; }

  void add(const ReferenceKey& key, ReferenceEntry entry);

  bool contains(const ReferenceKey& key) const { return entries_.count(key) != 0; }
  bool has_dataset(const std::string& dataset, const std::string& mode) const;
  const std::vector<ReferenceEntry>& entries(const ReferenceKey& key) const;
  std::optional<double> published_hi(const ReferenceKey& key) const;

  /// Competitor models for one mode, in table order.
  std::vector<std::string> models(const std::string& mode) const;
  std::size_t size() const noexcept;

 private:
  std::string version_;
  std::map<ReferenceKey, std::vector<ReferenceEntry>> entries_;
  std::map<ReferenceKey, double> published_hi_;
  std::map<std::string, std::vector<std::string>> model_order_;
};

/// The lowest published error for a key; ties go to the first model in table
/// order.
ReferenceEntry best_reference(const ReferenceScores& refs, const ReferenceKey& key);

}  // namespace hibench
