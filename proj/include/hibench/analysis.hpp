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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hibench/baselines.hpp"
#include "hibench/data.hpp"
#include "hibench/metrics.hpp"
#include "hibench/windowing.hpp"

namespace hibench {

/// Sample autocorrelation for lags 1..max_lag (index 0 holds lag 1):
///   acf[k] = sum_i (x_i - m)(x_{i+k} - m) / sum_i (x_i - m)^2
/// Requires series.size() >= max_lag + 2 and a non-constant series.
std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag);

struct PeriodSearch {
  std::size_t min_lag = 2;
  std::size_t max_lag = 200;
  double threshold = 0.3;

  void validate() const;
};

struct PeriodEstimate {
  std::optional<std::size_t> period;  // empty when no periodicity was found
  /// Autocorrelation at the strongest local maximum in range, or 0 when the
  /// range has no local maximum.
  double strength = 0.0;
};

/// Picks the lag in [min_lag, max_lag] with the highest autocorrelation among
/// local maxima. Reports no period when that value is below the threshold.
PeriodEstimate detect_period(std::span<const double> series, const PeriodSearch& search);

struct CandidateScore {
  PredictorSpec spec;
  double mse = 0.0;
  double mae = 0.0;
};

struct SelectionOptions {
  /// Candidates to score. Seasonal-naive entries (and hybrids built on them)
  /// with period 0 take the detected period, and are dropped when none is
  /// found or it exceeds the lookback.
  std::vector<PredictorSpec> candidates;
  PeriodSearch period_search;
  Metric objective = Metric::kMse;
  /// Column used for period detection; default is the last column.
  std::optional<std::string> period_column;
  /// Score in the space standardized by the training segment.
  bool scale = true;
  std::size_t jobs = 1;
};

/// HI, every base, and hybrids of HI with every base over the alpha grid.
std::vector<PredictorSpec> default_candidates(const std::vector<PredictorSpec>& bases,
                                              const std::vector<double>& alpha_grid);

/// {0, 0.1, ..., 1.0}
std::vector<double> default_alpha_grid();

struct SelectionResult {
  PredictorSpec chosen;
  std::vector<CandidateScore> scores;  // candidate order
  PeriodEstimate period;
  std::size_t horizon = 0;
  std::size_t window_count = 0;
  std::string objective;
  std::string rationale;

  const CandidateScore& chosen_score() const;
};

/// Objectives within kSelectionTolerance * min + kSelectionFloor of the lowest
/// score are treated as tied.
inline constexpr double kSelectionTolerance = 1e-12;
inline constexpr double kSelectionFloor = 1e-15;

/// Scores every candidate on all validation windows and returns the one with
/// the lowest objective. Ties prefer HI, then a base predictor, then hybrids
/// with smaller alpha.
SelectionResult select_predictor(const TimeSeries& train, const TimeSeries& val,
                                 const ForecastTask& task, const SelectionOptions& options);

std::string selection_report_json(const SelectionResult& result);
std::string period_estimate_json(const PeriodEstimate& estimate, const std::string& column);

}  // namespace hibench
