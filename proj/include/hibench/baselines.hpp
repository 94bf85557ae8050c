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
#include <span>
#include <string>
#include <vector>

#include "hibench/matrix.hpp"

namespace hibench {

/// An L_y x d_y prediction.
using Forecast = Matrix;

/// Column subset used as forecast targets. Empty means every input column.
using TargetColumns = std::span<const std::size_t>;

/// Convex combination weight, 0 <= alpha <= 1.
class HybridWeight {
 public:
  explicit HybridWeight(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Historical inertia: the last `horizon` input rows, restricted to the target
/// columns, copied verbatim. Requires horizon <= input.rows().
Forecast hi_forecast(MatrixView input, std::size_t horizon, TargetColumns targets = {});

/// Repeats the last full cycle of length `period`: forecast row i is input
/// row L_x - period + (i mod period). Not part of the benchmarked method; it
/// gives the hybrid and selector machinery a non-HI base.
Forecast seasonal_naive_forecast(MatrixView input, std::size_t period, std::size_t horizon,
                                 TargetColumns targets = {});

/// Every row equals the per-column mean of the input.
Forecast mean_forecast(MatrixView input, std::size_t horizon, TargetColumns targets = {});

/// alpha * a + (1 - alpha) * b, cell-wise.
Forecast hybrid_forecast(const Forecast& a, const Forecast& b, HybridWeight w);

/// A named predictor with its parameters, as written in configs:
///   hi | mean | seasonal_naive[:period] | hybrid:<base>[:period]:<alpha>
/// A hybrid always mixes HI (weight alpha) with `base` (weight 1 - alpha).
struct PredictorSpec {
  std::string name = "hi";
  std::size_t period = 0;  // seasonal_naive, or a seasonal_naive hybrid base
  double alpha = 1.0;      // hybrid only
  std::string base;        // hybrid only: "mean" or "seasonal_naive"

  static PredictorSpec hi() { return {}; }
  static PredictorSpec mean() { return {"mean", 0, 1.0, {}}; }
  static PredictorSpec seasonal_naive(std::size_t period) {
    return {"seasonal_naive", period, 1.0, {}};
  }
  static PredictorSpec hybrid(const PredictorSpec& base, double alpha) {
    return {"hybrid", base.period, alpha, base.name};
  }

  /// Canonical text form; parse_predictor_spec(label()) round-trips.
  std::string label() const;
  /// Smallest lookback this predictor accepts for the given horizon.
  std::size_t min_lookback(std::size_t horizon) const;
  /// True when a seasonal period still needs to be supplied.
  bool needs_period() const;
  PredictorSpec base_spec() const;

  friend bool operator==(const PredictorSpec&, const PredictorSpec&) = default;
};

/// Registered predictor names.
const std::vector<std::string>& predictor_names();

PredictorSpec parse_predictor_spec(const std::string& text);

Forecast predict(const PredictorSpec& spec, MatrixView input, std::size_t horizon,
                 TargetColumns targets = {});

}  // namespace hibench
