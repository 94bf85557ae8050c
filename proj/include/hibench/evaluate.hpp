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

#include "hibench/baselines.hpp"
#include "hibench/metrics.hpp"
#include "hibench/windowing.hpp"

namespace hibench {

/// Scores one predictor over every window of a segment whose columns are all
/// forecast targets. Windows are split into `jobs` contiguous chunks and the
/// per-window errors are reduced in window order, so the result is
/// bit-identical for any job count.
MetricReport evaluate_segment(MatrixView segment, const ForecastTask& task,
                              const PredictorSpec& predictor, std::size_t jobs = 1);

/// Per-window errors behind evaluate_segment.
WindowErrors window_errors(MatrixView segment, const ForecastTask& task,
                           const PredictorSpec& predictor, std::size_t jobs = 1);

}  // namespace hibench
