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
#include <vector>

#include "hibench/data.hpp"
#include "hibench/matrix.hpp"

namespace hibench {

/// One forecasting experiment unit.
struct ForecastTask {
  std::size_t lookback = 1;  // input length
  std::size_t horizon = 1;   // output length
  std::size_t offset = 1;    // 1 = target starts right after the input
  std::size_t stride = 1;    // distance between consecutive window starts
  TargetMode target = TargetMode::multivariate();

  /// Throws a config Error if any length is zero.
  void validate() const;

  /// Shortest segment that admits one window.
  std::size_t min_segment_length() const { return lookback + (offset - 1) + horizon; }
};

struct Window {
  std::size_t input_start = 0;
  std::size_t target_start = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

/// All windows whose target range fits in a segment of `segment_length`
/// rows, in ascending order of input_start.
std::vector<Window> enumerate_windows(std::size_t segment_length, const ForecastTask& task);

/// floor((segment_length - min_segment_length) / stride) + 1, or 0 when the
/// segment is too short.
std::size_t window_count(std::size_t segment_length, const ForecastTask& task);

Window window_at(std::size_t index, const ForecastTask& task);

/// Views into the designated rows. The target view covers every column of
/// `values`; target selection happens before windowing.
MatrixView input_view(MatrixView values, const Window& w, const ForecastTask& task);
MatrixView target_view(MatrixView values, const Window& w, const ForecastTask& task);

struct WindowSlice {
  Matrix input;
  Matrix target;
};

/// Copies of the input and target rows. In univariate mode the target is
/// restricted to the task's target column.
WindowSlice slice(const TimeSeries& ts, const Window& w, const ForecastTask& task);

}  // namespace hibench
