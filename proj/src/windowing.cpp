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

#include "hibench/windowing.hpp"

#include <string>

#include "hibench/error.hpp"

namespace hibench {

void ForecastTask::validate() const {
  if (lookback == 0) throw_config("lookback must be positive");
  if (horizon == 0) throw_config("horizon must be positive");
  if (offset == 0) throw_config("offset must be at least 1");
  if (stride == 0) throw_config("stride must be positive");
}

std::size_t window_count(std::size_t segment_length, const ForecastTask& task) {
  task.validate();
  const std::size_t need = task.min_segment_length();
  if (segment_length < need) return 0;
  return (segment_length - need) / task.stride + 1;
}

Window window_at(std::size_t index, const ForecastTask& task) {
  const std::size_t start = index * task.stride;
  return {start, start + task.lookback + (task.offset - 1)};
}

std::vector<Window> enumerate_windows(std::size_t segment_length, const ForecastTask& task) {
  const std::size_t count = window_count(segment_length, task);
  if (count == 0) {
    throw_data("segment of " + std::to_string(segment_length) +
               " rows is too short; a window needs at least " +
               std::to_string(task.min_segment_length()) + " rows");
  }
  std::vector<Window> windows;
  windows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) windows.push_back(window_at(i, task));
  return windows;
}

namespace {

void check_window(std::size_t rows, const Window& w, const ForecastTask& task) {
  if (w.target_start != w.input_start + task.lookback + (task.offset - 1) ||
      w.target_start + task.horizon > rows) {
    throw_data("window at row " + std::to_string(w.input_start) + " does not fit a series of " +
               std::to_string(rows) + " rows");
  }
}

}  // namespace

MatrixView input_view(MatrixView values, const Window& w, const ForecastTask& task) {
  check_window(values.rows(), w, task);
  return values.row_range(w.input_start, task.lookback);
}

MatrixView target_view(MatrixView values, const Window& w, const ForecastTask& task) {
  check_window(values.rows(), w, task);
  return values.row_range(w.target_start, task.horizon);
}

WindowSlice slice(const TimeSeries& ts, const Window& w, const ForecastTask& task) {
  task.validate();
  const auto values = ts.view();
  WindowSlice out{Matrix(input_view(values, w, task)), {}};
  const auto target = target_view(values, w, task);
  if (!task.target.is_univariate()) {
    out.target = Matrix(target);
    return out;
  }
  const auto col = ts.find_column(task.target.column);
  if (!col) throw_data("unknown target column '" + task.target.column + "'");
  out.target = Matrix(task.horizon, 1);
  for (std::size_t r = 0; r < task.horizon; ++r) out.target(r, 0) = target(r, *col);
  return out;
}

}  // namespace hibench
