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

#include "hibench/evaluate.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "hibench/error.hpp"

namespace hibench {

WindowErrors window_errors(MatrixView segment, const ForecastTask& task,
                           const PredictorSpec& predictor, std::size_t jobs) {
  task.validate();
  if (predictor.needs_period()) {
    throw_config("predictor '" + predictor.label() + "' has no seasonal period");
  }
  if (predictor.min_lookback(task.horizon) > task.lookback) {
    throw_config("predictor '" + predictor.label() +
                 "' needs lookback >= " + std::to_string(predictor.min_lookback(task.horizon)) +
                 ", got " + std::to_string(task.lookback));
  }
  const std::size_t count = window_count(segment.rows(), task);
  if (count == 0) {
    throw_data("segment of " + std::to_string(segment.rows()) +
               " rows is too short; a window needs at least " +
               std::to_string(task.min_segment_length()) + " rows");
  }

  WindowErrors errors(count);
  auto run_chunk = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const Window w = window_at(i, task);
      const Forecast f = predict(predictor, input_view(segment, w, task), task.horizon);
      errors.record(i, f.view(), target_view(segment, w, task));
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, count);
  if (workers == 1) {
    run_chunk(0, count);
    return errors;
  }
  // Each worker owns a disjoint index range of `errors`.
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t base = count / workers;
    const std::size_t extra = count % workers;
    std::size_t first = 0;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t last = first + base + (t < extra ? 1 : 0);
      threads.emplace_back([&, t, first, last] {
        try {
          run_chunk(first, last);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
      first = last;
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return errors;
}

MetricReport evaluate_segment(MatrixView segment, const ForecastTask& task,
                              const PredictorSpec& predictor, std::size_t jobs) {
  const auto errors = window_errors(segment, task, predictor, jobs);
  MetricReport r;
  r.mode = task.target.label();
  r.predictor = predictor.label();
  r.lookback = task.lookback;
  r.horizon = task.horizon;
  r.offset = task.offset;
  r.stride = task.stride;
  r.window_count = errors.size();
  r.mse = errors.mse();
  r.mae = errors.mae();
  return r;
}

}  // namespace hibench
