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
#include <optional>
#include <string>
#include <vector>

#include "hibench/analysis.hpp"
#include "hibench/config.hpp"
#include "hibench/data.hpp"
#include "hibench/evaluate.hpp"
#include "hibench/metrics.hpp"
#include "hibench/report.hpp"
#include "hibench/windowing.hpp"

namespace hibench {

/// Counts how often each split segment was handed out during a run.
struct SegmentAccess {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;
};

struct SkippedCell {
  std::string dataset;
  std::string mode;
  std::string predictor;
  std::size_t horizon = 0;
  std::string reason;
};

struct EvalOptions {
  std::optional<std::string> dataset;  // default: every dataset
  std::vector<std::string> modes;      // default: config modes
  std::optional<std::size_t> jobs;     // default: config jobs
};

struct EvalResult {
  std::vector<MetricReport> reports;
  std::vector<ComparisonTable> tables;  // one per mode
  std::vector<SkippedCell> skipped;
  SegmentAccess access;
};

/// ingest -> split -> scale -> enumerate -> predict -> score -> tabulate, with
/// nothing written to disk. Failures carry a stage tag such as "[ingest]".
EvalResult run_eval(const HarnessConfig& config, const EvalOptions& options = {});

/// Writes metrics.json, one table per mode in the configured format plus its
/// delimited form, and effective_config.ini. Files are staged and renamed so
/// a failure leaves no partial set behind.
std::vector<std::filesystem::path> write_eval_outputs(const EvalResult& result,
                                                      const HarnessConfig& config,
                                                      const std::filesystem::path& out_dir);

std::string metric_reports_json(const EvalResult& result);

SelectionResult run_select(const HarnessConfig& config, const std::string& dataset,
                           const std::string& mode, std::size_t horizon,
                           std::optional<std::size_t> jobs = {});

/// Period estimate of one column of the training segment.
PeriodEstimate run_detect_period(const HarnessConfig& config, const std::string& dataset,
                                 const std::string& column);

}  // namespace hibench
