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
#include "hibench/baselines.hpp"
#include "hibench/data.hpp"
#include "hibench/report.hpp"

namespace hibench {

struct DatasetConfig {
  std::string name;
  std::filesystem::path path;  // resolved
  TableSchema schema;
  std::string target = "@last";  // univariate target column
  SplitSpec split;
  std::vector<std::size_t> horizons;
  std::optional<std::size_t> lookback;  // default: lookback = horizon
  std::size_t offset = 1;
  std::size_t stride = 1;
  std::optional<std::size_t> period;  // seasonal_naive; detected when unset

  std::size_t lookback_for(std::size_t horizon) const { return lookback.value_or(horizon); }
};

struct SelectorConfig {
  PeriodSearch period_search;
  std::vector<double> alpha_grid = default_alpha_grid();
  std::vector<PredictorSpec> bases{PredictorSpec::mean(), PredictorSpec::seasonal_naive(0)};
  Metric objective = Metric::kMse;
};

/// Parsed harness configuration. The file is INI-style:
///
///   [harness]   predictors, modes, format, out_dir, jobs, reference_scores, scale
///   [selector]  acf_min_lag, acf_max_lag, threshold, alpha_grid, bases, objective
///   [dataset.<name>]  path, columns, timestamp, rows, target, sample_rate,
///                     split | borders, horizons, lookback, offset, stride, period
///
/// Unknown sections and keys are rejected.
struct HarnessConfig {
  std::vector<DatasetConfig> datasets;
  std::vector<PredictorSpec> predictors{PredictorSpec::hi()};
  std::vector<std::string> modes{"univariate", "multivariate"};
  SelectorConfig selector;
  TableFormat format = TableFormat::kMarkdown;
  std::filesystem::path out_dir = "hibench-out";
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> reference_scores;
  bool scale = true;

  /// Throws a config Error for an unknown name.
  const DatasetConfig& dataset(const std::string& name) const;
};

/// Name of the environment variable that relocates relative dataset paths.
inline constexpr const char* kDataRootEnv = "HIBENCH_DATA_ROOT";

/// Relative dataset paths resolve against `data_root` when given, else the
/// HIBENCH_DATA_ROOT environment variable, else `base_dir`.
HarnessConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                           const std::optional<std::filesystem::path>& data_root = {});
HarnessConfig load_config(const std::filesystem::path& path,
                          const std::optional<std::filesystem::path>& data_root = {});

/// Canonical INI text of the configuration with every default spelled out.
std::string effective_config(const HarnessConfig& config);

std::string parse_mode(const std::string& text);  // uni|multi|univariate|multivariate

}  // namespace hibench
