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

#include "hibench/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "hibench/error.hpp"

namespace hibench {

namespace {

// Runs `f`, prefixing any failure with a stage tag and the dataset name.
template <class F>
auto stage(const char* tag, const std::string& dataset, F&& f) -> decltype(f()) {
  const std::string prefix =
      std::string("[") + tag + "] " + (dataset.empty() ? "" : dataset + ": ");
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), prefix + e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kRuntime, prefix + e.what());
  }
}

// Split segments behind counted accessors.
class TrackedSegments {
 public:
  TrackedSegments(Segments segments, SegmentAccess& access)
      : seg_(std::move(segments)), access_(access) {}

  const TimeSeries& train() {
    ++access_.train;
    return seg_.train;
  }
  const TimeSeries& val() {
    ++access_.val;
    return seg_.val;
  }
  const TimeSeries& test() {
    ++access_.test;
    return seg_.test;
  }

 private:
  Segments seg_;
  SegmentAccess& access_;
};

TargetMode target_mode(const DatasetConfig& d, const std::string& mode) {
  return mode == "univariate" ? TargetMode::univariate(d.target) : TargetMode::multivariate();
}

std::vector<double> column_values(const TimeSeries& ts, std::size_t col) {
  std::vector<double> out(ts.rows());
  for (std::size_t r = 0; r < ts.rows(); ++r) out[r] = ts.values()(r, col);
  return out;
}

// Column used for period detection: the target column in either mode.
std::size_t period_column(const TimeSeries& ts, const DatasetConfig& d, const std::string& mode) {
  if (mode == "univariate") return 0;
  const auto c = ts.find_column(d.target);
  if (!c) throw_data("unknown target column '" + d.target + "'");
  return *c;
}

}  // namespace

EvalResult run_eval(const HarnessConfig& config, const EvalOptions& options) {
  const std::vector<std::string> modes = options.modes.empty() ? config.modes : options.modes;
  const std::size_t jobs = options.jobs.value_or(config.jobs);
  if (jobs == 0) throw_config("[config] jobs must be positive");

  std::vector<const DatasetConfig*> datasets;
  if (options.dataset) {
    datasets.push_back(stage("config", "", [&] { return &config.dataset(*options.dataset); }));
  } else {
    for (const auto& d : config.datasets) datasets.push_back(&d);
  }
  const ReferenceScores loaded = stage("config", "", [&] {
    return config.reference_scores ? ReferenceScores::load(*config.reference_scores)
                                   : ReferenceScores{};
  });
  const ReferenceScores& refs = config.reference_scores ? loaded : ReferenceScores::bundled();

  EvalResult result;
  for (const auto* d : datasets) {
    const TimeSeries raw = stage("ingest", d->name, [&] { return load_table(d->path, d->schema); });
    for (const auto& mode : modes) {
      const TargetMode target = target_mode(*d, mode);
      TrackedSegments segments(
          stage("split", d->name, [&] { return split(select_targets(raw, target), d->split); }),
          result.access);

      Matrix test = segments.test().values();
      std::optional<ScalerParams> scaler;
      if (config.scale) {
        scaler = stage("scale", d->name, [&] { return fit_scaler(segments.train()); });
        stage("scale", d->name, [&] { apply_scaler_inplace(test, *scaler); });
      }

      std::optional<std::size_t> period = d->period;
      const bool wants_period = std::any_of(config.predictors.begin(), config.predictors.end(),
                                            [](const auto& p) { return p.needs_period(); });
      if (wants_period && !period) {
        period = stage("analysis", d->name, [&] {
          const auto& train = segments.train();
          const auto col = column_values(train, period_column(train, *d, mode));
          return detect_period(col, config.selector.period_search).period;
        });
      }

      for (const std::size_t horizon : d->horizons) {
        ForecastTask task{d->lookback_for(horizon), horizon, d->offset, d->stride, target};
        stage("window", d->name, [&] {
          task.validate();
          if (task.lookback < task.horizon) {
            throw_config("historical inertia needs lookback >= horizon, got lookback " +
                         std::to_string(task.lookback) + " for horizon " + std::to_string(horizon));
          }
          if (window_count(test.rows(), task) == 0) {
            throw_data("test segment of " + std::to_string(test.rows()) +
                       " rows admits no window for horizon " + std::to_string(horizon) +
                       " (needs " + std::to_string(task.min_segment_length()) + ")");
          }
        });
        for (auto spec : config.predictors) {
          if (spec.needs_period()) {
            if (!period) {
              result.skipped.push_back(
                  {d->name, mode, spec.label(), horizon, "no seasonal period detected"});
              continue;
            }
            spec.period = *period;
          }
          if (spec.min_lookback(horizon) > task.lookback) {
            result.skipped.push_back(
                {d->name, mode, spec.label(), horizon,
                 "needs lookback >= " + std::to_string(spec.min_lookback(horizon))});
            continue;
          }
          auto report = stage("predict", d->name,
                              [&] { return evaluate_segment(test.view(), task, spec, jobs); });
          report.dataset = d->name;
          report.mode = mode;
          result.reports.push_back(std::move(report));
        }
      }
    }
  }

  for (const auto& mode : modes) {
    std::vector<MetricReport> subset;
    for (const auto& r : result.reports) {
      if (r.mode == mode) subset.push_back(r);
    }
    if (subset.empty()) continue;
    result.tables.push_back(stage("report", "", [&] { return build_table(subset, refs); }));
  }
  return result;
}

std::string metric_reports_json(const EvalResult& result) {
  nlohmann::ordered_json j;
  j["format"] = "hibench-metrics";
  j["version"] = 1;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    nlohmann::ordered_json o;
    o["dataset"] = r.dataset;
    o["mode"] = r.mode;
    o["predictor"] = r.predictor;
    o["lookback"] = r.lookback;
    o["horizon"] = r.horizon;
    o["offset"] = r.offset;
    o["stride"] = r.stride;
    o["windows"] = r.window_count;
    o["mse"] = r.mse;
    o["mae"] = r.mae;
    reports.push_back(std::move(o));
  }
  j["reports"] = std::move(reports);
  auto skipped = nlohmann::ordered_json::array();
  for (const auto& s : result.skipped) {
    skipped.push_back({{"dataset", s.dataset},
                       {"mode", s.mode},
                       {"predictor", s.predictor},
                       {"horizon", s.horizon},
                       {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped);
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_eval_outputs(const EvalResult& result,
                                                      const HarnessConfig& config,
                                                      const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("metrics.json", metric_reports_json(result));
  for (const auto& table : result.tables) {
    const auto stem = "table_" + table.mode + ".";
    files.emplace_back(stem + table_format_extension(config.format), render(table, config.format));
    if (config.format != TableFormat::kDelimited) {
      files.emplace_back(stem + "csv", render(table, TableFormat::kDelimited));
    }
  }
  files.emplace_back("effective_config.ini", effective_config(config));

  return stage("write", "", [&] {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw_runtime("cannot create '" + out_dir.string() + "': " + ec.message());
    std::random_device rd;
    const fs::path staging = out_dir / (".staging-" + std::to_string(rd()));
    fs::create_directories(staging, ec);
    if (ec) throw_runtime("cannot create '" + staging.string() + "': " + ec.message());
    try {
      for (const auto& [name, body] : files) {
        std::ofstream out(staging / name, std::ios::binary);
        out << body;
        if (!out.flush()) throw_runtime("cannot write '" + (staging / name).string() + "'");
      }
      std::vector<fs::path> written;
      for (const auto& [name, body] : files) {
        fs::rename(staging / name, out_dir / name);
        written.push_back(out_dir / name);
      }
      fs::remove_all(staging, ec);
      return written;
    } catch (...) {
      fs::remove_all(staging, ec);
      throw;
    }
  });
}

SelectionResult run_select(const HarnessConfig& config, const std::string& dataset,
                           const std::string& mode, std::size_t horizon,
                           std::optional<std::size_t> jobs) {
  const auto& d = stage("config", "", [&] { return std::cref(config.dataset(dataset)); }).get();
  const std::string m = stage("config", "", [&] { return parse_mode(mode); });
  const TargetMode target = target_mode(d, m);
  const auto segments = stage("split", d.name, [&] {
    return split(select_targets(load_table(d.path, d.schema), target), d.split);
  });

  SelectionOptions options;
  options.period_search = config.selector.period_search;
  options.objective = config.selector.objective;
  options.scale = config.scale;
  options.jobs = jobs.value_or(config.jobs);
  if (m == "multivariate") options.period_column = d.target;
  auto bases = config.selector.bases;
  for (auto& b : bases) {
    if (b.needs_period() && d.period) b.period = *d.period;
  }
  options.candidates = stage("config", d.name,
                             [&] { return default_candidates(bases, config.selector.alpha_grid); });

  const ForecastTask task{d.lookback_for(horizon), horizon, d.offset, d.stride, target};
  return stage("select", d.name,
               [&] { return select_predictor(segments.train, segments.val, task, options); });
}

PeriodEstimate run_detect_period(const HarnessConfig& config, const std::string& dataset,
                                 const std::string& column) {
  const auto& d = stage("config", "", [&] { return std::cref(config.dataset(dataset)); }).get();
  const auto segments =
      stage("split", d.name, [&] { return split(load_table(d.path, d.schema), d.split); });
  return stage("analysis", d.name, [&] {
    const auto col = segments.train.find_column(column);
    if (!col) throw_data("unknown column '" + column + "'");
    return detect_period(column_values(segments.train, *col), config.selector.period_search);
  });
}

}  // namespace hibench
