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

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "hibench/analysis.hpp"
#include "hibench/baselines.hpp"
#include "hibench/config.hpp"
#include "hibench/data.hpp"
#include "hibench/error.hpp"
#include "hibench/hibench.h"
#include "hibench/metrics.hpp"
#include "hibench/pipeline.hpp"
#include "hibench/report.hpp"
#include "hibench/windowing.hpp"

struct hib_series {
  hibench::TimeSeries series;
};

struct hib_config {
  hibench::HarnessConfig config;
};

namespace {

thread_local std::string g_last_error;

hib_status fail(hib_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps exceptions onto status codes; every exported function funnels through
// here so nothing propagates across the C boundary.
template <class F>
hib_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return HIB_OK;
  } catch (const hibench::Error& e) {
    return fail(static_cast<hib_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HIB_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(HIB_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(HIB_ERR_RUNTIME, "unknown error");
  }
}

#define HIB_REQUIRE(cond, msg)                       \
  do {                                               \
    if (!(cond)) return fail(HIB_ERR_ARGUMENT, msg); \
  } while (0)

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hibench::MatrixView view_of(const double* data, size_t rows, size_t cols) {
  return {data, rows, cols};
}

void copy_out(const hibench::Matrix& m, double* out) {
  const auto flat = m.flat();
  std::copy(flat.begin(), flat.end(), out);
}

}  // namespace

extern "C" {

const char* hib_version(void) { return "1.0.0"; }

const char* hib_last_error(void) { return g_last_error.c_str(); }

void hib_string_free(char* str) { std::free(str); }

hib_status hib_series_load(const char* path, size_t columns, int has_timestamp, hib_series** out) {
  HIB_REQUIRE(path && out, "path and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    hibench::TableSchema schema;
    schema.expected_columns = columns;
    schema.has_timestamp = has_timestamp != 0;
    *out = new hib_series{hibench::load_table(path, schema)};
  });
}

hib_status hib_series_from_values(const double* values, size_t rows, size_t cols,
                                  hib_series** out) {
  HIB_REQUIRE(values && out, "values and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> names;
    for (size_t c = 0; c < cols; ++c) names.push_back("c" + std::to_string(c));
    hibench::Matrix m(rows, cols, std::vector<double>(values, values + rows * cols));
    *out = new hib_series{hibench::TimeSeries(std::move(m), std::move(names))};
  });
}

void hib_series_free(hib_series* series) { delete series; }

size_t hib_series_rows(const hib_series* series) { return series ? series->series.rows() : 0; }

size_t hib_series_cols(const hib_series* series) { return series ? series->series.cols() : 0; }

const double* hib_series_values(const hib_series* series) {
  return series ? series->series.values().flat().data() : nullptr;
}

const char* hib_series_column_name(const hib_series* series, size_t index) {
  if (!series || index >= series->series.cols()) return nullptr;
  return series->series.column_names()[index].c_str();
}

hib_status hib_split_borders(size_t rows, double train, double val, double test, size_t* train_end,
                             size_t* val_end) {
  HIB_REQUIRE(train_end && val_end, "outputs must not be NULL");
  return guarded([&] {
    hibench::SplitSpec spec;
    spec.ratios = {train, val, test};
    const auto b = spec.resolve(rows);
    *train_end = b.train_end;
    *val_end = b.val_end;
  });
}

hib_status hib_hi_forecast(const double* input, size_t lookback, size_t cols, size_t horizon,
                           double* out) {
  HIB_REQUIRE(input && out, "input and out must not be NULL");
  return guarded(
      [&] { copy_out(hibench::hi_forecast(view_of(input, lookback, cols), horizon), out); });
}

hib_status hib_seasonal_naive_forecast(const double* input, size_t lookback, size_t cols,
                                       size_t period, size_t horizon, double* out) {
  HIB_REQUIRE(input && out, "input and out must not be NULL");
  return guarded([&] {
    copy_out(hibench::seasonal_naive_forecast(view_of(input, lookback, cols), period, horizon),
             out);
  });
}

hib_status hib_mean_forecast(const double* input, size_t lookback, size_t cols, size_t horizon,
                             double* out) {
  HIB_REQUIRE(input && out, "input and out must not be NULL");
  return guarded(
      [&] { copy_out(hibench::mean_forecast(view_of(input, lookback, cols), horizon), out); });
}

hib_status hib_hybrid_forecast(const double* a, const double* b, size_t count, double alpha,
                               double* out) {
  HIB_REQUIRE(a && b && out, "arrays must not be NULL");
  return guarded([&] {
    const hibench::Matrix ma(count, 1, std::vector<double>(a, a + count));
    const hibench::Matrix mb(count, 1, std::vector<double>(b, b + count));
    copy_out(hibench::hybrid_forecast(ma, mb, hibench::HybridWeight(alpha)), out);
  });
}

namespace {

hib_status score(const double* predictions, const double* truths, size_t windows, size_t rows,
                 size_t cols, double* out, hibench::Metric metric) {
  HIB_REQUIRE(predictions && truths && out, "arrays must not be NULL");
  HIB_REQUIRE(windows > 0 && rows > 0 && cols > 0, "windows, rows and cols must be positive");
  return guarded([&] {
    hibench::WindowErrors errors(windows);
    const size_t block = rows * cols;
    for (size_t w = 0; w < windows; ++w) {
      errors.record(w, view_of(predictions + w * block, rows, cols),
                    view_of(truths + w * block, rows, cols));
    }
    *out = metric == hibench::Metric::kMse ? errors.mse() : errors.mae();
  });
}

}  // namespace

hib_status hib_mse(const double* predictions, const double* truths, size_t windows, size_t rows,
                   size_t cols, double* out) {
  return score(predictions, truths, windows, rows, cols, out, hibench::Metric::kMse);
}

hib_status hib_mae(const double* predictions, const double* truths, size_t windows, size_t rows,
                   size_t cols, double* out) {
  return score(predictions, truths, windows, rows, cols, out, hibench::Metric::kMae);
}

hib_status hib_relative_improvement(double best_reference, double hi, double* out) {
  HIB_REQUIRE(out, "out must not be NULL");
  return guarded([&] { *out = hibench::relative_improvement(best_reference, hi); });
}

hib_status hib_window_count(size_t segment_length, size_t lookback, size_t horizon, size_t offset,
                            size_t stride, size_t* out) {
  HIB_REQUIRE(out, "out must not be NULL");
  return guarded([&] {
    hibench::ForecastTask task;
    task.lookback = lookback;
    task.horizon = horizon;
    task.offset = offset;
    task.stride = stride;
    *out = hibench::window_count(segment_length, task);
  });
}

hib_status hib_detect_period(const double* series, size_t length, size_t min_lag, size_t max_lag,
                             double threshold, size_t* period, double* strength) {
  HIB_REQUIRE(series && period && strength, "arguments must not be NULL");
  return guarded([&] {
    hibench::PeriodSearch search{min_lag, max_lag, threshold};
    const auto est = hibench::detect_period({series, length}, search);
    *period = est.period.value_or(0);
    *strength = est.strength;
  });
}

hib_status hib_config_load(const char* path, const char* data_root, hib_config** out) {
  HIB_REQUIRE(path && out, "path and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::filesystem::path> root;
    if (data_root) root = data_root;
    *out = new hib_config{hibench::load_config(path, root)};
  });
}

void hib_config_free(hib_config* config) { delete config; }

hib_status hib_config_set_out_dir(hib_config* config, const char* out_dir) {
  HIB_REQUIRE(config && out_dir, "config and out_dir must not be NULL");
  config->config.out_dir = out_dir;
  return HIB_OK;
}

hib_status hib_config_set_format(hib_config* config, const char* format) {
  HIB_REQUIRE(config && format, "config and format must not be NULL");
  return guarded([&] { config->config.format = hibench::parse_table_format(format); });
}

hib_status hib_config_set_jobs(hib_config* config, size_t jobs) {
  HIB_REQUIRE(config, "config must not be NULL");
  if (jobs == 0) return fail(HIB_ERR_CONFIG, "jobs must be positive");
  config->config.jobs = jobs;
  return HIB_OK;
}

hib_status hib_config_effective(const hib_config* config, char** text_out) {
  HIB_REQUIRE(config && text_out, "arguments must not be NULL");
  return guarded([&] { *text_out = copy_string(hibench::effective_config(config->config)); });
}

hib_status hib_run_eval(const hib_config* config, const char* dataset, const char* mode,
                        char** summary_out) {
  HIB_REQUIRE(config, "config must not be NULL");
  if (summary_out) *summary_out = nullptr;
  return guarded([&] {
    hibench::EvalOptions options;
    if (dataset) options.dataset = dataset;
    if (mode) options.modes.push_back(hibench::parse_mode(mode));
    const auto result = hibench::run_eval(config->config, options);
    const auto files = hibench::write_eval_outputs(result, config->config, config->config.out_dir);
    if (summary_out) {
      std::string summary;
      for (const auto& f : files) summary += f.string() + "\n";
      *summary_out = copy_string(summary);
    }
  });
}

hib_status hib_run_select(const hib_config* config, const char* dataset, const char* mode,
                          size_t horizon, size_t jobs, char** json_out) {
  HIB_REQUIRE(config && dataset && json_out, "arguments must not be NULL");
  *json_out = nullptr;
  return guarded([&] {
    const std::string m = hibench::parse_mode(mode ? mode : "uni");
    std::optional<std::size_t> j;
    if (jobs > 0) j = jobs;
    const auto result = hibench::run_select(config->config, dataset, m, horizon, j);
    *json_out = copy_string(hibench::selection_report_json(result));
  });
}

hib_status hib_run_detect_period(const hib_config* config, const char* dataset, const char* column,
                                 char** json_out) {
  HIB_REQUIRE(config && dataset && json_out, "arguments must not be NULL");
  *json_out = nullptr;
  return guarded([&] {
    const std::string col = column ? column : config->config.dataset(dataset).target;
    const auto est = hibench::run_detect_period(config->config, dataset, col);
    *json_out = copy_string(hibench::period_estimate_json(est, col));
  });
}

hib_status hib_render_table(const char* delimited_path, const char* format, char** text_out) {
  HIB_REQUIRE(delimited_path && format && text_out, "arguments must not be NULL");
  *text_out = nullptr;
  return guarded([&] {
    std::ifstream in(delimited_path, std::ios::binary);
    if (!in) {
      throw hibench::Error(hibench::ErrorKind::kData,
                           std::string("cannot open '") + delimited_path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto table = hibench::parse_delimited_table(buf.str());
    *text_out = copy_string(hibench::render(table, hibench::parse_table_format(format)));
  });
}

}  // extern "C"
