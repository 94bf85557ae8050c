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

/* C interface to the hibench forecasting harness.
 *
 * Every function returning hib_status reports failures through the status
 * code; hib_last_error() then describes the most recent failure on the
 * calling thread. Handles are opaque and owned by the caller, who releases
 * them with the matching *_free function. Strings returned through char**
 * out-parameters are released with hib_string_free().
 *
 * Matrices are passed as row-major arrays of doubles.
 */

#ifndef HIBENCH_HIBENCH_H_
#define HIBENCH_HIBENCH_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HIBENCH_BUILDING_LIBRARY)
#    define HIBENCH_API __declspec(dllexport)
#  else
#    define HIBENCH_API __declspec(dllimport)
#  endif
#else
#  define HIBENCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1-3 match the CLI exit codes. */
typedef enum hib_status {
  HIB_OK = 0,
  HIB_ERR_CONFIG = 1,
  HIB_ERR_DATA = 2,
  HIB_ERR_RUNTIME = 3,
  HIB_ERR_ARGUMENT = 4
} hib_status;

typedef struct hib_series hib_series;
typedef struct hib_config hib_config;

HIBENCH_API const char* hib_version(void);
HIBENCH_API const char* hib_last_error(void);
HIBENCH_API void hib_string_free(char* str);

/* ---- series ---------------------------------------------------------- */

/* Loads a comma-separated file with a header row. `columns` is the expected
 * number of value columns (0 accepts any); a leading timestamp column is
 * dropped when `has_timestamp` is non-zero. */
HIBENCH_API hib_status hib_series_load(const char* path, size_t columns, int has_timestamp,
                                       hib_series** out);
HIBENCH_API hib_status hib_series_from_values(const double* values, size_t rows, size_t cols,
                                              hib_series** out);
HIBENCH_API void hib_series_free(hib_series* series);
HIBENCH_API size_t hib_series_rows(const hib_series* series);
HIBENCH_API size_t hib_series_cols(const hib_series* series);
/* Row-major values, valid until the handle is freed. */
HIBENCH_API const double* hib_series_values(const hib_series* series);
HIBENCH_API const char* hib_series_column_name(const hib_series* series, size_t index);

/* Split borders (train_end, val_end) for `rows` rows under the given ratios. */
HIBENCH_API hib_status hib_split_borders(size_t rows, double train, double val, double test,
                                         size_t* train_end, size_t* val_end);

/* ---- forecasting primitives ----------------------------------------- */

/* `out` receives horizon x cols values. */
HIBENCH_API hib_status hib_hi_forecast(const double* input, size_t lookback, size_t cols,
                                       size_t horizon, double* out);
HIBENCH_API hib_status hib_seasonal_naive_forecast(const double* input, size_t lookback,
                                                   size_t cols, size_t period, size_t horizon,
                                                   double* out);
HIBENCH_API hib_status hib_mean_forecast(const double* input, size_t lookback, size_t cols,
                                         size_t horizon, double* out);
/* out[i] = alpha * a[i] + (1 - alpha) * b[i] */
HIBENCH_API hib_status hib_hybrid_forecast(const double* a, const double* b, size_t count,
                                           double alpha, double* out);

/* `windows` consecutive blocks of rows x cols, for both arrays. */
HIBENCH_API hib_status hib_mse(const double* predictions, const double* truths,
                               size_t windows, size_t rows, size_t cols, double* out);
HIBENCH_API hib_status hib_mae(const double* predictions, const double* truths,
                               size_t windows, size_t rows, size_t cols, double* out);
HIBENCH_API hib_status hib_relative_improvement(double best_reference, double hi, double* out);

/* Number of windows a segment admits. */
HIBENCH_API hib_status hib_window_count(size_t segment_length, size_t lookback, size_t horizon,
                                        size_t offset, size_t stride, size_t* out);

/* `period` is set to 0 when no period is found. */
HIBENCH_API hib_status hib_detect_period(const double* series, size_t length, size_t min_lag,
                                         size_t max_lag, double threshold, size_t* period,
                                         double* strength);

/* ---- harness --------------------------------------------------------- */

/* `data_root` may be NULL. */
HIBENCH_API hib_status hib_config_load(const char* path, const char* data_root,
                                       hib_config** out);
HIBENCH_API void hib_config_free(hib_config* config);
HIBENCH_API hib_status hib_config_set_out_dir(hib_config* config, const char* out_dir);
/* "plain", "markdown" or "delimited". */
HIBENCH_API hib_status hib_config_set_format(hib_config* config, const char* format);
HIBENCH_API hib_status hib_config_set_jobs(hib_config* config, size_t jobs);
/* Effective configuration as INI text. */
HIBENCH_API hib_status hib_config_effective(const hib_config* config, char** text_out);

/* Runs the evaluation and writes report files to the configured out_dir.
 * `dataset` and `mode` ("uni", "multi") may be NULL to run everything.
 * `summary_out` may be NULL; otherwise it receives a newline-separated list of
 * written files. */
HIBENCH_API hib_status hib_run_eval(const hib_config* config, const char* dataset,
                                    const char* mode, char** summary_out);

/* Selection report as JSON. `jobs` of 0 uses the configured value. */
HIBENCH_API hib_status hib_run_select(const hib_config* config, const char* dataset,
                                      const char* mode, size_t horizon, size_t jobs,
                                      char** json_out);

/* Period estimate of one column of the training segment, as JSON. */
HIBENCH_API hib_status hib_run_detect_period(const hib_config* config, const char* dataset,
                                             const char* column, char** json_out);

/* Re-renders a delimited table file in another format. */
HIBENCH_API hib_status hib_render_table(const char* delimited_path, const char* format,
                                        char** text_out);

#ifdef __cplusplus
}
#endif

#endif  /* HIBENCH_HIBENCH_H_ */
