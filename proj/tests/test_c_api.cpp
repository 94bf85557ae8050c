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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "hibench/hibench.h"

namespace {

namespace fs = std::filesystem;

const std::string kFixtures = HIBENCH_FIXTURES;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  hib_string_free(s);
  return out;
}

TEST(CApi, Version) { EXPECT_STREQ(hib_version(), "1.0.0"); }

TEST(CApi, SeriesFromValues) {
  const double v[] = {1, 2, 3, 4, 5, 6};
  hib_series* s = nullptr;
  ASSERT_EQ(hib_series_from_values(v, 3, 2, &s), HIB_OK);
  EXPECT_EQ(hib_series_rows(s), 3u);
  EXPECT_EQ(hib_series_cols(s), 2u);
  EXPECT_EQ(hib_series_values(s)[5], 6.0);
  EXPECT_STREQ(hib_series_column_name(s, 1), "c1");
  EXPECT_EQ(hib_series_column_name(s, 2), nullptr);
  hib_series_free(s);
}

TEST(CApi, SeriesLoadErrors) {
  hib_series* s = nullptr;
  ASSERT_EQ(hib_series_load((kFixtures + "/tiny.csv").c_str(), 2, 1, &s), HIB_OK);
  EXPECT_EQ(hib_series_rows(s), 120u);
  EXPECT_STREQ(hib_series_column_name(s, 1), "OT");
  hib_series_free(s);
  EXPECT_EQ(hib_series_load("/nonexistent.csv", 0, 1, &s), HIB_ERR_DATA);
  EXPECT_NE(std::strlen(hib_last_error()), 0u);
  EXPECT_EQ(hib_series_load(nullptr, 0, 1, &s), HIB_ERR_ARGUMENT);
  const double nan_value[] = {std::numeric_limits<double>::quiet_NaN()};
  EXPECT_EQ(hib_series_from_values(nan_value, 1, 1, &s), HIB_ERR_DATA);
}

TEST(CApi, Forecasts) {
  const double in[] = {1, 2, 3, 4};
  double out[4] = {};
  ASSERT_EQ(hib_hi_forecast(in, 4, 1, 2, out), HIB_OK);
  EXPECT_EQ(out[0], 3.0);
  EXPECT_EQ(out[1], 4.0);
  EXPECT_EQ(hib_hi_forecast(in, 4, 1, 5, out), HIB_ERR_CONFIG);
  const double cyc[] = {1, 2, 1, 2};
  ASSERT_EQ(hib_seasonal_naive_forecast(cyc, 4, 1, 2, 3, out), HIB_OK);
  EXPECT_EQ(out[2], 1.0);
  ASSERT_EQ(hib_mean_forecast(in, 2, 2, 1, out), HIB_OK);
  EXPECT_EQ(out[0], 2.0);
  EXPECT_EQ(out[1], 3.0);
  const double a[] = {2}, b[] = {4};
  ASSERT_EQ(hib_hybrid_forecast(a, b, 1, 0.5, out), HIB_OK);
  EXPECT_EQ(out[0], 3.0);
  EXPECT_EQ(hib_hybrid_forecast(a, b, 1, 1.5, out), HIB_ERR_CONFIG);
}

TEST(CApi, Metrics) {
  const double p[] = {3, 4}, y[] = {5, 6};
  double v = 0;
  ASSERT_EQ(hib_mse(p, y, 1, 1, 2, &v), HIB_OK);
  EXPECT_EQ(v, 4.0);
  ASSERT_EQ(hib_mae(p, y, 1, 1, 2, &v), HIB_OK);
  EXPECT_EQ(v, 2.0);
  ASSERT_EQ(hib_relative_improvement(0.092, 0.046, &v), HIB_OK);
  EXPECT_NEAR(v, 0.5, 1e-12);
  EXPECT_EQ(hib_relative_improvement(0.0, 0.046, &v), HIB_ERR_DATA);
  EXPECT_EQ(hib_mse(p, y, 0, 1, 2, &v), HIB_ERR_ARGUMENT);
}

TEST(CApi, WindowsAndSplit) {
  std::size_t n = 0;
  ASSERT_EQ(hib_window_count(10, 4, 2, 1, 1, &n), HIB_OK);
  EXPECT_EQ(n, 5u);
  EXPECT_EQ(hib_window_count(10, 0, 2, 1, 1, &n), HIB_ERR_CONFIG);
  std::size_t b1 = 0, b2 = 0;
  ASSERT_EQ(hib_split_borders(26304, 15, 3, 4, &b1, &b2), HIB_OK);
  EXPECT_EQ(b1, 17934u);
  EXPECT_EQ(b2, 21521u);
}

TEST(CApi, DetectPeriod) {
  std::vector<double> x(2400);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(2 * M_PI * double(i) / 24.0);
  std::size_t period = 0;
  double strength = 0;
  ASSERT_EQ(hib_detect_period(x.data(), x.size(), 2, 100, 0.3, &period, &strength), HIB_OK);
  EXPECT_EQ(period, 24u);
  EXPECT_GT(strength, 0.9);
  EXPECT_EQ(hib_detect_period(x.data(), x.size(), 50, 10, 0.3, &period, &strength), HIB_ERR_CONFIG);
}

TEST(CApi, Harness) {
  hib_config* c = nullptr;
  ASSERT_EQ(hib_config_load((kFixtures + "/smoke.ini").c_str(), nullptr, &c), HIB_OK);
  const fs::path out = fs::temp_directory_path() / "hibench_c_api_out";
  fs::remove_all(out);
  ASSERT_EQ(hib_config_set_out_dir(c, out.c_str()), HIB_OK);
  ASSERT_EQ(hib_config_set_format(c, "plain"), HIB_OK);
  EXPECT_EQ(hib_config_set_format(c, "html"), HIB_ERR_CONFIG);
  EXPECT_EQ(hib_config_set_jobs(c, 0), HIB_ERR_CONFIG);
  ASSERT_EQ(hib_config_set_jobs(c, 2), HIB_OK);

  char* text = nullptr;
  ASSERT_EQ(hib_config_effective(c, &text), HIB_OK);
  EXPECT_NE(take(text).find("[dataset.tiny]"), std::string::npos);

  char* summary = nullptr;
  ASSERT_EQ(hib_run_eval(c, nullptr, "uni", &summary), HIB_OK) << hib_last_error();
  EXPECT_NE(take(summary).find("table_univariate.txt"), std::string::npos);
  EXPECT_TRUE(fs::exists(out / "metrics.json"));

  char* rendered = nullptr;
  ASSERT_EQ(hib_render_table((out / "table_univariate.csv").c_str(), "markdown", &rendered),
            HIB_OK);
  EXPECT_NE(take(rendered).find("| HI"), std::string::npos);

  char* json = nullptr;
  ASSERT_EQ(hib_run_select(c, "tiny", "uni", 4, 0, &json), HIB_OK) << hib_last_error();
  EXPECT_NE(take(json).find("\"chosen\""), std::string::npos);
  ASSERT_EQ(hib_run_detect_period(c, "tiny", nullptr, &json), HIB_OK) << hib_last_error();
  EXPECT_NE(take(json).find("\"column\": \"OT\""), std::string::npos);
  EXPECT_EQ(hib_run_select(c, "ghost", "uni", 4, 0, &json), HIB_ERR_CONFIG);
  EXPECT_EQ(hib_run_eval(c, nullptr, "sideways", nullptr), HIB_ERR_CONFIG);

  hib_config_free(c);
  fs::remove_all(out);
  EXPECT_EQ(hib_config_load("/nonexistent.ini", nullptr, &c), HIB_ERR_CONFIG);
}

}  // namespace
