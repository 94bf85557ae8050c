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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>

#include "hibench/data.hpp"
#include "hibench/error.hpp"
#include "oracles.hpp"

namespace hibench {
namespace {

TimeSeries column_series(std::vector<double> values, std::string name = "OT") {
  return {Matrix::column(values), {std::move(name)}};
}

TableSchema schema(std::size_t cols, bool timestamp = false) {
  TableSchema s;
  s.expected_columns = cols;
  s.has_timestamp = timestamp;
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kRuntime;
}

TEST(LoadTable, ParsesSingleColumn) {
  const auto ts = parse_table("v\n1\n2\n3\n", schema(1));
  EXPECT_EQ(ts.values(), Matrix::from_rows({{1}, {2}, {3}}));
  EXPECT_EQ(ts.column_names(), std::vector<std::string>{"v"});
}

TEST(LoadTable, DropsTimestampColumn) {
  const auto ts = parse_table("date,a,OT\n2016-07-01 00:00:00,1.5,2\n2016-07-01 01:00:00,3,4\n",
                              schema(2, true));
  EXPECT_EQ(ts.rows(), 2u);
  EXPECT_EQ(ts.values(), Matrix::from_rows({{1.5, 2}, {3, 4}}));
  EXPECT_EQ(ts.column_names(), (std::vector<std::string>{"a", "OT"}));
}

TEST(LoadTable, HeaderOnlyIsEmptySeries) {
  try {
    parse_table("date,OT\n", schema(1, true));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("empty series"), std::string::npos);
  }
}

TEST(LoadTable, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { parse_table("a\nx\n", schema(1)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a,b\n1,2\n3\n", schema(2)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a,b\n1,2\n", schema(3)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a\nnan\n", schema(1)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a\ninf\n", schema(1)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a\n1e999\n", schema(1)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("", schema(1)); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { parse_table("a,a\n1,2\n", schema(2)); }), ErrorKind::kData);
}

TEST(LoadTable, ChecksDeclaredRowCount) {
  auto s = schema(1);
  s.expected_rows = 4;
  EXPECT_EQ(kind_of([&] { parse_table("a\n1\n2\n3\n", s); }), ErrorKind::kData);
  s.expected_rows = 3;
  EXPECT_EQ(parse_table("a\n1\n2\n3\n", s).rows(), 3u);
}

TEST(LoadTable, MissingFile) {
  EXPECT_EQ(kind_of([] { load_table("/nonexistent/ETTh1.csv", schema(7, true)); }),
            ErrorKind::kData);
}

TEST(LoadTable, DeterministicFromFile) {
  const auto path = std::filesystem::path(HIBENCH_FIXTURES) / "tiny.csv";
  const auto a = load_table(path, schema(2, true));
  const auto b = load_table(path, schema(2, true));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rows(), 120u);
}

TEST(LoadTable, HandlesCrlfAndBom) {
  const auto ts = parse_table("\xEF\xBB\xBFt,v\r\nx,1\r\ny,2\r\n", schema(1, true));
  EXPECT_EQ(ts.column_names()[0], "v");
  EXPECT_EQ(ts.values(), Matrix::from_rows({{1}, {2}}));
}

TEST(SelectTargets, Univariate) {
  const TimeSeries ts(Matrix::from_rows({{1, 10}, {2, 20}}), {"HUFL", "OT"});
  const auto uni = select_targets(ts, TargetMode::univariate("OT"));
  EXPECT_EQ(uni.values(), Matrix::from_rows({{10}, {20}}));
  EXPECT_EQ(uni.column_names(), std::vector<std::string>{"OT"});
  EXPECT_EQ(select_targets(ts, TargetMode::univariate("@last")).values(), uni.values());
}

TEST(SelectTargets, MultivariateIsIdentity) {
  const TimeSeries ts(Matrix::from_rows({{1, 10}, {2, 20}}), {"HUFL", "OT"});
  EXPECT_EQ(select_targets(ts, TargetMode::multivariate()), ts);
}

TEST(SelectTargets, UnknownColumn) {
  const TimeSeries ts(Matrix::from_rows({{1, 10}}), {"HUFL", "OT"});
  EXPECT_EQ(kind_of([&] { select_targets(ts, TargetMode::univariate("nonexistent")); }),
            ErrorKind::kData);
}

TEST(Split, ExactRatio) {
  std::vector<double> v(20);
  std::iota(v.begin(), v.end(), 0.0);
  const auto seg = split(column_series(v), SplitSpec{});
  EXPECT_EQ(seg.train.rows(), 12u);
  EXPECT_EQ(seg.val.rows(), 4u);
  EXPECT_EQ(seg.test.rows(), 4u);
}

TEST(Split, ElectricityBorders) {
  SplitSpec spec;
  spec.ratios = {15, 3, 4};
  const auto b = spec.resolve(26304);
  EXPECT_EQ(b.train_end, oracle::floor_ratio(26304, 15, 22));
  EXPECT_EQ(b.val_end, oracle::floor_ratio(26304, 18, 22));
  EXPECT_EQ(b.train_end, 17934u);
  EXPECT_EQ(b.val_end, 21521u);
}

TEST(Split, FloorRuleOnShortSeries) {
  const auto b = SplitSpec{}.resolve(5);
  EXPECT_EQ(b, (SplitBorders{3, 4, 5}));
}

TEST(Split, EmptySegmentIsAnError) {
  EXPECT_EQ(kind_of([] { SplitSpec{}.resolve(2); }), ErrorKind::kData);
  SplitSpec spec;
  spec.ratios = {1, 0, 1};
  EXPECT_EQ(kind_of([&] { spec.resolve(100); }), ErrorKind::kData);
}

TEST(Split, ExplicitBordersOverrideRatios) {
  SplitSpec spec;
  spec.borders = SplitBorders{8640, 11520, 14400};
  EXPECT_EQ(spec.resolve(17420), (SplitBorders{8640, 11520, 14400}));
  spec.borders = SplitBorders{10, 15, 0};
  EXPECT_EQ(spec.resolve(20), (SplitBorders{10, 15, 20}));
}

TEST(Split, PartitionProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> ratio(1, 20);
  std::uniform_int_distribution<std::size_t> length(10, 5000);
  for (int trial = 0; trial < 300; ++trial) {
    SplitSpec spec;
    spec.ratios = {double(ratio(rng)), double(ratio(rng)), double(ratio(rng))};
    const std::size_t n = length(rng);
    SplitBorders b;
    try {
      b = spec.resolve(n);
    } catch (const Error&) {
      continue;  // a segment rounded to zero rows
    }
    const double sum = spec.ratios[0] + spec.ratios[1] + spec.ratios[2];
    EXPECT_LT(std::abs(double(b.train_end) - n * spec.ratios[0] / sum), 1.0);
    EXPECT_LT(std::abs(double(b.val_end - b.train_end) - n * spec.ratios[1] / sum), 2.0);
    EXPECT_LT(std::abs(double(n - b.val_end) - n * spec.ratios[2] / sum), 1.0 + 1e-9);
    EXPECT_EQ(b.train_end, oracle::floor_ratio(n, std::size_t(spec.ratios[0]), std::size_t(sum)));
  }
}

TEST(Split, ConcatenationReproducesSeries) {
  std::vector<double> v(37);
  std::iota(v.begin(), v.end(), 0.5);
  const auto ts = column_series(v);
  const auto seg = split(ts, SplitSpec{});
  std::vector<double> joined;
  for (const auto* s : {&seg.train, &seg.val, &seg.test}) {
    const auto f = s->values().flat();
    joined.insert(joined.end(), f.begin(), f.end());
  }
  EXPECT_EQ(joined, v);
}

TEST(Scaler, MeanAndPopulationStd) {
  const auto p = fit_scaler(column_series({1, 3}));
  EXPECT_DOUBLE_EQ(p.means[0], 2.0);
  EXPECT_DOUBLE_EQ(p.stds[0], 1.0);
}

TEST(Scaler, TwoColumnsAgainstOracle) {
  const TimeSeries train(Matrix::from_rows({{0, 10}, {2, 10}, {4, 16}}), {"a", "b"});
  const auto p = fit_scaler(train);
  const auto a = oracle::mean_and_population_std({0, 2, 4});
  const auto b = oracle::mean_and_population_std({10, 10, 16});
  EXPECT_NEAR(p.means[0], a.first, 1e-12);
  EXPECT_NEAR(p.stds[0], a.second, 1e-12);
  EXPECT_NEAR(p.means[1], b.first, 1e-12);
  EXPECT_NEAR(p.stds[1], b.second, 1e-12);
  EXPECT_NEAR(p.stds[0], 1.632993161855452, 1e-12);
  EXPECT_NEAR(p.stds[1], 2.8284271247461903, 1e-12);
}

TEST(Scaler, SampleConvention) {
  const auto p = fit_scaler(column_series({1, 3}), StdConvention::kSample);
  EXPECT_NEAR(p.stds[0], std::sqrt(2.0), 1e-15);
}

TEST(Scaler, ConstantColumnNamesColumn) {
  try {
    fit_scaler(column_series({5, 5, 5}, "flat"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("constant column 'flat'"), std::string::npos);
  }
}

TEST(Scaler, ApplyExamples) {
  EXPECT_EQ(apply_scaler(column_series({2}), {{2.0}, {1.0}}).values()(0, 0), 0.0);
  EXPECT_EQ(apply_scaler(column_series({4}), {{2.0}, {2.0}}).values()(0, 0), 1.0);
}

TEST(Scaler, DimensionMismatch) {
  EXPECT_EQ(kind_of([] { apply_scaler(column_series({1, 2}), {{0.0, 0.0}, {1.0, 1.0}}); }),
            ErrorKind::kData);
}

TEST(Scaler, RoundTripAndTrainMoments) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(10, 3);
    for (auto& v : m.flat()) v = u(rng);
    const TimeSeries ts(m, {"x", "y", "z"});
    const auto p = fit_scaler(ts);
    const auto scaled = apply_scaler(ts, p);
    const auto back = invert_scaler(scaled, p);
    for (std::size_t i = 0; i < m.size(); ++i)
      EXPECT_NEAR(back.values().flat()[i], m.flat()[i], 1e-9);
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<double> col;
      for (std::size_t r = 0; r < 10; ++r) col.push_back(scaled.values()(r, c));
      const auto [mean, sd] = oracle::mean_and_population_std(col);
      EXPECT_NEAR(mean, 0.0, 1e-9);
      EXPECT_NEAR(sd, 1.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace hibench
