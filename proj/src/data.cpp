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

#include "hibench/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "hibench/error.hpp"

namespace hibench {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw_data("ragged rows in matrix literal");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {rows.size(), cols, std::move(flat)};
}

Matrix Matrix::column(std::span<const double> values) {
  return {values.size(), 1, std::vector<double>(values.begin(), values.end())};
}

TimeSeries::TimeSeries(Matrix values, std::vector<std::string> column_names,
                       std::string sample_rate)
    : values_(std::move(values)),
      names_(std::move(column_names)),
      sample_rate_(std::move(sample_rate)) {
  if (values_.rows() == 0) throw_data("empty series");
  if (values_.cols() == 0) throw_data("series has no columns");
  if (names_.size() != values_.cols()) {
    throw_data("expected " + std::to_string(values_.cols()) + " column names, got " +
               std::to_string(names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw_data("empty column name");
    if (!seen.insert(name).second) throw_data("duplicate column name '" + name + "'");
  }
  const auto flat = values_.flat();
  const auto bad =
      std::find_if(flat.begin(), flat.end(), [](double v) { return !std::isfinite(v); });
  if (bad != flat.end()) {
    const auto idx = static_cast<std::size_t>(bad - flat.begin());
    throw_data("non-finite value at row " + std::to_string(idx / values_.cols()) + ", column '" +
               names_[idx % values_.cols()] + "'");
  }
}

std::optional<std::size_t> TimeSeries::find_column(const std::string& name) const {
  if (name == "@last") return cols() - 1;
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

TimeSeries TimeSeries::slice_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows()) throw_data("row slice out of range");
  return {Matrix(values_.view().row_range(first, count)), names_, sample_rate_};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

}  // namespace

TimeSeries parse_table(const std::string& text, const TableSchema& schema,
                       const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  // Header, skipping blank lines and a UTF-8 byte order mark.
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!trim(line).empty()) {
      have_header = true;
      break;
    }
  }
  if (!have_header) throw_data(origin + ": missing header row");

  const auto header = split_fields(trim(line));
  const std::size_t skip = schema.has_timestamp ? 1 : 0;
  if (header.size() <= skip) throw_data(origin + ": header has no value columns");
  const std::size_t width = header.size();
  const std::size_t cols = width - skip;
  if (schema.expected_columns != 0 && cols != schema.expected_columns) {
    throw_data(origin + ": expected " + std::to_string(schema.expected_columns) +
               " value columns, found " + std::to_string(cols));
  }
  std::vector<std::string> names;
  names.reserve(cols);
  for (std::size_t c = skip; c < width; ++c) names.push_back(unquote(header[c]));

  std::vector<double> values;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto fields = split_fields(body);
    if (fields.size() != width) {
      throw_data(origin + ":" + std::to_string(line_no) + ": expected " + std::to_string(width) +
                 " fields, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = skip; c < width; ++c) {
      const auto field = fields[c];
      double v = 0.0;
      const auto* end = field.data() + field.size();
      const auto [ptr, ec] = std::from_chars(field.data(), end, v);
      if (field.empty() || ec != std::errc() || ptr != end) {
        throw_data(origin + ":" + std::to_string(line_no) + ": non-numeric value '" +
                   std::string(field) + "' in column '" + names[c - skip] + "'");
      }
      if (!std::isfinite(v)) {
        throw_data(origin + ":" + std::to_string(line_no) + ": non-finite value in column '" +
                   names[c - skip] + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw_data(origin + ": empty series");
  if (schema.expected_rows && rows != *schema.expected_rows) {
    throw_data(origin + ": expected " + std::to_string(*schema.expected_rows) + " rows, found " +
               std::to_string(rows));
  }
  return {Matrix(rows, cols, std::move(values)), std::move(names), schema.sample_rate};
}

TimeSeries load_table(const std::filesystem::path& path, const TableSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_data("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), schema, path.string());
}

TimeSeries select_targets(const TimeSeries& ts, const TargetMode& mode) {
  if (!mode.is_univariate()) return ts;
  const auto col = ts.find_column(mode.column);
  if (!col) throw_data("unknown target column '" + mode.column + "'");
  Matrix values(ts.rows(), 1);
  for (std::size_t r = 0; r < ts.rows(); ++r) values(r, 0) = ts.values()(r, *col);
  return {std::move(values), {ts.column_names()[*col]}, ts.sample_rate()};
}

namespace {

bool is_integral(double v) { return std::floor(v) == v && v < 1e15; }

}  // namespace

SplitBorders SplitSpec::resolve(std::size_t rows) const {
  SplitBorders b;
  if (borders) {
    b = *borders;
    if (b.end == 0) b.end = rows;
  } else {
    for (double r : ratios) {
      if (!(r >= 0.0) || !std::isfinite(r)) throw_config("split ratios must be nonnegative");
    }
    const double sum = ratios[0] + ratios[1] + ratios[2];
    if (!(sum > 0.0)) throw_config("split ratios must sum to a positive value");
    if (is_integral(ratios[0]) && is_integral(ratios[1]) && is_integral(ratios[2])) {
      // Exact integer arithmetic for the common integral ratios.
      const auto n = static_cast<unsigned long long>(rows);
      const auto r0 = static_cast<unsigned long long>(ratios[0]);
      const auto r1 = static_cast<unsigned long long>(ratios[1]);
      const auto s = static_cast<unsigned long long>(sum);
      b.train_end = static_cast<std::size_t>(n * r0 / s);
      b.val_end = static_cast<std::size_t>(n * (r0 + r1) / s);
    } else {
      const auto n = static_cast<long double>(rows);
      b.train_end = static_cast<std::size_t>(std::floor(n * ratios[0] / sum));
      b.val_end = static_cast<std::size_t>(std::floor(n * (ratios[0] + ratios[1]) / sum));
    }
    b.end = rows;
  }
  if (!(0 < b.train_end && b.train_end < b.val_end && b.val_end < b.end && b.end <= rows)) {
    throw_data("invalid split borders (" + std::to_string(b.train_end) + ", " +
               std::to_string(b.val_end) + ", " + std::to_string(b.end) + ") for " +
               std::to_string(rows) + " rows; every segment must be non-empty");
  }
  return b;
}

Segments split(const TimeSeries& ts, const SplitSpec& spec) {
  const auto b = spec.resolve(ts.rows());
  return {ts.slice_rows(0, b.train_end), ts.slice_rows(b.train_end, b.val_end - b.train_end),
          ts.slice_rows(b.val_end, b.end - b.val_end)};
}

ScalerParams fit_scaler(const TimeSeries& train, StdConvention convention) {
  const std::size_t n = train.rows();
  const std::size_t d = train.cols();
  if (convention == StdConvention::kSample && n < 2) {
    throw_data("sample standard deviation needs at least two rows");
  }
  ScalerParams p{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  const auto& v = train.values();
  for (std::size_t c = 0; c < d; ++c) {
    double lo = v(0, c);
    double hi = v(0, c);
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      sum += v(r, c);
      lo = std::min(lo, v(r, c));
      hi = std::max(hi, v(r, c));
    }
    if (lo == hi) {
      throw_data("constant column '" + train.column_names()[c] +
                 "' in training segment cannot be standardized");
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double dev = v(r, c) - mean;
      ss += dev * dev;
    }
    const double denom = static_cast<double>(convention == StdConvention::kSample ? n - 1 : n);
    p.means[c] = mean;
    p.stds[c] = std::sqrt(ss / denom);
  }
  return p;
}

namespace {

void check_dims(std::size_t cols, const ScalerParams& p) {
  if (p.means.size() != cols || p.stds.size() != cols) {
    throw_data("scaler fitted on " + std::to_string(p.means.size()) + " columns applied to " +
               std::to_string(cols));
  }
}

}  // namespace

void apply_scaler_inplace(Matrix& values, const ScalerParams& p) {
  check_dims(values.cols(), p);
  for (std::size_t r = 0; r < values.rows(); ++r) {
    auto row = values.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = (row[c] - p.means[c]) / p.stds[c];
  }
}

void invert_scaler_inplace(Matrix& values, const ScalerParams& p) {
  check_dims(values.cols(), p);
  for (std::size_t r = 0; r < values.rows(); ++r) {
    auto row = values.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = row[c] * p.stds[c] + p.means[c];
  }
}

TimeSeries apply_scaler(const TimeSeries& ts, const ScalerParams& p) {
  Matrix values = ts.values();
  apply_scaler_inplace(values, p);
  return {std::move(values), ts.column_names(), ts.sample_rate()};
}

TimeSeries invert_scaler(const TimeSeries& ts, const ScalerParams& p) {
  Matrix values = ts.values();
  invert_scaler_inplace(values, p);
  return {std::move(values), ts.column_names(), ts.sample_rate()};
}

}  // namespace hibench
