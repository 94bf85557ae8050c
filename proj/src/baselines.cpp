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

#include "hibench/baselines.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hibench/error.hpp"

namespace hibench {

HybridWeight::HybridWeight(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw_config("hybrid weight must lie in [0, 1], got " + std::to_string(alpha));
  }
}

namespace {

std::vector<std::size_t> resolve_targets(MatrixView input, TargetColumns targets) {
  std::vector<std::size_t> cols;
  if (targets.empty()) {
    cols.resize(input.cols());
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return cols;
  }
  for (std::size_t c : targets) {
    if (c >= input.cols()) {
      throw_data("target column " + std::to_string(c) + " out of range for " +
                 std::to_string(input.cols()) + " input columns");
    }
  }
  return {targets.begin(), targets.end()};
}

void check_horizon(std::size_t horizon) {
  if (horizon == 0) throw_config("horizon must be positive");
}

}  // namespace

Forecast hi_forecast(MatrixView input, std::size_t horizon, TargetColumns targets) {
  check_horizon(horizon);
  if (horizon > input.rows()) {
    throw_config("historical inertia needs horizon <= lookback, got horizon " +
                 std::to_string(horizon) + " with lookback " + std::to_string(input.rows()));
  }
  const auto cols = resolve_targets(input, targets);
  const std::size_t first = input.rows() - horizon;
  Forecast out(horizon, cols.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = input(first + i, cols[j]);
  }
  return out;
}

Forecast seasonal_naive_forecast(MatrixView input, std::size_t period, std::size_t horizon,
                                 TargetColumns targets) {
  check_horizon(horizon);
  if (period == 0) throw_config("seasonal period must be positive");
  if (period > input.rows()) {
    throw_config("seasonal period " + std::to_string(period) + " exceeds lookback " +
                 std::to_string(input.rows()));
  }
  const auto cols = resolve_targets(input, targets);
  const std::size_t first = input.rows() - period;
  Forecast out(horizon, cols.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = input(first + i % period, cols[j]);
    }
  }
  return out;
}

Forecast mean_forecast(MatrixView input, std::size_t horizon, TargetColumns targets) {
  check_horizon(horizon);
  if (input.rows() == 0) throw_config("mean forecast needs a non-empty input");
  const auto cols = resolve_targets(input, targets);
  std::vector<double> means(cols.size(), 0.0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    double sum = 0.0;
    for (std::size_t r = 0; r < input.rows(); ++r) sum += input(r, cols[j]);
    means[j] = sum / static_cast<double>(input.rows());
  }
  Forecast out(horizon, cols.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = means[j];
  }
  return out;
}

Forecast hybrid_forecast(const Forecast& a, const Forecast& b, HybridWeight w) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_data("hybrid inputs differ in shape: " + std::to_string(a.rows()) + "x" +
               std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
               std::to_string(b.cols()));
  }
  const double alpha = w.alpha();
  Forecast out(a.rows(), a.cols());
  auto dst = out.flat();
  const auto x = a.flat();
  const auto y = b.flat();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    // Endpoints return the operand itself, bit for bit.
    if (alpha == 1.0) {
      dst[i] = x[i];
    } else if (alpha == 0.0) {
      dst[i] = y[i];
    } else {
      dst[i] = alpha * x[i] + (1.0 - alpha) * y[i];
    }
  }
  return out;
}

const std::vector<std::string>& predictor_names() {
  static const std::vector<std::string> names{"hi", "seasonal_naive", "mean", "hybrid"};
  return names;
}

namespace {

std::string format_alpha(double alpha) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, alpha);
  return {buf, res.ptr};
}

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (!text.empty() && text.back() == ':') parts.emplace_back();
  return parts;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw_config("invalid " + what + " '" + text + "'");
  }
  return v;
}

double parse_alpha(const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw_config("invalid hybrid weight '" + text + "'");
  }
  return HybridWeight(v).alpha();
}

}  // namespace

std::string PredictorSpec::label() const {
  if (name == "seasonal_naive") {
    return period == 0 ? name : name + ":" + std::to_string(period);
  }
  if (name == "hybrid") {
    std::string out = name + ":" + base;
    if (base == "seasonal_naive" && period != 0) out += ":" + std::to_string(period);
    return out + ":" + format_alpha(alpha);
  }
  return name;
}

std::size_t PredictorSpec::min_lookback(std::size_t horizon) const {
  std::size_t need = 1;
  if (name == "hi" || name == "hybrid") need = horizon;
  if (name == "seasonal_naive" || (name == "hybrid" && base == "seasonal_naive")) {
    need = std::max(need, period);
  }
  return need;
}

bool PredictorSpec::needs_period() const {
  return period == 0 &&
         (name == "seasonal_naive" || (name == "hybrid" && base == "seasonal_naive"));
}

PredictorSpec PredictorSpec::base_spec() const {
  if (name != "hybrid") return *this;
  return {base, period, 1.0, {}};
}

PredictorSpec parse_predictor_spec(const std::string& text) {
  const auto parts = split_colon(text);
  if (parts.empty()) throw_config("empty predictor name");
  const auto& name = parts[0];
  if (name == "hi" || name == "mean") {
    if (parts.size() != 1) throw_config("predictor '" + name + "' takes no parameters");
    return {name, 0, 1.0, {}};
  }
  if (name == "seasonal_naive") {
    if (parts.size() > 2) throw_config("usage: seasonal_naive[:period]");
    const std::size_t period = parts.size() == 2 ? parse_count(parts[1], "period") : 0;
    if (parts.size() == 2 && period == 0) throw_config("seasonal period must be positive");
    return PredictorSpec::seasonal_naive(period);
  }
  if (name == "hybrid") {
    if (parts.size() < 3 || parts.size() > 4) {
      throw_config("usage: hybrid:<base>[:period]:<alpha>");
    }
    PredictorSpec spec{"hybrid", 0, parse_alpha(parts.back()), parts[1]};
    if (spec.base != "mean" && spec.base != "seasonal_naive") {
      throw_config("hybrid base must be 'mean' or 'seasonal_naive', got '" + spec.base + "'");
    }
    if (parts.size() == 4) {
      if (spec.base != "seasonal_naive") throw_config("only a seasonal_naive base takes a period");
      spec.period = parse_count(parts[2], "period");
      if (spec.period == 0) throw_config("seasonal period must be positive");
    }
    return spec;
  }
  throw_config("unknown predictor '" + name + "'");
}

Forecast predict(const PredictorSpec& spec, MatrixView input, std::size_t horizon,
                 TargetColumns targets) {
  if (spec.name == "hi") return hi_forecast(input, horizon, targets);
  if (spec.name == "mean") return mean_forecast(input, horizon, targets);
  if (spec.name == "seasonal_naive") {
    return seasonal_naive_forecast(input, spec.period, horizon, targets);
  }
  if (spec.name == "hybrid") {
    return hybrid_forecast(hi_forecast(input, horizon, targets),
                           predict(spec.base_spec(), input, horizon, targets),
                           HybridWeight(spec.alpha));
  }
  throw_config("unknown predictor '" + spec.name + "'");
}

}  // namespace hibench
