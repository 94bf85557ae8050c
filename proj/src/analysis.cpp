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

#include "hibench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "hibench/error.hpp"
#include "hibench/evaluate.hpp"

namespace hibench {

std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (max_lag == 0) throw_config("max_lag must be at least 1");
  if (n < max_lag + 2) {
    throw_data("autocorrelation up to lag " + std::to_string(max_lag) + " needs at least " +
               std::to_string(max_lag + 2) + " points, got " + std::to_string(n));
  }
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  if (*lo == *hi) throw_data("constant series has no autocorrelation");

  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> centered(n);
  double denom = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    centered[i] = series[i] - mean;
    denom += centered[i] * centered[i];
  }
  std::vector<double> acf(max_lag);
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) num += centered[i] * centered[i + k];
    acf[k - 1] = num / denom;
  }
  return acf;
}

void PeriodSearch::validate() const {
  if (min_lag < 1) throw_config("acf search range must start at lag 1 or later");
  if (min_lag > max_lag) {
    throw_config("invalid acf search range [" + std::to_string(min_lag) + ", " +
                 std::to_string(max_lag) + "]");
  }
  if (!(threshold >= -1.0 && threshold <= 1.0)) {
    throw_config("acf threshold must lie in [-1, 1]");
  }
}

PeriodEstimate detect_period(std::span<const double> series, const PeriodSearch& search) {
  search.validate();
  // One extra lag so max_lag itself can be tested as a local maximum.
  const std::size_t n = series.size();
  const std::size_t lags = (n >= search.max_lag + 3) ? search.max_lag + 1 : search.max_lag;
  const auto acf = autocorrelation(series, lags);
  auto at = [&](std::size_t lag) { return lag == 0 ? 1.0 : acf[lag - 1]; };

  PeriodEstimate best;
  bool found = false;
  for (std::size_t k = search.min_lag; k <= search.max_lag; ++k) {
    const bool rises = at(k) > at(k - 1);
    const bool holds = k + 1 > lags || at(k) >= at(k + 1);
    if (!(rises && holds)) continue;
    if (!found || at(k) > best.strength) {
      best.period = k;
      best.strength = at(k);
      found = true;
    }
  }
  if (found && best.strength < search.threshold) best.period.reset();
  return best;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

std::vector<PredictorSpec> default_candidates(const std::vector<PredictorSpec>& bases,
                                              const std::vector<double>& alpha_grid) {
  std::vector<PredictorSpec> out{PredictorSpec::hi()};
  for (const auto& b : bases) {
    if (b.name == "hi" || b.name == "hybrid") {
      throw_config("selector base must be a non-HI predictor, got '" + b.label() + "'");
    }
    out.push_back(b);
  }
  for (const auto& b : bases) {
    for (double a : alpha_grid) out.push_back(PredictorSpec::hybrid(b, HybridWeight(a).alpha()));
  }
  return out;
}

const CandidateScore& SelectionResult::chosen_score() const {
  for (const auto& s : scores) {
    if (s.spec == chosen) return s;
  }
  throw_runtime("chosen predictor has no score");
}

namespace {

// Tie-break order: HI, then plain bases, then hybrids by ascending alpha.
std::tuple<int, double> simplicity(const PredictorSpec& spec) {
  if (spec.name == "hi") return {0, 0.0};
  if (spec.name == "hybrid") return {2, spec.alpha};
  return {1, 0.0};
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

std::string describe_period(const PeriodEstimate& p, std::size_t horizon,
                            const PeriodSearch& search) {
  if (!p.period) {
    return "no period detected (strongest local acf " + fmt(p.strength) + " below threshold " +
           fmt(search.threshold) + ")";
  }
  const std::size_t period = *p.period;
  std::string out = "detected period " + std::to_string(period) + " (acf " + fmt(p.strength) +
                    "); horizon " + std::to_string(horizon);
  if (horizon % period == 0) {
    out += " is a whole multiple of the period, so HI is phase-aligned";
  } else if (horizon >= period) {
    out += " covers the period but is not a multiple of it";
  } else {
    out += " is shorter than the period";
  }
  return out;
}

}  // namespace

SelectionResult select_predictor(const TimeSeries& train, const TimeSeries& val,
                                 const ForecastTask& task, const SelectionOptions& options) {
  task.validate();
  options.period_search.validate();
  if (train.cols() != val.cols()) throw_data("train and validation differ in column count");
  if (window_count(val.rows(), task) == 0) {
    throw_data("validation segment of " + std::to_string(val.rows()) +
               " rows admits no window; need at least " +
               std::to_string(task.min_segment_length()) + " rows");
  }
  if (options.candidates.empty()) throw_config("no selection candidates");

  std::size_t period_col = train.cols() - 1;
  if (options.period_column) {
    const auto c = train.find_column(*options.period_column);
    if (!c) throw_data("unknown column '" + *options.period_column + "'");
    period_col = *c;
  }
  std::vector<double> column(train.rows());
  for (std::size_t r = 0; r < train.rows(); ++r) column[r] = train.values()(r, period_col);

  SelectionResult result;
  result.period = detect_period(column, options.period_search);
  result.horizon = task.horizon;
  result.objective = metric_label(options.objective);

  Matrix scored = val.values();
  if (options.scale) apply_scaler_inplace(scored, fit_scaler(train));

  std::vector<std::string> notes;
  std::vector<PredictorSpec> candidates;
  for (auto spec : options.candidates) {
    if (spec.needs_period()) {
      if (!result.period.period) {
        notes.push_back("dropped " + spec.label() + ": no period detected");
        continue;
      }
      spec.period = *result.period.period;
    }
    if (spec.min_lookback(task.horizon) > task.lookback) {
      notes.push_back("dropped " + spec.label() +
                      ": needs lookback >= " + std::to_string(spec.min_lookback(task.horizon)));
      continue;
    }
    if (std::find(candidates.begin(), candidates.end(), spec) == candidates.end()) {
      candidates.push_back(spec);
    }
  }
  if (candidates.empty()) throw_config("no admissible selection candidate for this task");

  for (const auto& spec : candidates) {
    const auto report = evaluate_segment(scored.view(), task, spec, options.jobs);
    result.window_count = report.window_count;
    result.scores.push_back({spec, report.mse, report.mae});
  }

  auto objective = [&](const CandidateScore& s) {
    return options.objective == Metric::kMse ? s.mse : s.mae;
  };
  // Scores within rounding noise of the minimum count as ties, so a perfect
  // HI fit is not beaten by a hybrid that differs only in the last bits.
  double lowest = objective(result.scores.front());
  for (const auto& s : result.scores) lowest = std::min(lowest, objective(s));
  const double slack = kSelectionTolerance * lowest + kSelectionFloor;
  const CandidateScore* best = nullptr;
  for (const auto& s : result.scores) {
    if (objective(s) > lowest + slack) continue;
    if (best == nullptr || simplicity(s.spec) < simplicity(best->spec)) best = &s;
  }
  result.chosen = best->spec;

  std::string rationale = describe_period(result.period, task.horizon, options.period_search);
  rationale += "; chose " + result.chosen.label() + " with the lowest validation " +
               result.objective + " " + fmt(objective(*best), 6) + " over " +
               std::to_string(result.window_count) + " windows";
  if (result.chosen.name == "hybrid" && result.chosen.alpha > 0.0 && result.chosen.alpha < 1.0) {
    rationale += " (intermediate hybrid weight)";
  }
  for (const auto& n : notes) rationale += "; " + n;
  result.rationale = rationale;
  return result;
}

namespace {

nlohmann::ordered_json period_json(const PeriodEstimate& p) {
  nlohmann::ordered_json j;
  j["period"] = p.period ? nlohmann::ordered_json(*p.period) : nlohmann::ordered_json(nullptr);
  j["strength"] = p.strength;
  return j;
}

}  // namespace

std::string selection_report_json(const SelectionResult& r) {
  nlohmann::ordered_json j;
  j["chosen"] = r.chosen.label();
  j["objective"] = r.objective;
  j["horizon"] = r.horizon;
  j["windows"] = r.window_count;
  j["detected_period"] = period_json(r.period);
  auto scores = nlohmann::ordered_json::array();
  for (const auto& s : r.scores) {
    scores.push_back({{"predictor", s.spec.label()}, {"mse", s.mse}, {"mae", s.mae}});
  }
  j["scores"] = std::move(scores);
  j["rationale"] = r.rationale;
  return j.dump(2) + "\n";
}

std::string period_estimate_json(const PeriodEstimate& estimate, const std::string& column) {
  nlohmann::ordered_json j;
  j["column"] = column;
  const auto p = period_json(estimate);
  j["period"] = p["period"];
  j["strength"] = p["strength"];
  return j.dump(2) + "\n";
}

}  // namespace hibench
