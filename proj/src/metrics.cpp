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

#include "hibench/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hibench/error.hpp"

namespace hibench {

namespace detail {
extern const char* const kBundledReferenceScores;
}  // namespace detail

std::string metric_label(Metric m) { return m == Metric::kMse ? "MSE" : "MAE"; }

Metric parse_metric(const std::string& text) {
  if (text == "MSE" || text == "mse") return Metric::kMse;
  if (text == "MAE" || text == "mae") return Metric::kMae;
  throw_config("unknown metric '" + text + "'");
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 64;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void WindowErrors::record(std::size_t window, MatrixView prediction, MatrixView truth) {
  if (window >= squared_.size()) throw_runtime("window index out of range");
  if (prediction.rows() != truth.rows() || prediction.cols() != truth.cols()) {
    throw_data("prediction shape " + std::to_string(prediction.rows()) + "x" +
               std::to_string(prediction.cols()) + " does not match target shape " +
               std::to_string(truth.rows()) + "x" + std::to_string(truth.cols()));
  }
  const std::size_t cells = prediction.rows() * prediction.cols();
  if (cells == 0) throw_data("empty prediction window");
  double sq = 0.0;
  double ab = 0.0;
  for (std::size_t i = 0; i < prediction.rows(); ++i) {
    const auto p = prediction.row(i);
    const auto t = truth.row(i);
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double e = p[j] - t[j];
      sq += e * e;
      ab += std::abs(e);
    }
  }
  squared_[window] = sq / static_cast<double>(cells);
  absolute_[window] = ab / static_cast<double>(cells);
}

double WindowErrors::mse() const {
  if (squared_.empty()) throw_data("no windows to score");
  return pairwise_sum(squared_) / static_cast<double>(squared_.size());
}

double WindowErrors::mae() const {
  if (absolute_.empty()) throw_data("no windows to score");
  return pairwise_sum(absolute_) / static_cast<double>(absolute_.size());
}

namespace {

WindowErrors score_lists(std::span<const Matrix> predictions, std::span<const Matrix> truths) {
  if (predictions.empty()) throw_data("no windows to score");
  if (predictions.size() != truths.size()) {
    throw_data(std::to_string(predictions.size()) + " predictions for " +
               std::to_string(truths.size()) + " targets");
  }
  const std::size_t rows = predictions.front().rows();
  const std::size_t cols = predictions.front().cols();
  WindowErrors errors(predictions.size());
  for (std::size_t w = 0; w < predictions.size(); ++w) {
    if (predictions[w].rows() != rows || predictions[w].cols() != cols) {
      throw_data("window " + std::to_string(w) + " differs in shape from window 0");
    }
    errors.record(w, predictions[w].view(), truths[w].view());
  }
  return errors;
}

}  // namespace

double mse(std::span<const Matrix> predictions, std::span<const Matrix> truths) {
  return score_lists(predictions, truths).mse();
}

double mae(std::span<const Matrix> predictions, std::span<const Matrix> truths) {
  return score_lists(predictions, truths).mae();
}

double relative_improvement(double best_sota, double hi) {
  if (!(best_sota > 0.0) || !std::isfinite(best_sota)) {
    throw_data("best reference score must be positive, got " + std::to_string(best_sota));
  }
  return (best_sota - hi) / best_sota;
}

// ---- reference scores ----------------------------------------------------

void ReferenceScores::add(const ReferenceKey& key, ReferenceEntry entry) {
  if (!(entry.value > 0.0) || !std::isfinite(entry.value)) {
    throw_data("reference score for " + entry.model + " must be positive");
  }
  if (entry.model == "HI") {
    published_hi_[key] = entry.value;
    return;
  }
  auto& order = model_order_[key.mode];
  if (std::find(order.begin(), order.end(), entry.model) == order.end()) {
    order.push_back(entry.model);
  }
  auto& list = entries_[key];
  for (const auto& e : list) {
    if (e.model == entry.model) {
      throw_data("duplicate reference score for " + entry.model + " at " + key.dataset + "/" +
                 key.mode + "/" + std::to_string(key.horizon) + "/" + metric_label(key.metric));
    }
  }
  list.push_back(std::move(entry));
}

bool ReferenceScores::has_dataset(const std::string& dataset, const std::string& mode) const {
  for (const auto& [key, list] : entries_) {
    if (key.dataset == dataset && key.mode == mode) return true;
  }
  return false;
}

const std::vector<ReferenceEntry>& ReferenceScores::entries(const ReferenceKey& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end() || it->second.empty()) {
    throw_data("no reference scores for " + key.dataset + "/" + key.mode + "/" +
               std::to_string(key.horizon) + "/" + metric_label(key.metric));
  }
  return it->second;
}

std::optional<double> ReferenceScores::published_hi(const ReferenceKey& key) const {
  const auto it = published_hi_.find(key);
  if (it == published_hi_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> ReferenceScores::models(const std::string& mode) const {
  const auto it = model_order_.find(mode);
  return it == model_order_.end() ? std::vector<std::string>{} : it->second;
}

std::size_t ReferenceScores::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [key, list] : entries_) n += list.size();
  return n;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(0, 1);
    out.push_back(field);
  }
  return out;
}

}  // namespace

ReferenceScores ReferenceScores::parse(const std::string& text, const std::string& origin) {
  ReferenceScores refs;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      constexpr std::string_view kVersion = "# version:";
      if (line.rfind(kVersion, 0) == 0) {
        refs.version_ = line.substr(kVersion.size());
        refs.version_.erase(0, refs.version_.find_first_not_of(' '));
      }
      continue;
    }
    const auto f = split_csv(line);
    const auto where = origin + ":" + std::to_string(line_no);
    if (!header) {
      if (f != std::vector<std::string>{"dataset", "mode", "horizon", "metric", "model", "value"}) {
        throw_data(where + ": unexpected header");
      }
      header = true;
      continue;
    }
    if (f.size() != 6) throw_data(where + ": expected 6 fields");
    ReferenceKey key{f[0], f[1], 0, Metric::kMse};
    if (key.mode != "univariate" && key.mode != "multivariate") {
      throw_data(where + ": unknown mode '" + key.mode + "'");
    }
    const auto [hp, hec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), key.horizon);
    if (hec != std::errc() || hp != f[2].data() + f[2].size() || key.horizon == 0) {
      throw_data(where + ": invalid horizon '" + f[2] + "'");
    }
    try {
      key.metric = parse_metric(f[3]);
    } catch (const Error&) {
      throw_data(where + ": unknown metric '" + f[3] + "'");
    }
    double value = 0.0;
    const auto [vp, vec] = std::from_chars(f[5].data(), f[5].data() + f[5].size(), value);
    if (vec != std::errc() || vp != f[5].data() + f[5].size()) {
      throw_data(where + ": invalid value '" + f[5] + "'");
    }
    refs.add(key, {f[4], value});
  }
  if (!header) throw_data(origin + ": missing header");
  return refs;
}

ReferenceScores ReferenceScores::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_data("cannot open reference scores '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const ReferenceScores& ReferenceScores::bundled() {
  static const ReferenceScores refs = parse(detail::kBundledReferenceScores, "<bundled>");
  return refs;
}

ReferenceEntry best_reference(const ReferenceScores& refs, const ReferenceKey& key) {
  const auto& list = refs.entries(key);
  const ReferenceEntry* best = &list.front();
  for (const auto& e : list) {
    if (e.value < best->value) best = &e;
  }
  return *best;
}

}  // namespace hibench
