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

#include "hibench/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "hibench/error.hpp"

namespace hibench {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Section {
 public:
  Section(std::string name, const pt::ptree& tree, std::set<std::string> allowed)
      : name_(std::move(name)), tree_(tree) {
    for (const auto& [key, child] : tree_) {
      if (!child.empty()) throw_config("[" + name_ + "] nested keys are not supported");
      if (!allowed.count(key)) throw_config("[" + name_ + "] unknown key '" + key + "'");
    }
  }

  std::optional<std::string> text(const std::string& key) const {
    const auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return trim(*v);
  }

  std::string required(const std::string& key) const {
    auto v = text(key);
    if (!v || v->empty()) throw_config("[" + name_ + "] missing required key '" + key + "'");
    return *v;
  }

  std::optional<std::size_t> count(const std::string& key) const {
    const auto v = text(key);
    if (!v) return std::nullopt;
    return to_count(*v, key);
  }

  std::optional<double> real(const std::string& key) const {
    const auto v = text(key);
    if (!v) return std::nullopt;
    return to_real(*v, key);
  }

  std::optional<bool> flag(const std::string& key) const {
    const auto v = text(key);
    if (!v) return std::nullopt;
    if (*v == "true" || *v == "yes" || *v == "1") return true;
    if (*v == "false" || *v == "no" || *v == "0") return false;
    throw_config("[" + name_ + "] " + key + ": expected true or false, got '" + *v + "'");
  }

  std::size_t to_count(const std::string& v, const std::string& key) const {
    std::size_t out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
      throw_config("[" + name_ + "] " + key + ": expected a nonnegative integer, got '" + v + "'");
    }
    return out;
  }

  double to_real(const std::string& v, const std::string& key) const {
    double out = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
      throw_config("[" + name_ + "] " + key + ": expected a number, got '" + v + "'");
    }
    return out;
  }

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  const pt::ptree& tree_;
};

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& root) {
  if (p.is_absolute() || root.empty()) return p;
  return root / p;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string real_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

DatasetConfig parse_dataset(const Section& s, const std::string& name,
                            const std::filesystem::path& root) {
  DatasetConfig d;
  d.name = name;
  d.path = resolve(s.required("path"), root);
  d.schema.expected_columns = s.to_count(s.required("columns"), "columns");
  if (d.schema.expected_columns == 0) throw_config("[" + s.name() + "] columns must be positive");
  d.schema.has_timestamp = s.flag("timestamp").value_or(true);
  d.schema.expected_rows = s.count("rows");
  d.schema.sample_rate = s.text("sample_rate").value_or("");
  d.target = s.text("target").value_or("@last");
  if (d.target.empty()) throw_config("[" + s.name() + "] target must not be empty");

  if (const auto split = s.text("split")) {
    const auto parts = split_list(*split, ':');
    if (parts.size() != 3) throw_config("[" + s.name() + "] split must look like 12:4:4");
    for (std::size_t i = 0; i < 3; ++i) d.split.ratios[i] = s.to_real(parts[i], "split");
  }
  if (const auto borders = s.text("borders")) {
    const auto parts = split_list(*borders);
    if (parts.size() != 2 && parts.size() != 3) {
      throw_config("[" + s.name() + "] borders must be train_end,val_end[,end]");
    }
    SplitBorders b;
    b.train_end = s.to_count(parts[0], "borders");
    b.val_end = s.to_count(parts[1], "borders");
    if (parts.size() == 3) b.end = s.to_count(parts[2], "borders");
    d.split.borders = b;
  }
  for (double r : d.split.ratios) {
    if (!(r >= 0.0)) throw_config("[" + s.name() + "] split ratios must be nonnegative");
  }
  if (!(d.split.ratios[0] + d.split.ratios[1] + d.split.ratios[2] > 0.0)) {
    throw_config("[" + s.name() + "] split ratios must sum to a positive value");
  }

  for (const auto& h : split_list(s.required("horizons"))) {
    const auto v = s.to_count(h, "horizons");
    if (v == 0) throw_config("[" + s.name() + "] horizons must be positive");
    d.horizons.push_back(v);
  }
  if (d.horizons.empty()) throw_config("[" + s.name() + "] needs at least one horizon");
  d.lookback = s.count("lookback");
  if (d.lookback && *d.lookback == 0) throw_config("[" + s.name() + "] lookback must be positive");
  d.offset = s.count("offset").value_or(1);
  if (d.offset < 1) throw_config("[" + s.name() + "] offset must be at least 1");
  d.stride = s.count("stride").value_or(1);
  if (d.stride < 1) throw_config("[" + s.name() + "] stride must be positive");
  d.period = s.count("period");
  if (d.period && *d.period == 0) throw_config("[" + s.name() + "] period must be positive");
  return d;
}

}  // namespace

std::string parse_mode(const std::string& text) {
  if (text == "uni" || text == "univariate") return "univariate";
  if (text == "multi" || text == "multivariate") return "multivariate";
  throw_config("unknown mode '" + text + "' (uni, multi)");
}

const DatasetConfig& HarnessConfig::dataset(const std::string& name) const {
  for (const auto& d : datasets) {
    if (d.name == name) return d;
  }
  throw_config("unknown dataset '" + name + "'");
}

HarnessConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                           const std::optional<std::filesystem::path>& data_root) {
  // '#' starts a comment at the beginning of a line or after whitespace.
  std::string cleaned;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
          line.erase(i);
          break;
        }
      }
      cleaned += line + "\n";
    }
  }
  pt::ptree tree;
  try {
    std::istringstream in(cleaned);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw_config("config line " + std::to_string(e.line()) + ": " + e.message());
  }

  std::filesystem::path root = base_dir;
  if (data_root) {
    root = *data_root;
  } else if (const char* env = std::getenv(kDataRootEnv); env && *env) {
    root = env;
  }

  HarnessConfig cfg;
  std::set<std::string> names;
  for (const auto& [section, child] : tree) {
    if (child.empty() && !child.data().empty()) {
      throw_config("key '" + section + "' must belong to a section");
    }
    if (section == "harness") {
      const Section s(
          section, child,
          {"predictors", "modes", "format", "out_dir", "jobs", "reference_scores", "scale"});
      if (const auto v = s.text("predictors")) {
        cfg.predictors.clear();
        for (const auto& p : split_list(*v)) cfg.predictors.push_back(parse_predictor_spec(p));
        if (cfg.predictors.empty()) throw_config("[harness] predictors must not be empty");
        if (std::find(cfg.predictors.begin(), cfg.predictors.end(), PredictorSpec::hi()) ==
            cfg.predictors.end()) {
          throw_config("[harness] predictors must include hi");
        }
      }
      if (const auto v = s.text("modes")) {
        cfg.modes.clear();
        for (const auto& m : split_list(*v)) cfg.modes.push_back(parse_mode(m));
        if (cfg.modes.empty()) throw_config("[harness] modes must not be empty");
      }
      if (const auto v = s.text("format")) cfg.format = parse_table_format(*v);
      if (const auto v = s.text("out_dir")) cfg.out_dir = *v;
      if (const auto v = s.count("jobs")) cfg.jobs = *v;
      if (cfg.jobs == 0) throw_config("[harness] jobs must be positive");
      if (const auto v = s.text("reference_scores")) cfg.reference_scores = resolve(*v, base_dir);
      if (const auto v = s.flag("scale")) cfg.scale = *v;
    } else if (section == "selector") {
      const Section s(
          section, child,
          {"acf_min_lag", "acf_max_lag", "threshold", "alpha_grid", "bases", "objective"});
      auto& sel = cfg.selector;
      if (const auto v = s.count("acf_min_lag")) sel.period_search.min_lag = *v;
      if (const auto v = s.count("acf_max_lag")) sel.period_search.max_lag = *v;
      if (const auto v = s.real("threshold")) sel.period_search.threshold = *v;
      sel.period_search.validate();
      if (const auto v = s.text("alpha_grid")) {
        sel.alpha_grid.clear();
        for (const auto& a : split_list(*v)) {
          sel.alpha_grid.push_back(HybridWeight(s.to_real(a, "alpha_grid")).alpha());
        }
      }
      if (const auto v = s.text("bases")) {
        sel.bases.clear();
        for (const auto& b : split_list(*v)) {
          auto spec = parse_predictor_spec(b);
          if (spec.name != "mean" && spec.name != "seasonal_naive") {
            throw_config("[selector] bases must be mean or seasonal_naive, got '" + b + "'");
          }
          sel.bases.push_back(spec);
        }
      }
      if (const auto v = s.text("objective")) sel.objective = parse_metric(*v);
    } else if (section.rfind("dataset.", 0) == 0) {
      const auto name = section.substr(8);
      if (name.empty()) throw_config("dataset section needs a name: [dataset.<name>]");
      if (!names.insert(name).second) throw_config("duplicate dataset '" + name + "'");
      const Section s(section, child,
                      {"path", "columns", "timestamp", "rows", "target", "sample_rate", "split",
                       "borders", "horizons", "lookback", "offset", "stride", "period"});
      cfg.datasets.push_back(parse_dataset(s, name, root));
    } else {
      throw_config("unknown section [" + section + "]");
    }
  }
  if (cfg.datasets.empty()) throw_config("config declares no datasets");
  return cfg;
}

HarnessConfig load_config(const std::filesystem::path& path,
                          const std::optional<std::filesystem::path>& data_root) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_config("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path(), data_root);
}

std::string effective_config(const HarnessConfig& cfg) {
  std::ostringstream out;
  std::vector<std::string> items;
  out << "[harness]\n";
  for (const auto& p : cfg.predictors) items.push_back(p.label());
  out << "predictors = " << join(items) << "\n";
  out << "modes = " << join(cfg.modes) << "\n";
  out << "format = "
      << (cfg.format == TableFormat::kPlain      ? "plain"
          : cfg.format == TableFormat::kMarkdown ? "markdown"
                                                 : "delimited")
      << "\n";
  out << "out_dir = " << cfg.out_dir.string() << "\n";
  out << "jobs = " << cfg.jobs << "\n";
  if (cfg.reference_scores) {
    out << "reference_scores = " << cfg.reference_scores->string() << "\n";
  } else {
    out << "# reference_scores: bundled\n";
  }
  out << "scale = " << (cfg.scale ? "true" : "false") << "\n\n";

  const auto& sel = cfg.selector;
  out << "[selector]\n";
  out << "acf_min_lag = " << sel.period_search.min_lag << "\n";
  out << "acf_max_lag = " << sel.period_search.max_lag << "\n";
  out << "threshold = " << real_text(sel.period_search.threshold) << "\n";
  items.clear();
  for (double a : sel.alpha_grid) items.push_back(real_text(a));
  out << "alpha_grid = " << join(items) << "\n";
  items.clear();
  for (const auto& b : sel.bases) items.push_back(b.label());
  out << "bases = " << join(items) << "\n";
  out << "objective = " << metric_label(sel.objective) << "\n";

  for (const auto& d : cfg.datasets) {
    out << "\n[dataset." << d.name << "]\n";
    out << "path = " << d.path.string() << "\n";
    out << "columns = " << d.schema.expected_columns << "\n";
    out << "timestamp = " << (d.schema.has_timestamp ? "true" : "false") << "\n";
    if (d.schema.expected_rows) out << "rows = " << *d.schema.expected_rows << "\n";
    out << "target = " << d.target << "\n";
    out << "sample_rate = " << d.schema.sample_rate << "\n";
    out << "split = " << real_text(d.split.ratios[0]) << ":" << real_text(d.split.ratios[1]) << ":"
        << real_text(d.split.ratios[2]) << "\n";
    if (d.split.borders) {
      out << "borders = " << d.split.borders->train_end << ", " << d.split.borders->val_end;
      if (d.split.borders->end != 0) out << ", " << d.split.borders->end;
      out << "\n";
    }
    items.clear();
    for (auto h : d.horizons) items.push_back(std::to_string(h));
    out << "horizons = " << join(items) << "\n";
    if (d.lookback) {
      out << "lookback = " << *d.lookback << "\n";
    } else {
      out << "# lookback: equal to each horizon\n";
    }
    out << "offset = " << d.offset << "\n";
    out << "stride = " << d.stride << "\n";
    if (d.period) out << "period = " << *d.period << "\n";
  }
  return out.str();
}

}  // namespace hibench
