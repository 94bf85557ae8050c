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

// Command-line front end. Talks to the harness only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hibench/hibench.h"

namespace {

struct ConfigDeleter {
  void operator()(hib_config* c) const { hib_config_free(c); }
};
using ConfigPtr = std::unique_ptr<hib_config, ConfigDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hib_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Argument errors surface as config errors (exit 1).
int report(hib_status status) {
  if (status == HIB_OK) return 0;
  std::cerr << "hibench: " << hib_last_error() << "\n";
  return status == HIB_ERR_ARGUMENT ? 1 : static_cast<int>(status);
}

struct Common {
  std::string config;
  std::optional<std::string> dataset;
  std::optional<std::string> mode;
  std::optional<std::string> format;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> jobs;
};

int open_config(const Common& opts, ConfigPtr& out) {
  hib_config* raw = nullptr;
  if (const auto s = hib_config_load(opts.config.c_str(), nullptr, &raw); s != HIB_OK) {
    return report(s);
  }
  out.reset(raw);
  if (opts.out_dir) {
    if (const auto s = hib_config_set_out_dir(raw, opts.out_dir->c_str()); s != HIB_OK) {
      return report(s);
    }
  }
  if (opts.format) {
    if (const auto s = hib_config_set_format(raw, opts.format->c_str()); s != HIB_OK) {
      return report(s);
    }
  }
  if (opts.jobs) {
    if (const auto s = hib_config_set_jobs(raw, *opts.jobs); s != HIB_OK) return report(s);
  }
  return 0;
}

const char* c_str_or_null(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

int write_text(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out.flush()) {
    std::cerr << "hibench: cannot write '" << path << "'\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hibench: historical-inertia baseline harness for long-horizon forecasting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hib_version());

  Common opts;
  auto add_common = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--config,-c", opts.config, "Harness config file")->required();
    if (with_mode) {
      sub->add_option("--mode", opts.mode, "uni or multi")
          ->check(CLI::IsMember({"uni", "multi", "univariate", "multivariate"}));
    }
    sub->add_option("--out-dir", opts.out_dir, "Output directory");
    sub->add_option("--jobs,-j", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "Score configured predictors on every test window");
  add_common(eval, true);
  eval->add_option("--dataset", opts.dataset, "Only this dataset");
  eval->add_option("--format", opts.format, "Table format")
      ->check(CLI::IsMember({"plain", "markdown", "delimited"}));

  std::size_t horizon = 0;
  auto* select =
      app.add_subcommand("select", "Pick HI, a base predictor or a hybrid on validation");
  add_common(select, true);
  select->add_option("--dataset", opts.dataset, "Dataset name")->required();
  select->add_option("--horizon", horizon, "Forecast horizon")
      ->required()
      ->check(CLI::PositiveNumber);

  std::optional<std::string> column;
  auto* detect = app.add_subcommand("detect-period", "Autocorrelation period of a training column");
  detect->add_option("--config,-c", opts.config, "Harness config file")->required();
  detect->add_option("--dataset", opts.dataset, "Dataset name")->required();
  detect->add_option("--column", column, "Column name (default: the dataset target)");

  std::string table_path;
  std::string render_format = "markdown";
  std::optional<std::string> render_out;
  auto* render = app.add_subcommand("render", "Re-render a delimited table file");
  render->add_option("table", table_path, "Delimited table written by eval")->required();
  render->add_option("--format", render_format, "Output format")
      ->check(CLI::IsMember({"plain", "markdown", "delimited"}));
  render->add_option("--out,-o", render_out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*render) {
    char* raw = nullptr;
    if (const auto s = hib_render_table(table_path.c_str(), render_format.c_str(), &raw);
        s != HIB_OK) {
      return report(s);
    }
    OwnedString text(raw);
    if (render_out) return write_text(*render_out, text.get());
    std::fputs(text.get(), stdout);
    return 0;
  }

  ConfigPtr config;
  if (const int rc = open_config(opts, config); rc != 0) return rc;

  if (*eval) {
    char* raw = nullptr;
    const auto s =
        hib_run_eval(config.get(), c_str_or_null(opts.dataset), c_str_or_null(opts.mode), &raw);
    if (s != HIB_OK) return report(s);
    OwnedString summary(raw);
    std::fputs(summary.get(), stdout);
    return 0;
  }

  if (*select) {
    char* raw = nullptr;
    const auto s = hib_run_select(config.get(), opts.dataset->c_str(), c_str_or_null(opts.mode),
                                  horizon, opts.jobs.value_or(0), &raw);
    if (s != HIB_OK) return report(s);
    OwnedString json(raw);
    if (opts.out_dir) {
      std::error_code ec;
      std::filesystem::create_directories(*opts.out_dir, ec);
      const std::string mode = opts.mode.value_or("uni");
      const std::string path = *opts.out_dir + "/selection_" + *opts.dataset + "_" + mode + "_" +
                               std::to_string(horizon) + ".json";
      if (const int rc = write_text(path, json.get()); rc != 0) return rc;
    }
    std::fputs(json.get(), stdout);
    return 0;
  }

  char* raw = nullptr;
  const auto s =
      hib_run_detect_period(config.get(), opts.dataset->c_str(), c_str_or_null(column), &raw);
  if (s != HIB_OK) return report(s);
  OwnedString json(raw);
  std::fputs(json.get(), stdout);
  return 0;
}
