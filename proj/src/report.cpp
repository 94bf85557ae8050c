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

#include "hibench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hibench/error.hpp"

namespace hibench {

std::string row_kind_label(RowKind kind) {
  switch (kind) {
    case RowKind::kReference:
      return "reference";
    case RowKind::kHarness:
      return "harness";
    case RowKind::kImprovement:
      return "improvement";
  }
  return "reference";
}

namespace {

RowKind parse_row_kind(const std::string& text) {
  if (text == "reference") return RowKind::kReference;
  if (text == "harness") return RowKind::kHarness;
  if (text == "improvement") return RowKind::kImprovement;
  throw_data("unknown row kind '" + text + "'");
}

std::string display_name(const std::string& predictor) {
  return predictor == "hi" ? "HI" : predictor;
}

constexpr Metric kMetrics[] = {Metric::kMse, Metric::kMae};

double metric_of(const MetricReport& r, Metric m) { return m == Metric::kMse ? r.mse : r.mae; }

long long rounded(double v) { return std::llround(v * std::pow(10.0, kTablePrecision)); }

std::string column_label(const TableColumn& c) {
  return c.dataset + " " + std::to_string(c.horizon);
}

}  // namespace

ComparisonTable build_table(std::span<const MetricReport> reports, const ReferenceScores& refs) {
  if (reports.empty()) throw_data("no reports to tabulate");
  ComparisonTable table;
  table.mode = reports.front().mode;

  std::vector<std::string> harness{"hi"};
  for (const auto& r : reports) {
    if (r.mode != table.mode)
      throw_data("reports mix modes '" + table.mode + "' and '" + r.mode + "'");
    if (r.predictor == "hi") {
      const TableColumn col{r.dataset, r.horizon};
      if (std::find(table.columns.begin(), table.columns.end(), col) != table.columns.end()) {
        throw_data("duplicate HI report for " + column_label(col));
      }
      table.columns.push_back(col);
    } else if (std::find(harness.begin(), harness.end(), r.predictor) == harness.end()) {
      harness.push_back(r.predictor);
    }
  }
  if (table.columns.empty()) throw_data("missing HI cell: the table needs HI results");

  const std::size_t ncol = table.columns.size();
  auto column_of = [&](const MetricReport& r) {
    const auto it =
        std::find(table.columns.begin(), table.columns.end(), TableColumn{r.dataset, r.horizon});
    if (it == table.columns.end()) {
      throw_data("missing HI cell for " + r.dataset + " " + std::to_string(r.horizon));
    }
    return static_cast<std::size_t>(it - table.columns.begin());
  };
  auto key_of = [&](std::size_t c, Metric m) {
    return ReferenceKey{table.columns[c].dataset, table.mode, table.columns[c].horizon, m};
  };
  std::vector<bool> referenced(ncol, false);
  for (std::size_t c = 0; c < ncol; ++c) {
    referenced[c] = refs.has_dataset(table.columns[c].dataset, table.mode);
    if (!referenced[c]) continue;
    for (Metric m : kMetrics) {
      if (!refs.contains(key_of(c, m))) {
        throw_data("missing reference key " + column_label(table.columns[c]) + " " +
                   metric_label(m) + " (" + table.mode + ")");
      }
    }
  }

  auto make_row = [&](const std::string& model, RowKind kind, Metric m) {
    return TableRow{model, kind, m, std::vector<std::optional<double>>(ncol),
                    std::vector<bool>(ncol, false)};
  };

  for (const auto& model : refs.models(table.mode)) {
    std::vector<TableRow> pair;
    bool any = false;
    for (Metric m : kMetrics) {
      auto row = make_row(model, RowKind::kReference, m);
      for (std::size_t c = 0; c < ncol; ++c) {
        if (!referenced[c]) continue;
        for (const auto& e : refs.entries(key_of(c, m))) {
          if (e.model == model) {
            row.values[c] = e.value;
            any = true;
          }
        }
      }
      pair.push_back(std::move(row));
    }
    if (any) table.rows.insert(table.rows.end(), pair.begin(), pair.end());
  }

  std::vector<TableRow> hi_rows;
  for (const auto& predictor : harness) {
    for (Metric m : kMetrics) {
      auto row = make_row(display_name(predictor), RowKind::kHarness, m);
      for (const auto& r : reports) {
        if (r.predictor == predictor) row.values[column_of(r)] = metric_of(r, m);
      }
      if (predictor == "hi") hi_rows.push_back(row);
      table.rows.push_back(std::move(row));
    }
  }

  const bool any_referenced =
      std::find(referenced.begin(), referenced.end(), true) != referenced.end();
  for (std::size_t i = 0; any_referenced && i < 2; ++i) {
    const Metric m = kMetrics[i];
    auto row = make_row("Improve", RowKind::kImprovement, m);
    for (std::size_t c = 0; c < ncol; ++c) {
      if (!referenced[c]) continue;
      const auto best = best_reference(refs, key_of(c, m));
      row.values[c] = relative_improvement(best.value, *hi_rows[i].values[c]);
    }
    table.rows.push_back(std::move(row));
  }
  mark_best(table);
  return table;
}

void mark_best(ComparisonTable& table) {
  table.footnotes.clear();
  const std::size_t ncol = table.columns.size();
  for (auto& row : table.rows) row.best.assign(ncol, false);
  for (Metric m : kMetrics) {
    for (std::size_t c = 0; c < ncol; ++c) {
      std::optional<long long> lowest;
      for (const auto& row : table.rows) {
        if (row.kind == RowKind::kImprovement || row.metric != m || !row.values[c]) continue;
        const auto v = rounded(*row.values[c]);
        if (!lowest || v < *lowest) lowest = v;
      }
      if (!lowest) continue;
      std::vector<std::string> tied;
      for (auto& row : table.rows) {
        if (row.kind == RowKind::kImprovement || row.metric != m || !row.values[c]) continue;
        if (rounded(*row.values[c]) == *lowest) {
          row.best[c] = true;
          tied.push_back(row.model);
        }
      }
      if (tied.size() > 1) {
        std::string note = "tie at " + std::to_string(kTablePrecision) + " decimals for " +
                           column_label(table.columns[c]) + " " + metric_label(m) + ":";
        for (std::size_t i = 0; i < tied.size(); ++i) note += (i ? ", " : " ") + tied[i];
        table.footnotes.push_back(std::move(note));
      }
    }
  }
}

TableFormat parse_table_format(const std::string& text) {
  if (text == "plain" || text == "text") return TableFormat::kPlain;
  if (text == "markdown" || text == "md") return TableFormat::kMarkdown;
  if (text == "delimited" || text == "csv") return TableFormat::kDelimited;
  throw_config("unknown table format '" + text + "' (plain, markdown, delimited)");
}

std::string table_format_extension(TableFormat format) {
  switch (format) {
    case TableFormat::kPlain:
      return "txt";
    case TableFormat::kMarkdown:
      return "md";
    case TableFormat::kDelimited:
      return "csv";
  }
  return "txt";
}

std::string format_improvement(double fraction) {
  const long long pct = std::llround(std::abs(fraction) * 100.0);
  if (pct == 0) return "0%";
  if (fraction > 0.0) return "+" + std::to_string(pct) + "% green";
  if (fraction < 0.0) return "-" + std::to_string(pct) + "% red";
  return "0%";
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", kTablePrecision, v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string title(const ComparisonTable& t) {
  std::string mode = t.mode;
  if (!mode.empty()) mode[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(mode[0])));
  return mode + " forecasting comparison";
}

std::string cell_text(const TableRow& row, std::size_t c, TableFormat format) {
  if (!row.values[c]) return "-";
  const double v = *row.values[c];
  if (row.kind == RowKind::kImprovement) return format_improvement(v);
  std::string s = fixed(v);
  if (row.best[c]) s = format == TableFormat::kMarkdown ? "**" + s + "**" : s + "*";
  return s;
}

std::string render_markdown(const ComparisonTable& t) {
  std::ostringstream out;
  out << "### " << title(t) << "\n\n| Method | Metric |";
  for (const auto& c : t.columns) out << ' ' << column_label(c) << " |";
  out << "\n| --- | --- |";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << " ---: |";
  out << '\n';
  for (const auto& row : t.rows) {
    out << "| " << row.model << " | " << metric_label(row.metric) << " |";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out << ' ' << cell_text(row, c, TableFormat::kMarkdown) << " |";
    }
    out << '\n';
  }
  out << "\nBest value per column in bold. Improve = (best reference - HI) / best reference.\n";
  for (const auto& f : t.footnotes) out << "\n- " << f;
  if (!t.footnotes.empty()) out << '\n';
  return out.str();
}

std::string render_plain(const ComparisonTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"Method", "Metric"};
  for (const auto& c : t.columns) head.push_back(column_label(c));
  grid.push_back(std::move(head));
  for (const auto& row : t.rows) {
    std::vector<std::string> line{row.model, metric_label(row.metric)};
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      line.push_back(cell_text(row, c, TableFormat::kPlain));
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  out << title(t) << "\n\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string text;
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      const auto& cell = grid[r][i];
      const std::string pad(width[i] - cell.size(), ' ');
      if (i > 0) text += "  ";
      text += i < 2 ? cell + pad : pad + cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w;
      out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
  out << "\n* best value per column\n";
  for (const auto& f : t.footnotes) out << "- " << f << '\n';
  return out.str();
}

std::string render_delimited(const ComparisonTable& t) {
  std::ostringstream out;
  out << "# hibench comparison table\n# mode: " << t.mode << "\nmodel,kind,metric";
  for (const auto& c : t.columns) out << ',' << c.dataset << ':' << c.horizon;
  out << '\n';
  for (const auto& row : t.rows) {
    out << row.model << ',' << row_kind_label(row.kind) << ',' << metric_label(row.metric);
    for (const auto& v : row.values) {
      out << ',';
      if (v) out << shortest(*v);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string render(const ComparisonTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::kPlain:
      return render_plain(table);
    case TableFormat::kMarkdown:
      return render_markdown(table);
    case TableFormat::kDelimited:
      return render_delimited(table);
  }
  return {};
}

ComparisonTable parse_delimited_table(const std::string& text) {
  ComparisonTable t;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      constexpr std::string_view kMode = "# mode: ";
      if (line.rfind(kMode, 0) == 0) t.mode = line.substr(kMode.size());
      continue;
    }
    const auto f = split_line(line);
    const auto where = "table line " + std::to_string(line_no);
    if (!header) {
      if (f.size() < 3 || f[0] != "model" || f[1] != "kind" || f[2] != "metric") {
        throw_data(where + ": unexpected header");
      }
      for (std::size_t i = 3; i < f.size(); ++i) {
        const auto colon = f[i].rfind(':');
        if (colon == std::string::npos) throw_data(where + ": bad column '" + f[i] + "'");
        TableColumn col{f[i].substr(0, colon), 0};
        const auto h = f[i].substr(colon + 1);
        const auto [p, ec] = std::from_chars(h.data(), h.data() + h.size(), col.horizon);
        if (ec != std::errc() || p != h.data() + h.size()) {
          throw_data(where + ": bad column '" + f[i] + "'");
        }
        t.columns.push_back(std::move(col));
      }
      header = true;
      continue;
    }
    if (f.size() != 3 + t.columns.size()) throw_data(where + ": wrong field count");
    TableRow row{f[0], parse_row_kind(f[1]), parse_metric(f[2]), {}, {}};
    for (std::size_t i = 3; i < f.size(); ++i) {
      if (f[i].empty()) {
        row.values.emplace_back();
        continue;
      }
      double v = 0.0;
      const auto [p, ec] = std::from_chars(f[i].data(), f[i].data() + f[i].size(), v);
      if (ec != std::errc() || p != f[i].data() + f[i].size()) {
        throw_data(where + ": bad value '" + f[i] + "'");
      }
      row.values.emplace_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (!header) throw_data("delimited table has no header");
  mark_best(t);
  return t;
}

}  // namespace hibench
