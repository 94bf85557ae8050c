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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hibench/metrics.hpp"

namespace hibench {

struct TableColumn {
  std::string dataset;
  std::size_t horizon = 0;

  friend bool operator==(const TableColumn&, const TableColumn&) = default;
};

enum class RowKind { kReference, kHarness, kImprovement };

std::string row_kind_label(RowKind kind);

/// One (model, metric) line of a comparison table. Improvement rows hold
/// signed fractions; the others hold errors.
struct TableRow {
  std::string model;
  RowKind kind = RowKind::kReference;
  Metric metric = Metric::kMse;
  std::vector<std::optional<double>> values;  // one per column
  std::vector<bool> best;                     // one per column

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Comparison table in the layout of the published results: reference models
/// in table order, harness predictors, then the improvement of HI over the
/// best reference.
struct ComparisonTable {
  std::string mode;  // "univariate" / "multivariate"
  std::vector<TableColumn> columns;
  std::vector<TableRow> rows;
  std::vector<std::string> footnotes;

  friend bool operator==(const ComparisonTable&, const ComparisonTable&) = default;
};

inline constexpr int kTablePrecision = 3;

/// Assembles the table for one mode. Every column needs an HI report; a
/// dataset known to `refs` must have reference scores for every horizon.
/// Datasets unknown to `refs` get no reference cells and no improvement.
ComparisonTable build_table(std::span<const MetricReport> reports, const ReferenceScores& refs);

/// Recomputes best flags and tie footnotes from the values. Flags go to every
/// error row whose value, rounded to the table precision, equals the column
/// minimum.
void mark_best(ComparisonTable& table);

enum class TableFormat { kPlain, kMarkdown, kDelimited };

TableFormat parse_table_format(const std::string& text);
std::string table_format_extension(TableFormat format);

/// Deterministic text rendering. Markdown bolds the best cells and tags
/// improvements with a sign and a "green"/"red" word. Delimited output keeps
/// full precision and reads back with parse_delimited_table.
std::string render(const ComparisonTable& table, TableFormat format);

ComparisonTable parse_delimited_table(const std::string& text);

/// "+50% green", "-327% red", "0%".
std::string format_improvement(double fraction);

}  // namespace hibench
