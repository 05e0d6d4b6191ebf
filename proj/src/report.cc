// Copyright 2026 The Corefwb Authors.
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

#include <charconv>
#include <cstdio>

#include "corefwb/analysis.h"

namespace corefwb {
namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string Join(const std::vector<std::string> &cells, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? sep : "") + cells[i];
  return out;
}

std::string Render(const Table &table, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kTsv) {
    out += Join(table.header, "\t") + "\n";
    for (const auto &row : table.rows) out += Join(row, "\t") + "\n";
    return out;
  }
  out += "| " + Join(table.header, " | ") + " |\n|";
  for (std::size_t i = 0; i < table.header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto &row : table.rows) out += "| " + Join(row, " | ") + " |\n";
  return out;
}

std::string Title(const std::string &text, ReportFormat format) {
  return format == ReportFormat::kTsv ? "# " + text + "\n" : "### " + text + "\n\n";
}

std::string FormatDelta(double delta) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%+.4f", 100.0 * delta);
  std::string s = buf;
  if (s == "-0.0000") s = "+0.0000";
  return s;
}

std::string FormatValue(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string RuleList(const std::vector<RuleId> &rules) {
  std::string out;
  for (RuleId r : rules) out += (out.empty() ? "" : ",") + std::string(RuleName(r));
  return out;
}

Table RankingTable(const RelevanceRanking &ranking) {
  return {{"ordering", "rules"},
          {{"by_S-C_m", RuleList(ranking.by_loss)},
           {"by_C_a", RuleList(ranking.by_alone)},
           {"agreement", ranking.agreement ? "yes" : "no"}}};
}

const char *ModeName(AblationMode mode) {
  return mode == AblationMode::kFullGrid ? "grid" : "endpoints";
}

}  // namespace

std::string EmitReport(const AblationReport &report, ReportFormat format) {
  // Columns follow the usual layout: MUC f-measure, core-MR recall,
  // precision and f-measure, ex-core-MR f-measure.
  auto cells = [](const std::array<Score, 3> &s) {
    return std::array<double, 5>{s[0].f_measure, s[1].recall_value(), s[1].precision_value(),
                                 s[1].f_measure, s[2].f_measure};
  };
  Table grid;
  for (RuleId r : report.rules) grid.header.push_back(RuleName(r));
  for (const char *h : {"muc_f", "core_r", "core_p", "core_f", "excore_f"}) {
    grid.header.push_back(h);
  }
  const auto base = cells(report.rows.front().scores);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto &row = report.rows[i];
    std::vector<std::string> line;
    for (bool on : row.on) line.push_back(on ? "x" : "-");
    const auto values = cells(row.scores);
    for (std::size_t c = 0; c < values.size(); ++c) {
      line.push_back(i == 0 ? FormatPercent(values[c]) : FormatDelta(values[c] - base[c]));
    }
    grid.rows.push_back(std::move(line));
  }

  Table coefficients{{"rule", "C_a", "C_m", "S-C_m"}, {}};
  for (const auto &c : report.coefficients) {
    coefficients.rows.push_back({RuleName(c.rule), FormatPercent(c.alone),
                                 FormatPercent(c.missing), FormatPercent(c.loss())});
  }
  Table sums{{"quantity", "value"},
             {{"S", FormatPercent(report.baseline_score)},
              {"sum_C_a", FormatPercent(report.sum_alone)},
              {"sum_S-C_m", FormatPercent(report.sum_loss)}}};

  std::string out = Title(std::string("ablation method=") + ScoreMethodName(report.method) +
                              " mode=" + ModeName(report.mode),
                          format);
  out += Render(grid, format) + "\n";
  out += Render(coefficients, format) + "\n";
  out += Render(sums, format) + "\n";
  out += Render(RankingTable(RankRules(report)), format);
  return out;
}

std::string EmitReport(const RelevanceRanking &ranking, ReportFormat format) {
  return Render(RankingTable(ranking), format);
}

std::string EmitReport(const OptimizationTrace &trace, ReportFormat format) {
  Table table{{"iter", "param", "value", "score", "accepted", "best"}, {}};
  for (const auto &step : trace.steps) {
    table.rows.push_back({std::to_string(step.iteration), step.parameter,
                          FormatValue(step.trial_value), FormatPercent(step.trial_score),
                          step.accepted ? "yes" : "no", FormatPercent(step.best_score)});
  }
  std::string out = Title(std::string("optimize method=") + ScoreMethodName(trace.method) +
                              " seed=" + std::to_string(trace.seed) +
                              " initial=" + FormatPercent(trace.initial_score) +
                              " best=" + FormatPercent(trace.best_score),
                          format);
  return out + Render(table, format);
}

}  // namespace corefwb
