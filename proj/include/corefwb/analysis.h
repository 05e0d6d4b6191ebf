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

#ifndef COREFWB_ANALYSIS_H_
#define COREFWB_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corefwb/corpus.h"
#include "corefwb/scoring.h"
#include "corefwb/semnet.h"
#include "corefwb/solver.h"

namespace corefwb {

// Binary switches of the solver that can be ablated. For the two force
// flags "on" means `always`.
enum class RuleId { kRG, kRN, kRS, kForceCreateIndef, kForceAssocDef };

const char *RuleName(RuleId rule);
RuleId ParseRuleId(std::string_view name);
// Comma-separated list of rule names; throws on unknown or repeated names.
std::vector<RuleId> ParseRuleList(std::string_view list);

bool RuleEnabled(const SolverConfig &cfg, RuleId rule);
void SetRule(SolverConfig &cfg, RuleId rule, bool on);

enum class AblationMode { kFullGrid, kEndpoints };

inline constexpr std::array<ScoreMethod, 3> kAllMethods = {
    ScoreMethod::kMuc, ScoreMethod::kCoreMr, ScoreMethod::kExCoreMr};

struct AblationRow {
  std::vector<bool> on;          // parallel to AblationReport::rules
  std::array<Score, 3> scores;   // indexed like kAllMethods
};

struct RuleCoefficients {
  RuleId rule = RuleId::kRG;
  double baseline = 0.0;  // S
  double alone = 0.0;     // C_a: score with only this rule on
  double missing = 0.0;   // C_m: score with only this rule off

  double loss() const { return baseline - missing; }
};

struct AblationReport {
  std::vector<RuleId> rules;
  AblationMode mode = AblationMode::kFullGrid;
  ScoreMethod method = ScoreMethod::kCoreMr;  // drives the coefficients
  std::vector<AblationRow> rows;              // rows[0] is the baseline
  double baseline_score = 0.0;                // S
  std::vector<RuleCoefficients> coefficients;
  double sum_alone = 0.0;  // Σ C_a
  double sum_loss = 0.0;   // Σ (S − C_m)
};

// Row configurations in canonical order: by number of rules switched off,
// then by the positions of the switched-off rules.
std::vector<std::vector<bool>> AblationCombinations(std::size_t num_rules, AblationMode mode);

SolverConfig ConfigFor(const SolverConfig &base, const std::vector<RuleId> &rules,
                       const std::vector<bool> &on);

// One resolve + score run, all three methods.
std::array<Score, 3> Evaluate(const Document &doc, const Partition &key,
                              const SemanticNetwork &net, const SolverConfig &cfg);

// Rows may be computed concurrently; they are assembled in combination
// order. Every listed rule must be on in `base`.
AblationReport Ablate(const Document &doc, const SemanticNetwork &net, const SolverConfig &base,
                      const std::vector<RuleId> &rules, AblationMode mode, ScoreMethod method);

struct RelevanceRanking {
  std::vector<RuleId> by_loss;   // S − C_m descending
  std::vector<RuleId> by_alone;  // C_a descending
  bool agreement = false;
};

// Ties are broken by rule name.
RelevanceRanking RankRules(const AblationReport &report);

// The nine numeric dimensions explored by the optimizer.
inline constexpr std::array<const char *, 9> kTunableParams = {
    "initial_activation", "boost_common_noun", "boost_proper_name",
    "boost_pronoun",      "decay_word",        "decay_sentence",
    "decay_paragraph",    "buffer_size",       "h4_threshold"};

struct OptimizeOptions {
  ScoreMethod method = ScoreMethod::kCoreMr;
  std::uint64_t seed = 1;
  std::size_t max_iters = 100;
  std::size_t patience = 30;
};

struct OptimizationStep {
  std::size_t iteration = 0;  // 1-based
  std::string parameter;
  double trial_value = 0.0;
  double trial_score = 0.0;
  bool accepted = false;
  double best_score = 0.0;
};

struct OptimizationTrace {
  std::uint64_t seed = 0;
  ScoreMethod method = ScoreMethod::kCoreMr;
  double initial_score = 0.0;
  std::vector<OptimizationStep> steps;
  SolverConfig best_config;
  double best_score = 0.0;
};

// Random-coordinate hill climbing over ActivationParams. Each iteration
// draws one parameter and one direction from a std::mt19937_64 seeded with
// `seed` (parameter = draw % 9, direction = draw % 2), moves it by 10%
// (reals), 1 (buffer_size) or 5 (h4_threshold) within its valid range, and
// keeps the move iff the f-measure strictly improves.
OptimizationTrace Optimize(const Document &doc, const SemanticNetwork &net,
                           const SolverConfig &start, const OptimizeOptions &options);

enum class ReportFormat { kTsv, kMarkdown };

std::string EmitReport(const AblationReport &report, ReportFormat format);
std::string EmitReport(const RelevanceRanking &ranking, ReportFormat format);
std::string EmitReport(const OptimizationTrace &trace, ReportFormat format);

}  // namespace corefwb

#endif  // COREFWB_ANALYSIS_H_
