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

#include "corefwb/analysis.h"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <thread>

#include "corefwb/error.h"

namespace corefwb {
namespace {

constexpr std::array<RuleId, 5> kAllRules = {RuleId::kRG, RuleId::kRN, RuleId::kRS,
                                             RuleId::kForceCreateIndef, RuleId::kForceAssocDef};

std::string DescribeCombination(const std::vector<RuleId> &rules, const std::vector<bool> &on) {
  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out += (out.empty() ? "" : ",") + std::string(RuleName(rules[i])) + (on[i] ? "=on" : "=off");
  }
  return out;
}

double FOf(const std::array<Score, 3> &scores, ScoreMethod method) {
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    if (kAllMethods[i] == method) return scores[i].f_measure;
  }
  throw Error(ErrorCode::kInternal, "unknown scoring method");
}

// Step one parameter of `params`; returns the new value as a double.
double StepParameter(ActivationParams &params, std::size_t which, bool up) {
  auto scale = [up](double &v) { v *= up ? 1.1 : 0.9; };
  switch (which) {
    case 0: scale(params.initial_activation); return params.initial_activation;
    case 1: scale(params.boost_common_noun); return params.boost_common_noun;
    case 2: scale(params.boost_proper_name); return params.boost_proper_name;
    case 3: scale(params.boost_pronoun); return params.boost_pronoun;
    case 4: scale(params.decay_word); params.decay_word = std::min(params.decay_word, 1.0);
      return params.decay_word;
    case 5: scale(params.decay_sentence);
      params.decay_sentence = std::min(params.decay_sentence, 1.0);
      return params.decay_sentence;
    case 6: scale(params.decay_paragraph);
      params.decay_paragraph = std::min(params.decay_paragraph, 1.0);
      return params.decay_paragraph;
    case 7: params.buffer_size = std::max(1, params.buffer_size + (up ? 1 : -1));
      return params.buffer_size;
    case 8: params.h4_threshold = std::clamp(params.h4_threshold + (up ? 5.0 : -5.0), 0.0, 100.0);
      return params.h4_threshold;
  }
  throw Error(ErrorCode::kInternal, "parameter index out of range");
}

}  // namespace

const char *RuleName(RuleId rule) {
  switch (rule) {
    case RuleId::kRG: return "RG";
    case RuleId::kRN: return "RN";
    case RuleId::kRS: return "RS";
    case RuleId::kForceCreateIndef: return "FORCE_CREATE_INDEF";
    case RuleId::kForceAssocDef: return "FORCE_ASSOC_DEF";
  }
  return "?";
}

RuleId ParseRuleId(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (name == RuleName(rule)) return rule;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown rule '" + std::string(name) + "'");
}

std::vector<RuleId> ParseRuleList(std::string_view list) {
  std::vector<RuleId> rules;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view name = list.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    RuleId rule = ParseRuleId(name);
    if (std::find(rules.begin(), rules.end(), rule) != rules.end()) {
      throw Error(ErrorCode::kInvalidArgument, std::string("rule listed twice: ") + RuleName(rule));
    }
    rules.push_back(rule);
    pos = comma + 1;
  }
  return rules;
}

bool RuleEnabled(const SolverConfig &cfg, RuleId rule) {
  switch (rule) {
    case RuleId::kRG: return cfg.rule_gender;
    case RuleId::kRN: return cfg.rule_number;
    case RuleId::kRS: return cfg.rule_semantic;
    case RuleId::kForceCreateIndef: return cfg.force_create_indefinite == ForcePolicy::kAlways;
    case RuleId::kForceAssocDef: return cfg.force_associate_definite == ForcePolicy::kAlways;
  }
  return false;
}

void SetRule(SolverConfig &cfg, RuleId rule, bool on) {
  const ForcePolicy policy = on ? ForcePolicy::kAlways : ForcePolicy::kPossibly;
  switch (rule) {
    case RuleId::kRG: cfg.rule_gender = on; break;
    case RuleId::kRN: cfg.rule_number = on; break;
    case RuleId::kRS: cfg.rule_semantic = on; break;
    case RuleId::kForceCreateIndef: cfg.force_create_indefinite = policy; break;
    case RuleId::kForceAssocDef: cfg.force_associate_definite = policy; break;
  }
}

std::vector<std::vector<bool>> AblationCombinations(std::size_t num_rules, AblationMode mode) {
  std::vector<std::vector<bool>> combos;
  if (mode == AblationMode::kFullGrid) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_rules); ++mask) {
      std::vector<bool> on(num_rules);
      for (std::size_t i = 0; i < num_rules; ++i) on[i] = ((mask >> i) & 1) == 0;
      combos.push_back(std::move(on));
    }
  } else {
    combos.emplace_back(num_rules, true);
    for (std::size_t i = 0; i < num_rules; ++i) {
      std::vector<bool> missing(num_rules, true);
      missing[i] = false;
      combos.push_back(std::move(missing));
      std::vector<bool> alone(num_rules, false);
      alone[i] = true;
      combos.push_back(std::move(alone));
    }
  }
  auto off_positions = [](const std::vector<bool> &on) {
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < on.size(); ++i) {
      if (!on[i]) off.push_back(i);
    }
    return off;
  };
  std::sort(combos.begin(), combos.end(), [&](const auto &a, const auto &b) {
    auto oa = off_positions(a);
    auto ob = off_positions(b);
    if (oa.size() != ob.size()) return oa.size() < ob.size();
    return oa < ob;
  });
  combos.erase(std::unique(combos.begin(), combos.end()), combos.end());
  return combos;
}

SolverConfig ConfigFor(const SolverConfig &base, const std::vector<RuleId> &rules,
                       const std::vector<bool> &on) {
  SolverConfig cfg = base;
  for (std::size_t i = 0; i < rules.size(); ++i) SetRule(cfg, rules[i], on[i]);
  return cfg;
}

std::array<Score, 3> Evaluate(const Document &doc, const Partition &key,
                              const SemanticNetwork &net, const SolverConfig &cfg) {
  const Resolution resolution = Resolve(doc, cfg, net);
  return {MucScore(key, resolution.partition), CoreMrScore(key, resolution.partition),
          ExCoreMrScore(key, resolution.partition)};
}

AblationReport Ablate(const Document &doc, const SemanticNetwork &net, const SolverConfig &base,
                      const std::vector<RuleId> &rules, AblationMode mode, ScoreMethod method) {
  if (rules.empty()) throw Error(ErrorCode::kInvalidArgument, "ablation needs at least one rule");
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (std::find(rules.begin(), rules.begin() + i, rules[i]) != rules.begin() + i) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("rule listed twice: ") + RuleName(rules[i]));
    }
    if (!RuleEnabled(base, rules[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("rule ") + RuleName(rules[i]) + " is off in the base configuration");
    }
  }
  const Partition key = KeyPartition(doc);

  AblationReport report;
  report.rules = rules;
  report.mode = mode;
  report.method = method;
  const auto combos = AblationCombinations(rules.size(), mode);

  auto run = [&](const std::vector<bool> &on) {
    try {
      return Evaluate(doc, key, net, ConfigFor(base, rules, on));
    } catch (const Error &e) {
      throw Error(e.code(), "combination " + DescribeCombination(rules, on) + ": " + e.what());
    }
  };
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  report.rows.resize(combos.size());
  for (std::size_t first = 0; first < combos.size(); first += workers) {
    const std::size_t last = std::min(combos.size(), first + workers);
    std::vector<std::future<std::array<Score, 3>>> pending;
    for (std::size_t i = first; i < last; ++i) {
      pending.push_back(std::async(std::launch::async, run, std::cref(combos[i])));
    }
    for (std::size_t i = first; i < last; ++i) {
      report.rows[i] = {combos[i], pending[i - first].get()};
    }
  }

  report.baseline_score = FOf(report.rows.front().scores, method);
  auto score_of = [&](const std::vector<bool> &on) {
    for (const auto &row : report.rows) {
      if (row.on == on) return FOf(row.scores, method);
    }
    throw Error(ErrorCode::kInternal, "missing ablation row " + DescribeCombination(rules, on));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::vector<bool> alone(rules.size(), false);
    alone[i] = true;
    std::vector<bool> missing(rules.size(), true);
    missing[i] = false;
    RuleCoefficients c{rules[i], report.baseline_score, score_of(alone), score_of(missing)};
    report.sum_alone += c.alone;
    report.sum_loss += c.loss();
    report.coefficients.push_back(c);
  }
  return report;
}

RelevanceRanking RankRules(const AblationReport &report) {
  RelevanceRanking ranking;
  auto order = [&](auto value) {
    std::vector<RuleCoefficients> sorted = report.coefficients;
    std::sort(sorted.begin(), sorted.end(), [&](const auto &a, const auto &b) {
      if (value(a) != value(b)) return value(a) > value(b);
      return std::string_view(RuleName(a.rule)) < std::string_view(RuleName(b.rule));
    });
    std::vector<RuleId> out;
    for (const auto &c : sorted) out.push_back(c.rule);
    return out;
  };
  ranking.by_loss = order([](const RuleCoefficients &c) { return c.loss(); });
  ranking.by_alone = order([](const RuleCoefficients &c) { return c.alone; });
  ranking.agreement = ranking.by_loss == ranking.by_alone;
  return ranking;
}

OptimizationTrace Optimize(const Document &doc, const SemanticNetwork &net,
                           const SolverConfig &start, const OptimizeOptions &options) {
  if (options.max_iters < 1) throw Error(ErrorCode::kInvalidArgument, "max_iters must be >= 1");
  if (options.patience < 1) throw Error(ErrorCode::kInvalidArgument, "patience must be >= 1");
  start.Validate();
  const Partition key = KeyPartition(doc);
  auto score = [&](const SolverConfig &cfg) {
    return FOf(Evaluate(doc, key, net, cfg), options.method);
  };

  OptimizationTrace trace;
  trace.seed = options.seed;
  trace.method = options.method;
  trace.best_config = start;
  trace.initial_score = trace.best_score = score(start);

  std::mt19937_64 rng(options.seed);
  std::size_t rejections = 0;
  for (std::size_t iter = 1; iter <= options.max_iters; ++iter) {
    const std::size_t which = rng() % kTunableParams.size();
    const bool up = rng() % 2 == 1;
    SolverConfig trial = trace.best_config;
    OptimizationStep step;
    step.iteration = iter;
    step.parameter = kTunableParams[which];
    step.trial_value = StepParameter(trial.params, which, up);
    step.trial_score = score(trial);
    step.accepted = step.trial_score > trace.best_score;
    if (step.accepted) {
      trace.best_config = trial;
      trace.best_score = step.trial_score;
      rejections = 0;
    } else {
      ++rejections;
    }
    step.best_score = trace.best_score;
    trace.steps.push_back(std::move(step));
    if (rejections >= options.patience) break;
  }
  return trace;
}

}  // namespace corefwb
