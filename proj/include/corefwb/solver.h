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

#ifndef COREFWB_SOLVER_H_
#define COREFWB_SOLVER_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corefwb/corpus.h"
#include "corefwb/semnet.h"

namespace corefwb {

enum class Heuristic { kH1, kH2, kH3, kH4 };
enum class ForcePolicy { kPossibly, kAlways };

// The nine tunable numeric parameters of the activation model.
struct ActivationParams {
  double initial_activation = 1.0;
  double boost_common_noun = 1.0;
  double boost_proper_name = 2.0;
  double boost_pronoun = 0.5;
  double decay_word = 0.99;
  double decay_sentence = 0.9;
  double decay_paragraph = 0.8;
  int buffer_size = 20;
  double h4_threshold = 50.0;

  // Throws Error(kInvalidArgument) naming the first out-of-range field.
  void Validate() const;

  bool operator==(const ActivationParams &) const = default;
};

struct SolverConfig {
  bool rule_gender = true;
  bool rule_number = true;
  bool rule_semantic = true;
  Heuristic heuristic = Heuristic::kH3;
  ForcePolicy force_create_indefinite = ForcePolicy::kPossibly;
  ForcePolicy force_associate_definite = ForcePolicy::kPossibly;
  ActivationParams params;

  void Validate() const { params.Validate(); }

  bool operator==(const SolverConfig &) const = default;
};

const char *HeuristicName(Heuristic h);

// `key = value` lines; unknown keys are errors, missing keys keep defaults.
SolverConfig ParseConfig(std::string_view text);
std::string SerializeConfig(const SolverConfig &cfg);

// Token, sentence and paragraph index of a mention.
struct TextPosition {
  std::size_t token = 0;
  std::size_t sentence = 0;
  std::size_t paragraph = 0;

  auto operator<=>(const TextPosition &) const = default;
};

struct MentalRepresentation {
  std::size_t mr_index = 0;           // creation order; the MR id is derived
  std::vector<std::size_t> members;   // indices into Document::res()
  double activation = 0.0;
  bool archived = false;
  TextPosition last_position;

  std::string mr_id() const { return "m" + std::to_string(mr_index + 1); }
};

struct MrFeatures {
  Gender gender = Gender::kUnknown;
  Number number = Number::kUnknown;
  std::set<std::string> concept_set;
};

enum class StepAction { kCreate, kAttach, kForceAttach };

const char *StepActionName(StepAction action);

struct TraceRecord {
  std::string re_id;
  StepAction action = StepAction::kCreate;
  std::size_t mr_index = 0;
  std::vector<std::size_t> candidates;  // MR indices, ascending
  double activation = 0.0;              // chosen MR, after the update
  // (MR index, activation) of every non-archived MR after the step.
  std::vector<std::pair<std::size_t, double>> active;
};

struct SolverState {
  std::vector<MentalRepresentation> mrs;
  std::size_t next_re = 0;  // index of the next RE to process
  std::vector<TraceRecord> trace;
};

// Selectional constraints.
bool CheckGender(const ReferringExpression &a, const ReferringExpression &b);
bool CheckNumber(const ReferringExpression &a, const ReferringExpression &b);
bool CheckSemantic(const SemanticNetwork &net, const ReferringExpression &a,
                   const ReferringExpression &b);
bool RePairCompatible(const SolverConfig &cfg, const SemanticNetwork &net,
                      const ReferringExpression &a, const ReferringExpression &b);

bool MrAdmits(const SolverConfig &cfg, const SemanticNetwork &net, const Document &doc,
              const MentalRepresentation &mr, const ReferringExpression &re);

MrFeatures ComputeMrFeatures(const MentalRepresentation &mr, const Document &doc);

// Activation dynamics.
struct Elapsed {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t paragraphs = 0;
};
void DecayAll(SolverState &state, const Elapsed &elapsed, const ActivationParams &params);
void Reactivate(MentalRepresentation &mr, const ReferringExpression &re,
                const ActivationParams &params);
void EnforceBuffer(SolverState &state, const ActivationParams &params);

// Processes doc.res()[state.next_re]; `re_index` must equal it.
void ResolveStep(SolverState &state, const Document &doc, std::size_t re_index,
                 const SolverConfig &cfg, const SemanticNetwork &net);

struct Resolution {
  Partition partition;
  std::vector<TraceRecord> trace;
  std::vector<MentalRepresentation> mrs;
};

// Throws Error(kUnknownConcept) up front when the semantic rule is on and an
// RE names a concept missing from `net`.
Resolution Resolve(const Document &doc, const SolverConfig &cfg, const SemanticNetwork &net);

// One tab-separated line per RE: id, action, MR id, candidate count,
// activation.
std::string FormatTrace(const std::vector<TraceRecord> &trace);

}  // namespace corefwb

#endif  // COREFWB_SOLVER_H_
