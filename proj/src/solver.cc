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

#include "corefwb/solver.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "corefwb/error.h"

namespace corefwb {
namespace {

struct ReConcepts {
  std::optional<std::size_t> head;
  std::vector<std::size_t> mods;
};

ReConcepts LookupConcepts(const SemanticNetwork &net, const ReferringExpression &re) {
  auto lookup = [&](const std::string &name) {
    auto id = net.Find(name);
    if (!id) {
      throw Error(ErrorCode::kUnknownConcept,
                  "RE '" + re.id + "' names unknown concept '" + name + "'");
    }
    return *id;
  };
  ReConcepts c;
  if (re.head_concept) c.head = lookup(*re.head_concept);
  for (const auto &m : re.modifier_concepts) c.mods.push_back(lookup(m));
  return c;
}

bool SemanticOk(const SemanticNetwork &net, const ReConcepts &a, const ReConcepts &b) {
  if (!a.head || !b.head) return true;
  if (!net.CompatibleIds(*a.head, *b.head)) return false;
  for (std::size_t m : a.mods) {
    if (!net.CompatibleIds(m, *b.head)) return false;
  }
  for (std::size_t m : b.mods) {
    if (!net.CompatibleIds(m, *a.head)) return false;
  }
  return true;
}

bool MorphologyOk(const SolverConfig &cfg, const ReferringExpression &a,
                  const ReferringExpression &b) {
  if (cfg.rule_gender && !CheckGender(a, b)) return false;
  if (cfg.rule_number && !CheckNumber(a, b)) return false;
  return true;
}

// Heuristic combination of pairwise results over the members of an MR.
// `compatible(member)` answers the pair check for one member index.
template <typename Compatible>
bool Admits(Heuristic heuristic, double h4_threshold, const Document &doc,
            const MentalRepresentation &mr, Compatible compatible) {
  const auto &members = mr.members;
  auto all_members = [&]() { return std::all_of(members.begin(), members.end(), compatible); };
  auto nominal = [&](std::size_t m) { return !doc.res()[m].is_pronoun(); };
  switch (heuristic) {
    case Heuristic::kH1:
      return compatible(members.front());
    case Heuristic::kH2:
      if (std::none_of(members.begin(), members.end(), nominal)) return all_members();
      return std::all_of(members.begin(), members.end(),
                         [&](std::size_t m) { return !nominal(m) || compatible(m); });
    case Heuristic::kH3:
      if (std::none_of(members.begin(), members.end(), nominal)) return all_members();
      return std::any_of(members.begin(), members.end(),
                         [&](std::size_t m) { return nominal(m) && compatible(m); });
    case Heuristic::kH4: {
      auto count = std::count_if(members.begin(), members.end(), compatible);
      return 100.0 * static_cast<double>(count) >=
             h4_threshold * static_cast<double>(members.size());
    }
  }
  return false;
}

// Pair checks over the REs of one document, with concepts interned once.
class PairChecker {
 public:
  PairChecker(const SolverConfig &cfg, const SemanticNetwork &net, const Document &doc)
      : cfg_(cfg), net_(net), doc_(doc) {
    if (cfg.rule_semantic) {
      concepts_.reserve(doc.res().size());
      for (const auto &re : doc.res()) concepts_.push_back(LookupConcepts(net, re));
    }
  }

  bool Compatible(std::size_t a, std::size_t b) const {
    if (!MorphologyOk(cfg_, doc_.res()[a], doc_.res()[b])) return false;
    return !cfg_.rule_semantic || SemanticOk(net_, concepts_[a], concepts_[b]);
  }

  bool MrAdmits(const MentalRepresentation &mr, std::size_t re) const {
    return Admits(cfg_.heuristic, cfg_.params.h4_threshold, doc_, mr,
                  [&](std::size_t m) { return Compatible(m, re); });
  }

 private:
  const SolverConfig &cfg_;
  const SemanticNetwork &net_;
  const Document &doc_;
  std::vector<ReConcepts> concepts_;
};

TextPosition PositionOf(const ReferringExpression &re) {
  return {re.start_token, re.sentence_index, re.paragraph_index};
}

// Strict preference between two MRs for attachment and buffer retention:
// higher activation, then more recent mention, then earlier creation.
bool MoreSalient(const MentalRepresentation &a, const MentalRepresentation &b) {
  if (a.activation != b.activation) return a.activation > b.activation;
  if (a.last_position != b.last_position) return a.last_position > b.last_position;
  return a.mr_index < b.mr_index;
}

void StepImpl(SolverState &state, const Document &doc, std::size_t re_index,
              const SolverConfig &cfg, const PairChecker &checker) {
  if (re_index != state.next_re || re_index >= doc.res().size()) {
    throw Error(ErrorCode::kSequencing, "RE index " + std::to_string(re_index) +
                                            " processed out of order (expected " +
                                            std::to_string(state.next_re) + ")");
  }
  const ReferringExpression &re = doc.res()[re_index];
  const ActivationParams &params = cfg.params;
  const TextPosition position = PositionOf(re);

  if (re_index > 0) {
    const TextPosition previous = PositionOf(doc.res()[re_index - 1]);
    DecayAll(state,
             {position.token - previous.token, position.sentence - previous.sentence,
              position.paragraph - previous.paragraph},
             params);
  }

  TraceRecord record;
  record.re_id = re.id;
  std::optional<std::size_t> chosen;

  const bool force_create = cfg.force_create_indefinite == ForcePolicy::kAlways &&
                            re.definiteness == Definiteness::kIndefinite;
  if (!force_create) {
    for (const auto &mr : state.mrs) {
      if (!mr.archived && checker.MrAdmits(mr, re_index)) record.candidates.push_back(mr.mr_index);
    }
    for (std::size_t c : record.candidates) {
      if (!chosen || MoreSalient(state.mrs[c], state.mrs[*chosen])) chosen = c;
    }
    if (chosen) {
      record.action = StepAction::kAttach;
    } else if (cfg.force_associate_definite == ForcePolicy::kAlways &&
               re.definiteness == Definiteness::kDefinite) {
      for (const auto &mr : state.mrs) {
        if (!mr.archived && (!chosen || MoreSalient(mr, state.mrs[*chosen]))) {
          chosen = mr.mr_index;
        }
      }
      if (chosen) record.action = StepAction::kForceAttach;
    }
  }

  if (chosen) {
    state.mrs[*chosen].members.push_back(re_index);
  } else {
    MentalRepresentation mr;
    mr.mr_index = state.mrs.size();
    mr.members.push_back(re_index);
    mr.activation = params.initial_activation;
    state.mrs.push_back(std::move(mr));
    chosen = state.mrs.size() - 1;
    record.action = StepAction::kCreate;
  }
  Reactivate(state.mrs[*chosen], re, params);
  EnforceBuffer(state, params);

  record.mr_index = *chosen;
  record.activation = state.mrs[*chosen].activation;
  for (const auto &mr : state.mrs) {
    if (!mr.archived) record.active.emplace_back(mr.mr_index, mr.activation);
  }
  state.trace.push_back(std::move(record));
  ++state.next_re;
}

}  // namespace

const char *HeuristicName(Heuristic h) {
  switch (h) {
    case Heuristic::kH1: return "H1";
    case Heuristic::kH2: return "H2";
    case Heuristic::kH3: return "H3";
    case Heuristic::kH4: return "H4";
  }
  return "?";
}

const char *StepActionName(StepAction action) {
  switch (action) {
    case StepAction::kCreate: return "create";
    case StepAction::kAttach: return "attach";
    case StepAction::kForceAttach: return "force-attach";
  }
  return "?";
}

void ActivationParams::Validate() const {
  auto fail = [](const char *field, const char *range) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("parameter ") + field + " must be " + range);
  };
  if (!(initial_activation > 0.0) || !std::isfinite(initial_activation)) {
    fail("initial_activation", "positive");
  }
  if (!(boost_common_noun >= 0.0) || !std::isfinite(boost_common_noun)) {
    fail("boost_common_noun", "nonnegative");
  }
  if (!(boost_proper_name >= 0.0) || !std::isfinite(boost_proper_name)) {
    fail("boost_proper_name", "nonnegative");
  }
  if (!(boost_pronoun >= 0.0) || !std::isfinite(boost_pronoun)) {
    fail("boost_pronoun", "nonnegative");
  }
  if (!(decay_word > 0.0 && decay_word <= 1.0)) fail("decay_word", "in (0, 1]");
  if (!(decay_sentence > 0.0 && decay_sentence <= 1.0)) fail("decay_sentence", "in (0, 1]");
  if (!(decay_paragraph > 0.0 && decay_paragraph <= 1.0)) fail("decay_paragraph", "in (0, 1]");
  if (buffer_size < 1) fail("buffer_size", ">= 1");
  if (!(h4_threshold >= 0.0 && h4_threshold <= 100.0)) fail("h4_threshold", "in [0, 100]");
}

bool CheckGender(const ReferringExpression &a, const ReferringExpression &b) {
  return a.gender == b.gender || a.gender == Gender::kUnknown || b.gender == Gender::kUnknown;
}

bool CheckNumber(const ReferringExpression &a, const ReferringExpression &b) {
  return a.number == b.number || a.number == Number::kUnknown || b.number == Number::kUnknown;
}

bool CheckSemantic(const SemanticNetwork &net, const ReferringExpression &a,
                   const ReferringExpression &b) {
  return SemanticOk(net, LookupConcepts(net, a), LookupConcepts(net, b));
}

bool RePairCompatible(const SolverConfig &cfg, const SemanticNetwork &net,
                      const ReferringExpression &a, const ReferringExpression &b) {
  if (!MorphologyOk(cfg, a, b)) return false;
  return !cfg.rule_semantic || CheckSemantic(net, a, b);
}

bool MrAdmits(const SolverConfig &cfg, const SemanticNetwork &net, const Document &doc,
              const MentalRepresentation &mr, const ReferringExpression &re) {
  if (mr.members.empty()) throw Error(ErrorCode::kInvalidArgument, "MR without members");
  return Admits(cfg.heuristic, cfg.params.h4_threshold, doc, mr, [&](std::size_t m) {
    return RePairCompatible(cfg, net, doc.res()[m], re);
  });
}

MrFeatures ComputeMrFeatures(const MentalRepresentation &mr, const Document &doc) {
  MrFeatures f;
  int masculine = 0, feminine = 0, singular = 0, plural = 0;
  for (std::size_t m : mr.members) {
    const auto &re = doc.res()[m];
    if (re.gender == Gender::kMasculine) ++masculine;
    if (re.gender == Gender::kFeminine) ++feminine;
    if (re.number == Number::kSingular) ++singular;
    if (re.number == Number::kPlural) ++plural;
    if (re.head_concept) f.concept_set.insert(*re.head_concept);
  }
  if (masculine > feminine) f.gender = Gender::kMasculine;
  if (feminine > masculine) f.gender = Gender::kFeminine;
  if (singular > plural) f.number = Number::kSingular;
  if (plural > singular) f.number = Number::kPlural;
  return f;
}

void DecayAll(SolverState &state, const Elapsed &elapsed, const ActivationParams &params) {
  const double factor = std::pow(params.decay_word, static_cast<double>(elapsed.words)) *
                        std::pow(params.decay_sentence, static_cast<double>(elapsed.sentences)) *
                        std::pow(params.decay_paragraph, static_cast<double>(elapsed.paragraphs));
  if (factor == 1.0) return;
  for (auto &mr : state.mrs) {
    if (!mr.archived) mr.activation *= factor;
  }
}

void Reactivate(MentalRepresentation &mr, const ReferringExpression &re,
                const ActivationParams &params) {
  switch (re.kind) {
    case ReKind::kCommonNoun: mr.activation += params.boost_common_noun; break;
    case ReKind::kProperName: mr.activation += params.boost_proper_name; break;
    case ReKind::kPronoun: mr.activation += params.boost_pronoun; break;
  }
  mr.last_position = PositionOf(re);
}

void EnforceBuffer(SolverState &state, const ActivationParams &params) {
  std::vector<MentalRepresentation *> active;
  for (auto &mr : state.mrs) {
    if (!mr.archived) active.push_back(&mr);
  }
  const auto limit = static_cast<std::size_t>(params.buffer_size);
  if (active.size() <= limit) return;
  std::sort(active.begin(), active.end(),
            [](const MentalRepresentation *a, const MentalRepresentation *b) {
              return MoreSalient(*a, *b);
            });
  for (std::size_t i = limit; i < active.size(); ++i) active[i]->archived = true;
}

void ResolveStep(SolverState &state, const Document &doc, std::size_t re_index,
                 const SolverConfig &cfg, const SemanticNetwork &net) {
  PairChecker checker(cfg, net, doc);
  StepImpl(state, doc, re_index, cfg, checker);
}

Resolution Resolve(const Document &doc, const SolverConfig &cfg, const SemanticNetwork &net) {
  cfg.Validate();
  PairChecker checker(cfg, net, doc);
  SolverState state;
  for (std::size_t i = 0; i < doc.res().size(); ++i) StepImpl(state, doc, i, cfg, checker);

  std::vector<std::string> universe;
  universe.reserve(doc.res().size());
  for (const auto &re : doc.res()) universe.push_back(re.id);
  std::vector<Partition::Group> groups;
  groups.reserve(state.mrs.size());
  for (const auto &mr : state.mrs) {
    Partition::Group g{mr.mr_id(), {}};
    for (std::size_t m : mr.members) g.members.push_back(doc.res()[m].id);
    groups.push_back(std::move(g));
  }
  Resolution out{Partition::Create(std::move(universe), std::move(groups)),
                 std::move(state.trace), std::move(state.mrs)};
  return out;
}

std::string FormatTrace(const std::vector<TraceRecord> &trace) {
  std::string out;
  char activation[64];
  for (const auto &r : trace) {
    std::snprintf(activation, sizeof(activation), "%.9g", r.activation);
    out += r.re_id + '\t' + StepActionName(r.action) + "\tm" + std::to_string(r.mr_index + 1) +
           '\t' + std::to_string(r.candidates.size()) + '\t' + activation + '\n';
  }
  return out;
}

}  // namespace corefwb
