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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "corefwb/error.h"
#include "corefwb/solver.h"

namespace corefwb {
namespace {

std::string_view Trim(std::string_view s) {
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

using Setter = std::function<void(SolverConfig &, std::string_view)>;

[[noreturn]] void BadValue(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::kParse,
              "invalid value '" + std::string(value) + "' for '" + std::string(key) + "'");
}

bool ParseBool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  BadValue(key, v);
}

double ParseDouble(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) BadValue(key, v);
  return out;
}

int ParseInt(std::string_view key, std::string_view v) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) BadValue(key, v);
  return out;
}

ForcePolicy ParsePolicy(std::string_view key, std::string_view v) {
  if (v == "possibly") return ForcePolicy::kPossibly;
  if (v == "always") return ForcePolicy::kAlways;
  BadValue(key, v);
}

const char *PolicyName(ForcePolicy p) {
  return p == ForcePolicy::kAlways ? "always" : "possibly";
}

struct Field {
  Setter set;
  std::function<std::string(const SolverConfig &)> get;
};

// Serialization order is the order of this table.
const std::vector<std::pair<std::string, Field>> &Fields() {
  static const auto *fields = new std::vector<std::pair<std::string, Field>>{
      {"rule_gender",
       {[](SolverConfig &c, std::string_view v) { c.rule_gender = ParseBool("rule_gender", v); },
        [](const SolverConfig &c) { return std::string(c.rule_gender ? "true" : "false"); }}},
      {"rule_number",
       {[](SolverConfig &c, std::string_view v) { c.rule_number = ParseBool("rule_number", v); },
        [](const SolverConfig &c) { return std::string(c.rule_number ? "true" : "false"); }}},
      {"rule_semantic",
       {[](SolverConfig &c, std::string_view v) {
          c.rule_semantic = ParseBool("rule_semantic", v);
        },
        [](const SolverConfig &c) { return std::string(c.rule_semantic ? "true" : "false"); }}},
      {"heuristic",
       {[](SolverConfig &c, std::string_view v) {
          if (v == "H1") {
            c.heuristic = Heuristic::kH1;
          } else if (v == "H2") {
            c.heuristic = Heuristic::kH2;
          } else if (v == "H3") {
            c.heuristic = Heuristic::kH3;
          } else if (v == "H4") {
            c.heuristic = Heuristic::kH4;
          } else {
            BadValue("heuristic", v);
          }
        },
        [](const SolverConfig &c) { return std::string(HeuristicName(c.heuristic)); }}},
      {"force_create_indefinite",
       {[](SolverConfig &c, std::string_view v) {
          c.force_create_indefinite = ParsePolicy("force_create_indefinite", v);
        },
        [](const SolverConfig &c) { return std::string(PolicyName(c.force_create_indefinite)); }}},
      {"force_associate_definite",
       {[](SolverConfig &c, std::string_view v) {
          c.force_associate_definite = ParsePolicy("force_associate_definite", v);
        },
        [](const SolverConfig &c) {
          return std::string(PolicyName(c.force_associate_definite));
        }}},
      {"initial_activation",
       {[](SolverConfig &c, std::string_view v) {
          c.params.initial_activation = ParseDouble("initial_activation", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.initial_activation); }}},
      {"boost_common_noun",
       {[](SolverConfig &c, std::string_view v) {
          c.params.boost_common_noun = ParseDouble("boost_common_noun", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.boost_common_noun); }}},
      {"boost_proper_name",
       {[](SolverConfig &c, std::string_view v) {
          c.params.boost_proper_name = ParseDouble("boost_proper_name", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.boost_proper_name); }}},
      {"boost_pronoun",
       {[](SolverConfig &c, std::string_view v) {
          c.params.boost_pronoun = ParseDouble("boost_pronoun", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.boost_pronoun); }}},
      {"decay_word",
       {[](SolverConfig &c, std::string_view v) {
          c.params.decay_word = ParseDouble("decay_word", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.decay_word); }}},
      {"decay_sentence",
       {[](SolverConfig &c, std::string_view v) {
          c.params.decay_sentence = ParseDouble("decay_sentence", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.decay_sentence); }}},
      {"decay_paragraph",
       {[](SolverConfig &c, std::string_view v) {
          c.params.decay_paragraph = ParseDouble("decay_paragraph", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.decay_paragraph); }}},
      {"buffer_size",
       {[](SolverConfig &c, std::string_view v) {
          c.params.buffer_size = ParseInt("buffer_size", v);
        },
        [](const SolverConfig &c) { return std::to_string(c.params.buffer_size); }}},
      {"h4_threshold",
       {[](SolverConfig &c, std::string_view v) {
          c.params.h4_threshold = ParseDouble("h4_threshold", v);
        },
        [](const SolverConfig &c) { return FormatDouble(c.params.h4_threshold); }}},
  };
  return *fields;
}

}  // namespace

SolverConfig ParseConfig(std::string_view text) {
  SolverConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse, where + "expected 'key = value'");
    }
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    const auto &fields = Fields();
    auto it = std::find_if(fields.begin(), fields.end(),
                           [&](const auto &f) { return f.first == key; });
    if (it == fields.end()) throw Error(ErrorCode::kParse, where + "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw Error(ErrorCode::kParse, where + "repeated key '" + key + "'");
    try {
      it->second.set(cfg, value);
    } catch (const Error &e) {
      throw Error(e.code(), where + e.what());
    }
  }
  try {
    cfg.Validate();
  } catch (const Error &e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return cfg;
}

std::string SerializeConfig(const SolverConfig &cfg) {
  std::string out;
  for (const auto &[key, field] : Fields()) out += key + " = " + field.get(cfg) + "\n";
  return out;
}

}  // namespace corefwb
