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

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "corefwb/analysis.h"
#include "corefwb/corefwb.h"
#include "corefwb/corpus.h"
#include "corefwb/error.h"
#include "corefwb/scoring.h"
#include "corefwb/semnet.h"
#include "corefwb/solver.h"

struct cfw_document {
  corefwb::Document value;
};
struct cfw_semnet {
  corefwb::SemanticNetwork value;
};
struct cfw_partition {
  corefwb::Partition value;
};
struct cfw_config {
  corefwb::SolverConfig value;
};

namespace {

using corefwb::Error;
using corefwb::ErrorCode;

thread_local std::string last_error;

cfw_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return CFW_ERR_PARSE;
    case ErrorCode::kFormat: return CFW_ERR_FORMAT;
    case ErrorCode::kDuplicateId: return CFW_ERR_DUPLICATE_ID;
    case ErrorCode::kOverlap: return CFW_ERR_OVERLAP;
    case ErrorCode::kIncompleteKey: return CFW_ERR_INCOMPLETE_KEY;
    case ErrorCode::kCycle: return CFW_ERR_CYCLE;
    case ErrorCode::kUnknownConcept: return CFW_ERR_UNKNOWN_CONCEPT;
    case ErrorCode::kUniverseMismatch: return CFW_ERR_UNIVERSE_MISMATCH;
    case ErrorCode::kSequencing: return CFW_ERR_SEQUENCING;
    case ErrorCode::kInvalidArgument: return CFW_ERR_INVALID_ARGUMENT;
    case ErrorCode::kSizeBound: return CFW_ERR_SIZE_BOUND;
    case ErrorCode::kIo: return CFW_ERR_IO;
    case ErrorCode::kInternal: return CFW_ERR_INTERNAL;
  }
  return CFW_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
cfw_status Guard(Body body) {
  try {
    body();
    return CFW_OK;
  } catch (const Error &e) {
    last_error = std::string(corefwb::ErrorCodeName(e.code())) + ": " + e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return CFW_ERR_INTERNAL;
  } catch (const std::exception &e) {
    last_error = std::string("internal error: ") + e.what();
    return CFW_ERR_INTERNAL;
  }
}

void Require(bool condition, const char *what) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, std::string("null argument: ") + what);
}

std::string ReadFile(const char *path) {
  Require(path != nullptr, "path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, std::string("cannot open '") + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, std::string("cannot read '") + path + "'");
  return buffer.str();
}

std::string_view TextOf(const char *text, size_t len) {
  Require(text != nullptr || len == 0, "text");
  return text == nullptr ? std::string_view() : std::string_view(text, len);
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

corefwb::ScoreMethod MethodOf(cfw_method method) {
  switch (method) {
    case CFW_METHOD_MUC: return corefwb::ScoreMethod::kMuc;
    case CFW_METHOD_CORE_MR: return corefwb::ScoreMethod::kCoreMr;
    case CFW_METHOD_EX_CORE_MR: return corefwb::ScoreMethod::kExCoreMr;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scoring method");
}

corefwb::ReportFormat FormatOf(cfw_format format) {
  switch (format) {
    case CFW_FORMAT_TSV: return corefwb::ReportFormat::kTsv;
    case CFW_FORMAT_MARKDOWN: return corefwb::ReportFormat::kMarkdown;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown report format");
}

corefwb::SolverConfig ConfigOrDefault(const cfw_config *cfg) {
  return cfg == nullptr ? corefwb::SolverConfig{} : cfg->value;
}

}  // namespace

extern "C" {

const char *cfw_version(void) { return "1.0.0"; }

const char *cfw_last_error(void) { return last_error.c_str(); }

void cfw_string_free(char *s) { std::free(s); }

cfw_status cfw_document_parse(const char *text, size_t len, cfw_document **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    auto doc = corefwb::ParseCorpus(TextOf(text, len));
    *out = new cfw_document{std::move(doc)};
  });
}

cfw_status cfw_document_load(const char *path, cfw_document **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    std::string text = ReadFile(path);
    try {
      *out = new cfw_document{corefwb::ParseCorpus(text)};
    } catch (const Error &e) {
      throw Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

void cfw_document_free(cfw_document *doc) { delete doc; }

size_t cfw_document_re_count(const cfw_document *doc) {
  return doc == nullptr ? 0 : doc->value.res().size();
}

cfw_status cfw_document_stats(const cfw_document *doc, cfw_stats *out) {
  return Guard([&] {
    Require(doc != nullptr, "doc");
    Require(out != nullptr, "out");
    const auto s = corefwb::CorpusStats(doc->value);
    *out = {s.words,       s.res,         s.key_mrs,     s.key_complete ? 1 : 0,
            s.re_per_mr,   s.nominal_res, s.pronoun_res, s.unparsed_res};
  });
}

cfw_status cfw_document_stats_text(const cfw_document *doc, char **out) {
  return Guard([&] {
    Require(doc != nullptr, "doc");
    Require(out != nullptr, "out");
    *out = CopyString(corefwb::FormatStats(corefwb::CorpusStats(doc->value)));
  });
}

cfw_status cfw_document_key(const cfw_document *doc, cfw_partition **out) {
  return Guard([&] {
    Require(doc != nullptr, "doc");
    Require(out != nullptr, "out");
    *out = new cfw_partition{corefwb::KeyPartition(doc->value)};
  });
}

cfw_status cfw_semnet_parse(const char *text, size_t len, cfw_semnet **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    *out = new cfw_semnet{corefwb::ParseSemnet(TextOf(text, len))};
  });
}

cfw_status cfw_semnet_load(const char *path, cfw_semnet **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    std::string text = ReadFile(path);
    try {
      *out = new cfw_semnet{corefwb::ParseSemnet(text)};
    } catch (const Error &e) {
      throw Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

void cfw_semnet_free(cfw_semnet *net) { delete net; }

cfw_status cfw_semnet_subsumed(const cfw_semnet *net, const char *a, const char *b, int *out) {
  return Guard([&] {
    Require(net != nullptr && a != nullptr && b != nullptr && out != nullptr, "argument");
    *out = net->value.IsSubsumed(a, b) ? 1 : 0;
  });
}

cfw_status cfw_semnet_compatible(const cfw_semnet *net, const char *a, const char *b, int *out) {
  return Guard([&] {
    Require(net != nullptr && a != nullptr && b != nullptr && out != nullptr, "argument");
    *out = net->value.Compatible(a, b) ? 1 : 0;
  });
}

cfw_status cfw_partition_parse(const char *text, size_t len, cfw_partition **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    *out = new cfw_partition{corefwb::ParsePartition(TextOf(text, len))};
  });
}

cfw_status cfw_partition_load(const char *path, cfw_partition **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    std::string text = ReadFile(path);
    try {
      *out = new cfw_partition{corefwb::ParsePartition(text)};
    } catch (const Error &e) {
      throw Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

void cfw_partition_free(cfw_partition *p) { delete p; }

size_t cfw_partition_size(const cfw_partition *p) { return p == nullptr ? 0 : p->value.size(); }

size_t cfw_partition_group_count(const cfw_partition *p) {
  return p == nullptr ? 0 : p->value.groups().size();
}

cfw_status cfw_partition_serialize(const cfw_partition *p, char **out) {
  return Guard([&] {
    Require(p != nullptr, "partition");
    Require(out != nullptr, "out");
    *out = CopyString(corefwb::SerializePartition(p->value));
  });
}

cfw_status cfw_config_new_default(cfw_config **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    *out = new cfw_config{};
  });
}

cfw_status cfw_config_parse(const char *text, size_t len, cfw_config **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    *out = new cfw_config{corefwb::ParseConfig(TextOf(text, len))};
  });
}

cfw_status cfw_config_load(const char *path, cfw_config **out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    std::string text = ReadFile(path);
    try {
      *out = new cfw_config{corefwb::ParseConfig(text)};
    } catch (const Error &e) {
      throw Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

void cfw_config_free(cfw_config *cfg) { delete cfg; }

cfw_status cfw_config_set(cfw_config *cfg, const char *key, const char *value) {
  return Guard([&] {
    Require(cfg != nullptr && key != nullptr && value != nullptr, "argument");
    // Re-parse the full configuration so validation stays in one place.
    std::string text = corefwb::SerializeConfig(cfg->value);
    std::string patched;
    std::istringstream lines(text);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
      if (line.rfind(std::string(key) + " = ", 0) == 0) {
        line = std::string(key) + " = " + value;
        found = true;
      }
      patched += line + "\n";
    }
    if (!found) throw Error(ErrorCode::kInvalidArgument, std::string("unknown key '") + key + "'");
    try {
      cfg->value = corefwb::ParseConfig(patched);
    } catch (const Error &e) {
      throw Error(ErrorCode::kInvalidArgument, e.what());
    }
  });
}

cfw_status cfw_config_serialize(const cfw_config *cfg, char **out) {
  return Guard([&] {
    Require(cfg != nullptr, "config");
    Require(out != nullptr, "out");
    *out = CopyString(corefwb::SerializeConfig(cfg->value));
  });
}

cfw_status cfw_resolve(const cfw_document *doc, const cfw_semnet *net, const cfw_config *cfg,
                       cfw_partition **partition_out, char **trace_out) {
  return Guard([&] {
    Require(doc != nullptr && net != nullptr, "input handle");
    Require(partition_out != nullptr, "partition_out");
    auto resolution = corefwb::Resolve(doc->value, ConfigOrDefault(cfg), net->value);
    char *trace = trace_out ? CopyString(corefwb::FormatTrace(resolution.trace)) : nullptr;
    *partition_out = new cfw_partition{std::move(resolution.partition)};
    if (trace_out) *trace_out = trace;
  });
}

cfw_status cfw_score_partitions(const cfw_partition *key, const cfw_partition *response,
                                cfw_method method, cfw_score *out) {
  return Guard([&] {
    Require(key != nullptr && response != nullptr && out != nullptr, "argument");
    const auto s = corefwb::ScoreWith(MethodOf(method), key->value, response->value);
    *out = {method,
            s.recall_value(),
            s.precision_value(),
            s.f_measure,
            s.recall.numerator(),
            s.recall.denominator(),
            s.precision.numerator(),
            s.precision.denominator()};
  });
}

cfw_status cfw_score_report(const cfw_partition *key, const cfw_partition *response,
                            const cfw_method *methods, size_t num_methods, char **out) {
  return Guard([&] {
    Require(key != nullptr && response != nullptr && out != nullptr, "argument");
    Require(methods != nullptr || num_methods == 0, "methods");
    std::vector<corefwb::Score> scores;
    for (size_t i = 0; i < num_methods; ++i) {
      scores.push_back(corefwb::ScoreWith(MethodOf(methods[i]), key->value, response->value));
    }
    *out = CopyString(corefwb::FormatScores(scores));
  });
}

cfw_status cfw_ablate(const cfw_document *doc, const cfw_semnet *net, const cfw_config *cfg,
                      const char *rules, cfw_ablation_mode mode, cfw_method method,
                      cfw_format format, char **report_out) {
  return Guard([&] {
    Require(doc != nullptr && net != nullptr, "input handle");
    Require(rules != nullptr && report_out != nullptr, "argument");
    if (mode != CFW_ABLATE_FULL_GRID && mode != CFW_ABLATE_ENDPOINTS) {
      throw Error(ErrorCode::kInvalidArgument, "unknown ablation mode");
    }
    const auto rule_list = corefwb::ParseRuleList(rules);
    corefwb::SolverConfig base = ConfigOrDefault(cfg);
    for (auto rule : rule_list) corefwb::SetRule(base, rule, true);
    const auto report = corefwb::Ablate(
        doc->value, net->value, base, rule_list,
        mode == CFW_ABLATE_FULL_GRID ? corefwb::AblationMode::kFullGrid
                                     : corefwb::AblationMode::kEndpoints,
        MethodOf(method));
    *report_out = CopyString(corefwb::EmitReport(report, FormatOf(format)));
  });
}

cfw_status cfw_optimize(const cfw_document *doc, const cfw_semnet *net, const cfw_config *cfg,
                        const cfw_optimize_options *options, cfw_format format,
                        cfw_config **best_out, char **trace_out) {
  return Guard([&] {
    Require(doc != nullptr && net != nullptr, "input handle");
    Require(options != nullptr, "options");
    corefwb::OptimizeOptions opts;
    opts.method = MethodOf(options->method);
    opts.seed = options->seed;
    opts.max_iters = options->max_iters;
    opts.patience = options->patience;
    const auto report_format = FormatOf(format);
    const auto trace = corefwb::Optimize(doc->value, net->value, ConfigOrDefault(cfg), opts);
    char *text = trace_out ? CopyString(corefwb::EmitReport(trace, report_format)) : nullptr;
    if (best_out) *best_out = new cfw_config{trace.best_config};
    if (trace_out) *trace_out = text;
  });
}

}  // extern "C"
