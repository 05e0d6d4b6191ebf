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

// Command-line front end. Talks to the workbench only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corefwb/corefwb.h"

namespace {

enum ExitCode { kSuccess = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct Failure {
  ExitCode code;
  std::string message;
};

ExitCode ExitFor(cfw_status status) {
  switch (status) {
    case CFW_OK: return kSuccess;
    case CFW_ERR_INVALID_ARGUMENT: return kUsage;
    case CFW_ERR_SEQUENCING:
    case CFW_ERR_INTERNAL: return kInternal;
    default: return kInput;
  }
}

void Check(cfw_status status) {
  if (status != CFW_OK) throw Failure{ExitFor(status), cfw_last_error()};
}

template <typename T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using DocumentPtr = std::unique_ptr<cfw_document, Deleter<cfw_document, cfw_document_free>>;
using SemnetPtr = std::unique_ptr<cfw_semnet, Deleter<cfw_semnet, cfw_semnet_free>>;
using PartitionPtr = std::unique_ptr<cfw_partition, Deleter<cfw_partition, cfw_partition_free>>;
using ConfigPtr = std::unique_ptr<cfw_config, Deleter<cfw_config, cfw_config_free>>;

// Takes ownership of a string returned by the library.
std::string Take(char *s) {
  std::string out = s ? s : "";
  cfw_string_free(s);
  return out;
}

DocumentPtr LoadDocument(const std::string &path) {
  cfw_document *doc = nullptr;
  Check(cfw_document_load(path.c_str(), &doc));
  return DocumentPtr(doc);
}

SemnetPtr LoadSemnet(const std::string &path) {
  cfw_semnet *net = nullptr;
  if (path.empty()) {
    Check(cfw_semnet_parse("", 0, &net));
  } else {
    Check(cfw_semnet_load(path.c_str(), &net));
  }
  return SemnetPtr(net);
}

ConfigPtr LoadConfig(const std::string &path) {
  cfw_config *cfg = nullptr;
  if (path.empty()) {
    Check(cfw_config_new_default(&cfg));
  } else {
    Check(cfw_config_load(path.c_str(), &cfg));
  }
  return ConfigPtr(cfg);
}

PartitionPtr LoadPartition(const std::string &path) {
  cfw_partition *p = nullptr;
  Check(cfw_partition_load(path.c_str(), &p));
  return PartitionPtr(p);
}

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << contents;
  if (!out || !out.flush()) throw Failure{kInput, "cannot write '" + path + "'"};
}

std::vector<cfw_method> MethodsFor(const std::string &name) {
  if (name == "muc") return {CFW_METHOD_MUC};
  if (name == "core") return {CFW_METHOD_CORE_MR};
  if (name == "excore") return {CFW_METHOD_EX_CORE_MR};
  return {CFW_METHOD_MUC, CFW_METHOD_CORE_MR, CFW_METHOD_EX_CORE_MR};
}

cfw_format FormatFor(const std::string &name) {
  return name == "markdown" ? CFW_FORMAT_MARKDOWN : CFW_FORMAT_TSV;
}

struct Options {
  std::string corpus, semnet, config, out, trace, key, response;
  std::string method = "core";
  std::string score_method = "all";
  std::string rules = "RG,RN,RS";
  std::string mode = "grid";
  std::string format = "tsv";
  std::uint64_t seed = 1;
  std::size_t iters = 100;
  std::size_t patience = 30;
};

void RunStats(const Options &o) {
  auto doc = LoadDocument(o.corpus);
  char *text = nullptr;
  Check(cfw_document_stats_text(doc.get(), &text));
  std::cout << Take(text);
}

void RunResolve(const Options &o) {
  auto doc = LoadDocument(o.corpus);
  auto net = LoadSemnet(o.semnet);
  auto cfg = LoadConfig(o.config);
  cfw_partition *raw = nullptr;
  char *trace = nullptr;
  Check(cfw_resolve(doc.get(), net.get(), cfg.get(), &raw, o.trace.empty() ? nullptr : &trace));
  PartitionPtr partition(raw);
  std::string trace_text = Take(trace);
  char *text = nullptr;
  Check(cfw_partition_serialize(partition.get(), &text));
  WriteFile(o.out, Take(text));
  if (!o.trace.empty()) WriteFile(o.trace, trace_text);
}

void RunScore(const Options &o) {
  PartitionPtr key;
  if (!o.key.empty()) {
    key = LoadPartition(o.key);
  } else {
    auto doc = LoadDocument(o.corpus);
    cfw_partition *raw = nullptr;
    Check(cfw_document_key(doc.get(), &raw));
    key.reset(raw);
  }
  auto response = LoadPartition(o.response);
  const auto methods = MethodsFor(o.score_method);
  char *text = nullptr;
  Check(cfw_score_report(key.get(), response.get(), methods.data(), methods.size(), &text));
  std::cout << Take(text);
}

void RunAblate(const Options &o) {
  if (o.method == "all") throw Failure{kUsage, "ablate needs a single --method"};
  auto doc = LoadDocument(o.corpus);
  auto net = LoadSemnet(o.semnet);
  auto cfg = LoadConfig(o.config);
  char *report = nullptr;
  Check(cfw_ablate(doc.get(), net.get(), cfg.get(), o.rules.c_str(),
                   o.mode == "endpoints" ? CFW_ABLATE_ENDPOINTS : CFW_ABLATE_FULL_GRID,
                   MethodsFor(o.method).front(), FormatFor(o.format), &report));
  std::cout << Take(report);
}

void RunOptimize(const Options &o) {
  if (o.method == "all") throw Failure{kUsage, "optimize needs a single --method"};
  auto doc = LoadDocument(o.corpus);
  auto net = LoadSemnet(o.semnet);
  auto cfg = LoadConfig(o.config);
  cfw_optimize_options options{MethodsFor(o.method).front(), o.seed, o.iters, o.patience};
  cfw_config *best = nullptr;
  char *trace = nullptr;
  Check(cfw_optimize(doc.get(), net.get(), cfg.get(), &options, FormatFor(o.format), &best,
                     &trace));
  ConfigPtr best_cfg(best);
  std::string trace_text = Take(trace);
  char *text = nullptr;
  Check(cfw_config_serialize(best_cfg.get(), &text));
  WriteFile(o.out, Take(text));
  std::cout << trace_text;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Coreference resolution workbench"};
  app.require_subcommand(1);
  Options o;

  auto methods = CLI::IsMember({"muc", "core", "excore", "all"});
  auto formats = CLI::IsMember({"tsv", "markdown"});

  auto *stats = app.add_subcommand("stats", "Print corpus statistics");
  stats->add_option("--corpus", o.corpus, "Annotated corpus")->required();

  auto *resolve = app.add_subcommand("resolve", "Resolve a corpus into a response partition");
  resolve->add_option("--corpus", o.corpus, "Annotated corpus")->required();
  resolve->add_option("--semnet", o.semnet, "Semantic network");
  resolve->add_option("--config", o.config, "Solver configuration");
  resolve->add_option("--out", o.out, "Response partition to write")->required();
  resolve->add_option("--trace", o.trace, "Per-RE trace to write");

  auto *score = app.add_subcommand("score", "Score a response against a key");
  auto *key_opt = score->add_option("--key", o.key, "Key partition");
  auto *corpus_opt = score->add_option("--corpus", o.corpus, "Corpus whose annotations give the key");
  key_opt->excludes(corpus_opt);
  score->add_option("--response", o.response, "Response partition")->required();
  score->add_option("--method", o.score_method, "Scoring method")->check(methods)->default_val("all");

  auto *ablate = app.add_subcommand("ablate", "Rule ablation report");
  ablate->add_option("--corpus", o.corpus, "Annotated corpus")->required();
  ablate->add_option("--semnet", o.semnet, "Semantic network");
  ablate->add_option("--config", o.config, "Base solver configuration");
  ablate->add_option("--rules", o.rules, "Comma-separated rules")->default_val("RG,RN,RS");
  ablate->add_option("--mode", o.mode, "grid or endpoints")
      ->check(CLI::IsMember({"grid", "endpoints"}))
      ->default_val("grid");
  ablate->add_option("--method", o.method, "Scoring method for coefficients")
      ->check(methods)
      ->default_val("core");
  ablate->add_option("--format", o.format, "tsv or markdown")->check(formats)->default_val("tsv");

  auto *optimize = app.add_subcommand("optimize", "Tune activation parameters");
  optimize->add_option("--corpus", o.corpus, "Annotated corpus")->required();
  optimize->add_option("--semnet", o.semnet, "Semantic network");
  optimize->add_option("--config", o.config, "Starting configuration");
  optimize->add_option("--method", o.method, "Scoring method to optimize")
      ->check(methods)
      ->default_val("core");
  optimize->add_option("--seed", o.seed, "Random seed")->default_val(1);
  optimize->add_option("--iters", o.iters, "Maximum iterations")->default_val(100);
  optimize->add_option("--patience", o.patience, "Stop after this many rejections")
      ->default_val(30);
  optimize->add_option("--out", o.out, "Best configuration to write")->required();
  optimize->add_option("--format", o.format, "tsv or markdown")->check(formats)->default_val("tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "corefwb: usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*stats) RunStats(o);
    if (*resolve) RunResolve(o);
    if (*score) {
      if (o.key.empty() && o.corpus.empty()) throw Failure{kUsage, "score needs --key or --corpus"};
      RunScore(o);
    }
    if (*ablate) RunAblate(o);
    if (*optimize) RunOptimize(o);
  } catch (const Failure &f) {
    std::cerr << "corefwb: " << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "corefwb: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kSuccess;
}
