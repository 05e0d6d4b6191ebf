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

#ifndef COREFWB_TESTS_TESTING_SYNTHETIC_CORPUS_H_
#define COREFWB_TESTS_TESTING_SYNTHETIC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace corefwb::testing {

// Knobs of the synthetic narrative generator. Referents are persons,
// groups, places, objects and animals; each RE either introduces a new
// referent or re-mentions a recent one.
struct SyntheticShape {
  std::uint64_t seed = 1;
  std::size_t num_res = 650;
  double new_referent_rate = 0.57;
  double pronoun_rate = 0.16;  // share of all REs
  double unparsed_rate = 0.04;
  double nested_rate = 0.03;
  double modifier_rate = 0.15;
  std::size_t min_filler = 1;
  std::size_t max_filler = 4;
  std::size_t sentence_tokens = 14;
  std::size_t paragraph_sentences = 8;
};

// About 650 REs over 370 referents (ratio near 1.7).
SyntheticShape VaScaleShape(std::uint64_t seed);
// About 3400 REs over 480 referents (ratio near 7).
SyntheticShape LpgScaleShape(std::uint64_t seed);

struct SyntheticCorpus {
  std::string corpus;  // corpus-format text with key annotations
  std::string semnet;  // semnet-format text covering every concept used
};

SyntheticCorpus GenerateCorpus(const SyntheticShape &shape);

}  // namespace corefwb::testing

#endif  // COREFWB_TESTS_TESTING_SYNTHETIC_CORPUS_H_
