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

#include "corefwb/error.h"

namespace corefwb {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kDuplicateId: return "duplicate id";
    case ErrorCode::kOverlap: return "overlapping spans";
    case ErrorCode::kIncompleteKey: return "incomplete key";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kUnknownConcept: return "unknown concept";
    case ErrorCode::kUniverseMismatch: return "universe mismatch";
    case ErrorCode::kSequencing: return "sequencing error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kSizeBound: return "size bound exceeded";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "error";
}

}  // namespace corefwb
