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

#ifndef COREFWB_ERROR_H_
#define COREFWB_ERROR_H_

#include <stdexcept>
#include <string>

namespace corefwb {

// Error categories. Each maps onto one C API status code.
enum class ErrorCode {
  kParse,           // malformed corpus / semnet / partition / config text
  kFormat,          // structurally invalid value (e.g. non-partition)
  kDuplicateId,
  kOverlap,
  kIncompleteKey,
  kCycle,
  kUnknownConcept,
  kUniverseMismatch,
  kSequencing,
  kInvalidArgument,
  kSizeBound,
  kIo,
  kInternal,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corefwb

#endif  // COREFWB_ERROR_H_
