// Copyright 2026 The Sentisead Authors.
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


#ifndef SENTISEAD_ERROR_H_
#define SENTISEAD_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace sentisead {

// Base of every error raised by the library. Messages name the offending
// file, row, column or flag where one exists.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SENTISEAD_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

SENTISEAD_DEFINE_ERROR(IoError);
SENTISEAD_DEFINE_ERROR(FormatError);
SENTISEAD_DEFINE_ERROR(SchemaError);
SENTISEAD_DEFINE_ERROR(LabelError);
SENTISEAD_DEFINE_ERROR(DuplicateError);
SENTISEAD_DEFINE_ERROR(StratificationError);
SENTISEAD_DEFINE_ERROR(RangeError);
SENTISEAD_DEFINE_ERROR(TrainingError);
SENTISEAD_DEFINE_ERROR(CoverageError);
SENTISEAD_DEFINE_ERROR(LayoutError);
SENTISEAD_DEFINE_ERROR(FoldMismatchError);
SENTISEAD_DEFINE_ERROR(UndefinedKappaError);
SENTISEAD_DEFINE_ERROR(CategoryError);
SENTISEAD_DEFINE_ERROR(ConfigError);

#undef SENTISEAD_DEFINE_ERROR

// Raised by majority voting under the abstain-error tie rule.
class TieError : public Error {
 public:
  TieError(const std::string& what, std::vector<std::string> tied)
      : Error(what), tied_(std::move(tied)) {}
  const std::vector<std::string>& tied() const { return tied_; }

 private:
  std::vector<std::string> tied_;
};

}  // namespace sentisead

#endif  // SENTISEAD_ERROR_H_
