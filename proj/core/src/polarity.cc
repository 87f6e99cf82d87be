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


#include "sentisead/polarity.h"

#include <string>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {

Polarity from_ordinal(int value) {
  switch (value) {
    case -1: return Polarity::kNegative;
    case 0: return Polarity::kNeutral;
    case 1: return Polarity::kPositive;
  }
  throw RangeError("polarity ordinal out of range: " + std::to_string(value));
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
    case Polarity::kPositive: return "positive";
  }
  return "neutral";
}

std::optional<Polarity> parse_polarity(std::string_view token) {
  std::string t = to_lower(trim(token));
  if (t == "positive" || t == "+1" || t == "1") return Polarity::kPositive;
  if (t == "negative" || t == "-1") return Polarity::kNegative;
  if (t == "neutral" || t == "0") return Polarity::kNeutral;
  return std::nullopt;
}

}  // namespace sentisead
