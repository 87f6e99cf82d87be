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


#ifndef SENTISEAD_POLARITY_H_
#define SENTISEAD_POLARITY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sentisead {

// Three-valued sentiment label. The underlying value is the ordinal
// encoding used by ordinal metrics (weighted kappa).
enum class Polarity : std::int8_t {
  kNegative = -1,
  kNeutral = 0,
  kPositive = 1,
};

inline constexpr std::size_t kNumClasses = 3;

// Canonical class order used by learners and tie rules:
// negative < neutral < positive.
inline constexpr std::array<Polarity, kNumClasses> kClassOrder = {
    Polarity::kNegative, Polarity::kNeutral, Polarity::kPositive};

constexpr int ordinal(Polarity p) { return static_cast<int>(p); }

// Position of `p` in kClassOrder.
constexpr std::size_t class_index(Polarity p) {
  return static_cast<std::size_t>(ordinal(p) + 1);
}

constexpr Polarity class_at(std::size_t index) {
  return kClassOrder[index];
}

// Throws RangeError for values outside {-1, 0, +1}.
Polarity from_ordinal(int value);

std::string_view to_string(Polarity p);

// Case-insensitive; accepts names and the integers -1/0/+1/1.
std::optional<Polarity> parse_polarity(std::string_view token);

}  // namespace sentisead

#endif  // SENTISEAD_POLARITY_H_
