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


#ifndef SENTISEAD_VOCABULARY_H_
#define SENTISEAD_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sentisead/textprep.h"

namespace sentisead {

// Term -> dense column index with smoothed inverse document frequencies.
//
//   tf-idf(t, d) = tf(t, d) * (ln((1 + N) / (1 + df(t))) + 1)
//
// with N the number of fitting documents and raw term counts as tf. Terms
// are indexed in lexicographic order.
class Vocabulary {
 public:
  Vocabulary() = default;

  // `fitted_on` labels the fold set the documents came from.
  static Vocabulary fit(std::span<const TokenStream> documents,
                        std::string fitted_on);
  static Vocabulary from_parts(std::vector<std::string> terms,
                               std::vector<double> idf,
                               std::size_t document_count,
                               std::string fitted_on);

  std::size_t size() const { return terms_.size(); }
  const std::string& fitted_on() const { return fitted_on_; }
  std::size_t document_count() const { return document_count_; }
  std::span<const std::string> terms() const { return terms_; }
  std::span<const double> idf() const { return idf_; }
  std::optional<std::uint32_t> index(std::string_view term) const;
  bool contains(std::string_view term) const { return index(term).has_value(); }

  // (column, weight) pairs sorted by column. Unknown terms contribute
  // nothing.
  std::vector<std::pair<std::uint32_t, double>> tfidf(
      const TokenStream& tokens) const;

 private:
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t document_count_ = 0;
  std::string fitted_on_;
};

}  // namespace sentisead

#endif  // SENTISEAD_VOCABULARY_H_
