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


#include "sentisead/vocabulary.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sentisead/error.h"

namespace sentisead {

Vocabulary Vocabulary::fit(std::span<const TokenStream> documents,
                           std::string fitted_on) {
  std::map<std::string, std::size_t> df;
  for (const TokenStream& doc : documents) {
    std::set<std::string_view> seen;
    for (const Token& t : doc) seen.insert(t.surface);
    for (std::string_view term : seen) ++df[std::string(term)];
  }
  const double n = static_cast<double>(documents.size());
  std::vector<std::string> terms;
  std::vector<double> idf;
  terms.reserve(df.size());
  idf.reserve(df.size());
  for (const auto& [term, count] : df) {
    terms.push_back(term);
    idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) +
                  1.0);
  }
  return from_parts(std::move(terms), std::move(idf), documents.size(),
                    std::move(fitted_on));
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms,
                                  std::vector<double> idf,
                                  std::size_t document_count,
                                  std::string fitted_on) {
  if (terms.size() != idf.size()) {
    throw LayoutError("vocabulary: " + std::to_string(terms.size()) +
                      " terms but " + std::to_string(idf.size()) +
                      " idf weights");
  }
  Vocabulary v;
  v.index_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!v.index_.emplace(terms[i], static_cast<std::uint32_t>(i)).second) {
      throw DuplicateError("vocabulary: duplicate term '" + terms[i] + "'");
    }
  }
  v.terms_ = std::move(terms);
  v.idf_ = std::move(idf);
  v.document_count_ = document_count;
  v.fitted_on_ = std::move(fitted_on);
  return v;
}

std::optional<std::uint32_t> Vocabulary::index(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::uint32_t, double>> Vocabulary::tfidf(
    const TokenStream& tokens) const {
  std::map<std::uint32_t, std::size_t> tf;
  for (const Token& t : tokens) {
    if (auto col = index(t.surface)) ++tf[*col];
  }
  std::vector<std::pair<std::uint32_t, double>> out;
  out.reserve(tf.size());
  for (const auto& [col, count] : tf) {
    out.emplace_back(col, static_cast<double>(count) * idf_[col]);
  }
  return out;
}

}  // namespace sentisead
