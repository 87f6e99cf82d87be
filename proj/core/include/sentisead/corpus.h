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


#ifndef SENTISEAD_CORPUS_H_
#define SENTISEAD_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentisead/polarity.h"

namespace sentisead {

// One labeled text item.
struct Unit {
  std::string id;
  std::string text;
  Polarity gold = Polarity::kNeutral;
};

// An ordered, immutable collection of units with unique ids and non-blank
// text.
class Dataset {
 public:
  Dataset() = default;
  // Throws DuplicateError on a repeated id and SchemaError on blank text.
  Dataset(std::string name, std::vector<Unit> units);

  const std::string& name() const { return name_; }
  std::span<const Unit> units() const { return units_; }
  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }
  const Unit& operator[](std::size_t i) const { return units_[i]; }

  std::optional<std::size_t> find(std::string_view id) const;
  // Indexed by class_index().
  std::array<std::size_t, kNumClasses> class_counts() const;

  Dataset subset(std::span<const std::size_t> positions,
                 std::string name) const;

 private:
  std::string name_;
  std::vector<Unit> units_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace corpus {

// Reads a CSV with header columns id,text,label (extra columns ignored).
Dataset load_dataset(const std::filesystem::path& path, std::string name);
Dataset parse_dataset(std::string_view csv_text, std::string name,
                      std::string source = "<memory>");

}  // namespace corpus

// Mapping unit id -> fold index in [0, k), stored in dataset order.
class FoldAssignment {
 public:
  FoldAssignment() = default;
  // Throws RangeError for k < 2 or a fold outside [0, k), DuplicateError on
  // a repeated id.
  FoldAssignment(int k, std::vector<std::string> ids, std::vector<int> folds);

  int k() const { return k_; }
  std::size_t size() const { return ids_.size(); }
  std::span<const std::string> ids() const { return ids_; }
  std::span<const int> folds() const { return folds_; }
  int fold_of(std::string_view id) const;
  std::vector<std::size_t> fold_positions(int fold) const;

  // Canonical `id,fold` CSV rendering.
  std::string to_csv() const;
  // Hex FNV-1a digest of to_csv(); recorded next to prediction matrices.
  std::string fingerprint() const;

  // True when the assignment covers exactly the dataset's ids in order.
  bool matches(const Dataset& d) const;

  friend bool operator==(const FoldAssignment&,
                         const FoldAssignment&) = default;

 private:
  int k_ = 0;
  std::vector<std::string> ids_;
  std::vector<int> folds_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Positions into FoldAssignment::ids() for one rotation.
struct TrainTestSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

namespace corpus {

// Shuffles each class with a seeded stream, then deals its members
// round-robin onto folds, continuing the deal position across classes.
// Every fold receives floor or ceil of count/k members of each class.
//
// Unless allow_sparse is set, every class present must have at least k
// members; with allow_sparse the split proceeds and some folds lack the
// sparse classes.
FoldAssignment stratified_folds(const Dataset& d, int k,
                                std::uint64_t seed = 45,
                                bool allow_sparse = false);

TrainTestSplit train_test_views(const FoldAssignment& fa, int test_fold);

void write_fold_file(const std::filesystem::path& path,
                     const FoldAssignment& fa);
FoldAssignment read_fold_file(const std::filesystem::path& path);
FoldAssignment parse_fold_csv(std::string_view csv_text,
                              std::string source = "<memory>");

// Reorders an imported assignment to dataset order; throws SchemaError when
// the id sets differ.
FoldAssignment align_to(const FoldAssignment& fa, const Dataset& d);

}  // namespace corpus
}  // namespace sentisead

#endif  // SENTISEAD_CORPUS_H_
