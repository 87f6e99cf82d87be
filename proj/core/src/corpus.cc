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


#include "sentisead/corpus.h"

#include <algorithm>
#include <cstdio>

#include "sentisead/csv.h"
#include "sentisead/error.h"
#include "sentisead/rng.h"

namespace sentisead {

Dataset::Dataset(std::string name, std::vector<Unit> units)
    : name_(std::move(name)), units_(std::move(units)) {
  index_.reserve(units_.size());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const Unit& u = units_[i];
    if (u.id.empty()) {
      throw SchemaError(name_ + ": unit #" + std::to_string(i + 1) +
                        " has an empty id");
    }
    if (trim(u.text).empty()) {
      throw SchemaError(name_ + ": unit '" + u.id + "' has blank text");
    }
    if (!index_.emplace(u.id, i).second) {
      throw DuplicateError(name_ + ": duplicate unit id '" + u.id + "'");
    }
  }
}

std::optional<std::size_t> Dataset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::array<std::size_t, kNumClasses> Dataset::class_counts() const {
  std::array<std::size_t, kNumClasses> counts{};
  for (const Unit& u : units_) ++counts[class_index(u.gold)];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> positions,
                        std::string name) const {
  std::vector<Unit> units;
  units.reserve(positions.size());
  for (std::size_t p : positions) units.push_back(units_.at(p));
  return Dataset(std::move(name), std::move(units));
}

namespace corpus {

Dataset parse_dataset(std::string_view csv_text, std::string name,
                      std::string source) {
  CsvTable t = parse_csv(csv_text, std::move(source));
  const std::size_t id_col = t.column("id");
  const std::size_t text_col = t.column("text");
  const std::size_t label_col = t.column("label");

  std::vector<Unit> units;
  units.reserve(t.rows.size());
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto label = parse_polarity(row[label_col]);
    if (!label) {
      throw LabelError(t.where(r) + ": unknown label '" + row[label_col] +
                       "' for id '" + row[id_col] + "'");
    }
    if (!seen.emplace(row[id_col], r).second) {
      throw DuplicateError(t.where(r) + ": duplicate id '" + row[id_col] +
                           "' (first at " + t.where(seen[row[id_col]]) + ")");
    }
    if (trim(row[text_col]).empty()) {
      throw SchemaError(t.where(r) + ": blank text for id '" + row[id_col] +
                        "'");
    }
    units.push_back(Unit{row[id_col], row[text_col], *label});
  }
  return Dataset(std::move(name), std::move(units));
}

Dataset load_dataset(const std::filesystem::path& path, std::string name) {
  return parse_dataset(read_text_file(path), std::move(name), path.string());
}

}  // namespace corpus

FoldAssignment::FoldAssignment(int k, std::vector<std::string> ids,
                               std::vector<int> folds)
    : k_(k), ids_(std::move(ids)), folds_(std::move(folds)) {
  if (k_ < 2) throw RangeError("fold count must be >= 2, got " + std::to_string(k_));
  if (ids_.size() != folds_.size()) {
    throw SchemaError("fold assignment: id and fold lists differ in length");
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (folds_[i] < 0 || folds_[i] >= k_) {
      throw RangeError("fold assignment: fold " + std::to_string(folds_[i]) +
                       " of id '" + ids_[i] + "' outside [0, " +
                       std::to_string(k_) + ")");
    }
    if (!index_.emplace(ids_[i], i).second) {
      throw DuplicateError("fold assignment: duplicate id '" + ids_[i] + "'");
    }
  }
}

int FoldAssignment::fold_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw CoverageError("fold assignment has no id '" + std::string(id) + "'");
  }
  return folds_[it->second];
}

std::vector<std::size_t> FoldAssignment::fold_positions(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < folds_.size(); ++i) {
    if (folds_[i] == fold) out.push_back(i);
  }
  return out;
}

std::string FoldAssignment::to_csv() const {
  std::string out = "id,fold\n";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    out += csv_field(ids_[i]);
    out.push_back(',');
    out += std::to_string(folds_[i]);
    out.push_back('\n');
  }
  return out;
}

std::string FoldAssignment::fingerprint() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "k%d-%016llx", k_,
                static_cast<unsigned long long>(fnv1a64(to_csv())));
  return buf;
}

bool FoldAssignment::matches(const Dataset& d) const {
  if (d.size() != ids_.size()) return false;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (d[i].id != ids_[i]) return false;
  }
  return true;
}

namespace corpus {

FoldAssignment stratified_folds(const Dataset& d, int k, std::uint64_t seed,
                                bool allow_sparse) {
  if (k < 2) throw RangeError("k must be >= 2, got " + std::to_string(k));
  const auto units = d.units();

  std::array<std::vector<std::size_t>, kNumClasses> members;
  for (std::size_t i = 0; i < units.size(); ++i) {
    members[class_index(units[i].gold)].push_back(i);
  }
  if (!allow_sparse) {
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      std::size_t n = members[c].size();
      if (n > 0 && n < static_cast<std::size_t>(k)) {
        throw StratificationError(
            d.name() + ": class '" + std::string(to_string(class_at(c))) +
            "' has " + std::to_string(n) + " units, fewer than k=" +
            std::to_string(k) + " (pass allow_sparse to split anyway)");
      }
    }
  }

  std::vector<int> folds(units.size(), 0);
  std::size_t deal = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    Rng rng(derive_seed(seed, "class:" + std::string(to_string(class_at(c)))));
    rng.shuffle(std::span<std::size_t>(members[c]));
    for (std::size_t pos : members[c]) {
      folds[pos] = static_cast<int>(deal % static_cast<std::size_t>(k));
      ++deal;
    }
  }

  std::vector<std::string> ids;
  ids.reserve(units.size());
  for (const Unit& u : units) ids.push_back(u.id);
  return FoldAssignment(k, std::move(ids), std::move(folds));
}

TrainTestSplit train_test_views(const FoldAssignment& fa, int test_fold) {
  if (test_fold < 0 || test_fold >= fa.k()) {
    throw RangeError("test fold " + std::to_string(test_fold) +
                     " outside [0, " + std::to_string(fa.k()) + ")");
  }
  TrainTestSplit split;
  const auto folds = fa.folds();
  for (std::size_t i = 0; i < folds.size(); ++i) {
    (folds[i] == test_fold ? split.test : split.train).push_back(i);
  }
  return split;
}

FoldAssignment parse_fold_csv(std::string_view csv_text, std::string source) {
  CsvTable t = parse_csv(csv_text, std::move(source));
  const std::size_t id_col = t.column("id");
  const std::size_t fold_col = t.column("fold");
  std::vector<std::string> ids;
  std::vector<int> folds;
  int max_fold = -1;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string& cell = t.rows[r][fold_col];
    int fold = 0;
    try {
      std::size_t used = 0;
      fold = std::stoi(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw FormatError(t.where(r) + ": fold '" + cell + "' is not an integer");
    }
    if (fold < 0) throw RangeError(t.where(r) + ": negative fold " + cell);
    max_fold = std::max(max_fold, fold);
    ids.push_back(t.rows[r][id_col]);
    folds.push_back(fold);
  }
  return FoldAssignment(std::max(max_fold + 1, 2), std::move(ids),
                        std::move(folds));
}

FoldAssignment read_fold_file(const std::filesystem::path& path) {
  return parse_fold_csv(read_text_file(path), path.string());
}

void write_fold_file(const std::filesystem::path& path,
                     const FoldAssignment& fa) {
  write_file_atomic(path, fa.to_csv());
}

FoldAssignment align_to(const FoldAssignment& fa, const Dataset& d) {
  if (fa.size() != d.size()) {
    throw SchemaError("fold file covers " + std::to_string(fa.size()) +
                      " ids but dataset '" + d.name() + "' has " +
                      std::to_string(d.size()));
  }
  std::vector<std::string> ids;
  std::vector<int> folds;
  ids.reserve(d.size());
  folds.reserve(d.size());
  for (const Unit& u : d.units()) {
    int f;
    try {
      f = fa.fold_of(u.id);
    } catch (const CoverageError&) {
      throw SchemaError("fold file has no entry for id '" + u.id + "'");
    }
    ids.push_back(u.id);
    folds.push_back(f);
  }
  return FoldAssignment(fa.k(), std::move(ids), std::move(folds));
}

}  // namespace corpus
}  // namespace sentisead
