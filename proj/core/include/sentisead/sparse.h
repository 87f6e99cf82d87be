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


#ifndef SENTISEAD_SPARSE_H_
#define SENTISEAD_SPARSE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sentisead {

// Sparse row with strictly increasing indices below `dim`. Absent entries
// are zero.
struct SparseVector {
  std::size_t dim = 0;
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t nnz() const { return indices.size(); }
  double at(std::uint32_t index) const;
  // Appends an entry; index must exceed the last one. Zeros are dropped.
  void push(std::uint32_t index, double value);
  std::vector<double> dense() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

}  // namespace sentisead

#endif  // SENTISEAD_SPARSE_H_
