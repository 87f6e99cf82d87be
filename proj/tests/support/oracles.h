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


// Definition-level reference computations used to cross-check the library.
// Each one works from raw label lists and avoids the library's data
// structures on purpose.

#ifndef SENTISEAD_TESTS_SUPPORT_ORACLES_H_
#define SENTISEAD_TESTS_SUPPORT_ORACLES_H_

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

// Labels are ordinals: -1, 0, +1.
struct PRF {
  double p = 0, r = 0, f = 0;
};

inline double safe_div(double a, double b) { return b == 0 ? 0.0 : a / b; }

inline PRF class_prf(const std::vector<int>& gold, const std::vector<int>& pred,
                     int label) {
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i] == label && gold[i] == label) tp += 1;
    if (pred[i] == label && gold[i] != label) fp += 1;
    if (pred[i] != label && gold[i] == label) fn += 1;
  }
  PRF m;
  m.p = safe_div(tp, tp + fp);
  m.r = safe_div(tp, tp + fn);
  m.f = m.p + m.r == 0 ? 0.0 : 2 * m.p * m.r / (m.p + m.r);
  return m;
}

inline PRF macro(const std::vector<int>& gold, const std::vector<int>& pred) {
  PRF out;
  for (int label : {1, -1, 0}) {
    PRF m = class_prf(gold, pred, label);
    out.p += m.p / 3;
    out.r += m.r / 3;
    out.f += m.f / 3;
  }
  return out;
}

inline double accuracy(const std::vector<int>& gold, const std::vector<int>& pred) {
  double hit = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) hit += gold[i] == pred[i];
  return safe_div(hit, static_cast<double>(gold.size()));
}

// Weighted kappa from explicit observed and expected tables. Returns empty
// when the expected weighted disagreement is zero.
inline std::optional<double> kappa(const std::vector<int>& gold,
                                   const std::vector<int>& pred, bool quadratic) {
  const double n = static_cast<double>(gold.size());
  if (n == 0) return std::nullopt;
  double O[3][3] = {}, rows[3] = {}, cols[3] = {};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    O[gold[i] + 1][pred[i] + 1] += 1;
    rows[gold[i] + 1] += 1;
    cols[pred[i] + 1] += 1;
  }
  double num = 0, den = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      double w = std::abs(a - b) / 2.0;
      if (quadratic) w *= w;
      num += w * O[a][b] / n;
      den += w * (rows[a] / n) * (cols[b] / n);
    }
  }
  if (den == 0) return std::nullopt;
  return 1.0 - num / den;
}

inline double entropy(const std::vector<double>& counts) {
  double total = 0, h = 0;
  for (double c : counts) total += c;
  for (double c : counts) {
    if (c > 0) h -= (c / total) * std::log(c / total);
  }
  return h;
}

// Majority vote by frequency count. tie_rule: 0 neutral, 1 priority order.
// Sets `tied` when the top count is shared.
inline int vote(const std::vector<int>& labels, int tie_rule, bool& tied) {
  std::map<int, int> freq;
  for (int l : labels) ++freq[l];
  int best = -2, best_count = -1, holders = 0;
  for (const auto& [label, count] : freq) {
    if (count > best_count) {
      best = label;
      best_count = count;
      holders = 1;
    } else if (count == best_count) {
      ++holders;
    }
  }
  tied = holders > 1;
  if (!tied) return best;
  if (tie_rule == 0) return 0;
  for (int l : labels) {
    if (freq[l] == best_count) return l;
  }
  return 0;
}

struct ComplementRow {
  int wrong = 0;
  std::vector<int> right_by;  // per tool, -1 entry for the row's own tool
  int at_least_one = 0;
};

// rows[u][t] is tool t's label on unit u. `tool` is -1 for the pooled row.
inline ComplementRow complement(const std::vector<int>& gold,
                                const std::vector<std::vector<int>>& labels,
                                int tool, bool neutral_group) {
  const int tools = static_cast<int>(labels.front().size());
  ComplementRow row;
  row.right_by.assign(tools, 0);
  for (std::size_t u = 0; u < gold.size(); ++u) {
    if ((gold[u] == 0) != neutral_group) continue;
    bool selected = false;
    if (tool < 0) {
      for (int t = 0; t < tools; ++t) selected |= labels[u][t] != gold[u];
    } else {
      selected = labels[u][tool] != gold[u];
    }
    if (!selected) continue;
    ++row.wrong;
    bool any = false;
    for (int t = 0; t < tools; ++t) {
      if (t == tool) continue;
      if (labels[u][t] == gold[u]) {
        ++row.right_by[t];
        any = true;
      }
    }
    row.at_least_one += any;
  }
  if (tool >= 0) row.right_by[tool] = -1;
  return row;
}

}  // namespace oracle

#endif  // SENTISEAD_TESTS_SUPPORT_ORACLES_H_
