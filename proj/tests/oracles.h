//
// Copyright 2026 The tweetaffect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef TWEETAFFECT_TESTS_ORACLES_H_
#define TWEETAFFECT_TESTS_ORACLES_H_

// Straightforward reimplementations used as test oracles. They are written
// from the definitions, without sharing code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace tweetaffect::oracle {

// r = sum (a-ma)(b-mb) / sqrt(sum (a-ma)^2 * sum (b-mb)^2), long double.
inline double Pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

// Rank by counting: 1 + (#smaller) + (#equal - 1) / 2.
inline std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (double w : v) {
      less += w < v[i];
      equal += w == v[i];
    }
    r[i] = 1.0 + less + (equal - 1) / 2.0;
  }
  return r;
}

inline double Spearman(const std::vector<double>& a, const std::vector<double>& b) {
  return Pearson(Ranks(a), Ranks(b));
}

struct SilverRow {
  std::size_t index;  // position in the pool
  double spread;
  double label;
};

// Agreement filter written as a literal loop: compute max-min and the mean of
// the K predictions per tweet, keep spread <= threshold, order by spread with
// ties kept in pool order, keep the first max_added.
inline std::vector<SilverRow> FilterSilver(
    const std::vector<std::vector<double>>& predictions, double threshold,
    std::size_t max_added) {
  std::vector<SilverRow> kept;
  const std::size_t pool = predictions.empty() ? 0 : predictions[0].size();
  for (std::size_t i = 0; i < pool; ++i) {
    double lo = predictions[0][i], hi = predictions[0][i], sum = 0.0;
    for (const std::vector<double>& model : predictions) {
      lo = std::min(lo, model[i]);
      hi = std::max(hi, model[i]);
      sum += model[i];
    }
    if (hi - lo > threshold) continue;
    const double mean = std::clamp(sum / predictions.size(), lo, hi);
    kept.push_back({i, hi - lo, mean});
  }
  // Insertion sort is stable by construction.
  for (std::size_t i = 1; i < kept.size(); ++i) {
    for (std::size_t j = i; j > 0 && kept[j].spread < kept[j - 1].spread; --j) {
      std::swap(kept[j], kept[j - 1]);
    }
  }
  if (kept.size() > max_added) kept.resize(max_added);
  return kept;
}

struct PruneMember {
  std::string name;
  std::vector<double> dev;
  double score;
};

struct PruneOutcome {
  std::vector<std::string> kept;
  double final_score;
  double full_score;
  std::vector<std::pair<std::string, bool>> attempts;
};

// Stepwise removal simulated literally: average everything, then walk the
// members from the worst individual score (ties by name) to the best, removing
// one whenever the averaged score improves by more than min_gain, stopping at
// the first failure and never removing the last member.
inline PruneOutcome Prune(const std::vector<PruneMember>& members,
                          const std::function<double(const std::vector<double>&)>& score,
                          double min_gain, double tolerance) {
  const auto average = [&](const std::vector<bool>& in) {
    std::vector<double> out(members[0].dev.size(), 0.0);
    double count = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (!in[m]) continue;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += members[m].dev[i];
      count += 1;
    }
    for (double& v : out) v /= count;
    return out;
  };
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const PruneMember& a = members[order[i]];
      const PruneMember& b = members[order[j]];
      if (b.score < a.score || (b.score == a.score && b.name < a.name)) {
        std::swap(order[i], order[j]);
      }
    }
  }
  std::vector<bool> in(members.size(), true);
  PruneOutcome out;
  out.full_score = score(average(in));
  double best = out.full_score;
  std::size_t remaining = members.size();
  for (std::size_t m : order) {
    if (remaining == 1) break;
    in[m] = false;
    const double s = score(average(in));
    if (s - best > min_gain + tolerance) {
      best = s;
      --remaining;
      out.attempts.push_back({members[m].name, true});
    } else {
      in[m] = true;
      out.attempts.push_back({members[m].name, false});
      break;
    }
  }
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (in[m]) out.kept.push_back(members[m].name);
  }
  out.final_score = best;
  return out;
}

}  // namespace tweetaffect::oracle

#endif  // TWEETAFFECT_TESTS_ORACLES_H_
