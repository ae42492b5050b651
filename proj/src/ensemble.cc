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

#include "tweetaffect/ensemble.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "tweetaffect/error.h"
#include "tweetaffect/eval.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

const PredictionSet& Pick(const EnsembleMember& member, Split split) {
  return split == Split::kDev ? member.dev : member.test;
}

PredictionSet AverageSubset(std::span<const EnsembleMember> members,
                            std::span<const std::size_t> subset, Split split) {
  std::vector<EnsembleMember> chosen;
  for (std::size_t k : subset) chosen.push_back(members[k]);
  return AverageMembers(chosen, split);
}

}  // namespace

PredictionSet AverageMembers(std::span<const EnsembleMember> members,
                             Split split) {
  if (members.empty()) throw UsageError("cannot average zero members");
  const PredictionSet& first = Pick(members[0], split);
  PredictionSet out{first.ids, std::vector<double>(first.size(), 0.0)};
  for (const EnsembleMember& member : members) {
    const PredictionSet& p = Pick(member, split);
    if (p.ids != first.ids || p.values.size() != first.ids.size()) {
      throw UsageError("member '" + member.name + "' is not aligned with '" +
                       members[0].name + "' on the " +
                       (split == Split::kDev ? "dev" : "test") + " split");
    }
    for (std::size_t i = 0; i < p.size(); ++i) out.values[i] += p.values[i];
  }
  for (double& v : out.values) v /= static_cast<double>(members.size());
  return out;
}

EnsembleResult StepwisePrune(std::span<const EnsembleMember> members,
                             const EnsembleScorer& scorer,
                             const PruneOptions& options) {
  if (members.size() < 2) throw UsageError("pruning needs at least two members");
  for (const EnsembleMember& m : members) {
    if (!std::isfinite(m.individual_dev_score)) {
      throw UsageError("member '" + m.name + "' has a non-finite score");
    }
  }
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].individual_dev_score != members[b].individual_dev_score) {
      return members[a].individual_dev_score < members[b].individual_dev_score;
    }
    return members[a].name < members[b].name;
  });

  std::vector<std::size_t> kept(members.size());
  std::iota(kept.begin(), kept.end(), 0);
  EnsembleResult result;
  result.full_average_score =
      scorer(AverageSubset(members, kept, Split::kDev).values);
  double best = result.full_average_score;

  for (std::size_t candidate : order) {
    if (kept.size() == 1) break;
    std::vector<std::size_t> trial;
    for (std::size_t k : kept) {
      if (k != candidate) trial.push_back(k);
    }
    const double score = scorer(AverageSubset(members, trial, Split::kDev).values);
    const bool accepted = score - best > options.min_gain + kGainTolerance;
    result.removal_log.push_back(
        RemovalAttempt{members[candidate].name, score, accepted});
    if (accepted) {
      kept = std::move(trial);
      best = score;
    } else if (!options.skip_and_continue) {
      break;
    }
  }
  assert(!kept.empty());

  for (std::size_t k : kept) result.kept_members.push_back(members[k].name);
  result.dev_score = best;
  result.averaged_dev = AverageSubset(members, kept, Split::kDev);
  const bool has_test = std::all_of(members.begin(), members.end(),
                                    [](const EnsembleMember& m) {
                                      return !m.test.values.empty();
                                    });
  if (has_test) result.averaged_test = AverageSubset(members, kept, Split::kTest);
  return result;
}

EnsembleResult StepwisePrune(std::span<const EnsembleMember> members,
                             std::span<const double> dev_gold,
                             const PruneOptions& options) {
  return StepwisePrune(
      members,
      [&](std::span<const double> averaged) { return Pearson(averaged, dev_gold); },
      options);
}

std::vector<ManifestEntry> LoadManifest(const std::filesystem::path& path) {
  const std::filesystem::path base = path.parent_path();
  const auto resolve = [&](std::string_view text) -> std::filesystem::path {
    if (text == "-" || text.empty()) return {};
    std::filesystem::path p{std::string(text)};
    return p.is_absolute() ? p : base / p;
  };
  std::vector<ManifestEntry> entries;
  const std::vector<std::string> lines = text_io::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view trimmed = text_io::Trim(lines[i]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text_io::Split(lines[i], '\t');
    if (fields.size() != 4) {
      throw ParseError(path.string(), i + 1,
                       "expected name<TAB>dev<TAB>test<TAB>score");
    }
    const auto score = text_io::ParseDouble(text_io::Trim(fields[3]));
    if (!score) throw ParseError(path.string(), i + 1, "bad score");
    entries.push_back(ManifestEntry{std::string(text_io::Trim(fields[0])),
                                    resolve(text_io::Trim(fields[1])),
                                    resolve(text_io::Trim(fields[2])), *score});
    if (entries.back().dev_predictions.empty()) {
      throw ParseError(path.string(), i + 1, "dev predictions are required");
    }
    for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
      if (entries[j].name == entries.back().name) {
        throw ParseError(path.string(), i + 1,
                         "duplicate member name '" + entries[j].name + "'");
      }
    }
  }
  return entries;
}

void SaveManifest(std::span<const ManifestEntry> entries,
                  const std::filesystem::path& path) {
  std::string out;
  for (const ManifestEntry& e : entries) {
    out += e.name + "\t" + e.dev_predictions.generic_string() + "\t" +
           (e.test_predictions.empty() ? std::string("-")
                                       : e.test_predictions.generic_string()) +
           "\t" + text_io::FormatDouble(e.individual_dev_score) + "\n";
  }
  text_io::WriteFile(path, out);
}

std::vector<EnsembleMember> LoadMembers(std::span<const ManifestEntry> entries) {
  std::vector<EnsembleMember> members;
  for (const ManifestEntry& e : entries) {
    EnsembleMember m;
    m.name = e.name;
    m.dev = LoadPredictions(e.dev_predictions);
    if (!e.test_predictions.empty()) m.test = LoadPredictions(e.test_predictions);
    m.individual_dev_score = e.individual_dev_score;
    members.push_back(std::move(m));
  }
  return members;
}

}  // namespace tweetaffect
