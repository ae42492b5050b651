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

#ifndef TWEETAFFECT_ENSEMBLE_H_
#define TWEETAFFECT_ENSEMBLE_H_

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/models.h"

namespace tweetaffect {

struct EnsembleMember {
  std::string name;
  PredictionSet dev;
  PredictionSet test;  // may be empty when there is no test split
  double individual_dev_score = 0.0;
};

enum class Split { kDev, kTest };

// Element-wise mean over members, accumulated in member order. Every member
// must carry the same ids in the same order; the error names the first member
// that does not.
PredictionSet AverageMembers(std::span<const EnsembleMember> members,
                             Split split);

// Scores averaged dev predictions; higher is better.
using EnsembleScorer = std::function<double(std::span<const double> averaged)>;

// Gains within this distance of min_gain count as equal to it (and are
// therefore rejected), so that 0.718 - 0.716 is treated as exactly 0.002.
inline constexpr double kGainTolerance = 1e-12;

struct PruneOptions {
  double min_gain = 0.002;
  // Keep trying the next member after a rejected removal instead of stopping.
  bool skip_and_continue = false;
};

struct RemovalAttempt {
  std::string name;
  double attempted_score = 0.0;
  bool accepted = false;
};

struct EnsembleResult {
  // Input order.
  std::vector<std::string> kept_members;
  double full_average_score = 0.0;
  double dev_score = 0.0;
  PredictionSet averaged_dev;
  PredictionSet averaged_test;
  std::vector<RemovalAttempt> removal_log;
};

// Tries members from the lowest individual dev score upwards (ties by name).
// A removal is kept when the averaged score beats the best score so far by
// more than min_gain; the first rejected attempt ends the search unless
// skip_and_continue is set. The last remaining member is never removed.
EnsembleResult StepwisePrune(std::span<const EnsembleMember> members,
                             const EnsembleScorer& scorer,
                             const PruneOptions& options = {});

// Scorer = Pearson against the dev gold labels.
EnsembleResult StepwisePrune(std::span<const EnsembleMember> members,
                             std::span<const double> dev_gold,
                             const PruneOptions& options = {});

struct ManifestEntry {
  std::string name;
  std::filesystem::path dev_predictions;
  std::filesystem::path test_predictions;  // empty when absent ("-" on disk)
  double individual_dev_score = 0.0;
};

// `name<TAB>dev_path<TAB>test_path<TAB>score`. Relative paths resolve against
// the manifest's directory.
std::vector<ManifestEntry> LoadManifest(const std::filesystem::path& path);
void SaveManifest(std::span<const ManifestEntry> entries,
                  const std::filesystem::path& path);
std::vector<EnsembleMember> LoadMembers(std::span<const ManifestEntry> entries);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_ENSEMBLE_H_
