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

#ifndef TWEETAFFECT_EVAL_H_
#define TWEETAFFECT_EVAL_H_

#include <span>
#include <vector>

namespace tweetaffect {

// Sample Pearson correlation. Throws ComputationError("zero variance") when
// either side is constant, UsageError on a length mismatch or fewer than two
// values.
double Pearson(std::span<const double> a, std::span<const double> b);

// Pearson of fractional ranks (ties share their average rank).
double Spearman(std::span<const double> a, std::span<const double> b);

// 1-based ranks; tied values receive the mean of the ranks they span.
std::vector<double> FractionalRanks(std::span<const double> values);

// Nearest point of the grid k/(n-1) after clipping to [0,1]; an exact
// midpoint goes to the higher class.
int ToOrdinal(double prediction, int num_classes);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_EVAL_H_
