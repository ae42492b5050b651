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

#ifndef TWEETAFFECT_SVR_H_
#define TWEETAFFECT_SVR_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tweetaffect/matrix.h"

namespace tweetaffect::svr {

struct SolverOptions {
  double epsilon = 0.1;
  double cost = 1.0;
  double gamma = 1.0;
  // Stop once the maximal KKT violation drops below this.
  double tolerance = 1e-4;
  // Budget in passes; one pass is one two-variable update per training point.
  long max_passes = 10000;
  // Record the dual objective after every update.
  bool trace_objective = false;
};

struct Solution {
  // Dual coefficients (alpha_i - alpha*_i), one per training point.
  std::vector<double> coefficients;
  double bias = 0.0;
  double objective = 0.0;
  long iterations = 0;
  double final_violation = 0.0;
  bool converged = false;
  std::vector<double> objective_trace;
};

// exp(-gamma * |a - b|^2)
double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma);

// Full Gram matrix using the active SIMD backend.
Matrix GramMatrix(const Matrix& x, double gamma);

// Minimizes the epsilon-insensitive dual
//   1/2 (a - a*)' K (a - a*) + eps * sum(a + a*) - y' (a - a*)
//   s.t. sum(a - a*) = 0, 0 <= a, a* <= C
// by sequential two-variable updates with second-order working-set selection.
Solution Solve(const Matrix& x, std::span<const double> y,
               const SolverOptions& options);

// Same problem on a precomputed Gram matrix.
Solution SolveWithKernel(const Matrix& gram, std::span<const double> y,
                         const SolverOptions& options);

// f(x) = sum_i c_i K(sv_i, x) + b, over the points with nonzero coefficients.
class Model {
 public:
  Model() = default;
  Model(const Matrix& x, const Solution& solution, double gamma);
  Model(Matrix support_vectors, std::vector<double> coefficients, double bias,
        double gamma);

  double Predict(std::span<const double> x) const;

  const Matrix& support_vectors() const { return support_vectors_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double bias() const { return bias_; }
  double gamma() const { return gamma_; }

 private:
  Matrix support_vectors_;
  std::vector<double> coefficients_;
  double bias_ = 0.0;
  double gamma_ = 1.0;
};

}  // namespace tweetaffect::svr

#endif  // TWEETAFFECT_SVR_H_
