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

#include "tweetaffect/svr.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tweetaffect/error.h"
#include "tweetaffect/simd.h"

namespace tweetaffect::svr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Curvature floor for non-positive-definite pairs.
constexpr double kTau = 1e-12;

// The 2l-variable dual: index t < l is alpha_t (sign +1), t >= l is alpha*_t
// (sign -1). Q(t, s) = sign_t sign_s K(t mod l, s mod l).
class DualSolver {
 public:
  DualSolver(const Matrix& gram, std::span<const double> y,
             const SolverOptions& options)
      : gram_(gram), l_(y.size()), options_(options) {
    const std::size_t n = 2 * l_;
    alpha_.assign(n, 0.0);
    gradient_.resize(n);
    linear_.resize(n);
    sign_.resize(n);
    for (std::size_t i = 0; i < l_; ++i) {
      sign_[i] = 1.0;
      sign_[i + l_] = -1.0;
      linear_[i] = options.epsilon - y[i];
      linear_[i + l_] = options.epsilon + y[i];
    }
    gradient_ = linear_;
  }

  Solution Run() {
    Solution solution;
    const long budget =
        options_.max_passes * static_cast<long>(std::max<std::size_t>(l_, 1));
    long iterations = 0;
    double violation = 0.0;
    if (options_.trace_objective) {
      solution.objective_trace.push_back(Objective());
    }
    while (true) {
      std::size_t i = 0, j = 0;
      violation = SelectWorkingSet(&i, &j);
      if (violation < options_.tolerance) {
        solution.converged = true;
        break;
      }
      if (iterations >= budget) break;
      Update(i, j);
      ++iterations;
      if (options_.trace_objective) {
        solution.objective_trace.push_back(Objective());
      }
    }
    solution.iterations = iterations;
    solution.final_violation = violation;
    solution.objective = Objective();
    solution.bias = -Rho();
    solution.coefficients.resize(l_);
    for (std::size_t i = 0; i < l_; ++i) {
      solution.coefficients[i] = alpha_[i] - alpha_[i + l_];
    }
    return solution;
  }

 private:
  double K(std::size_t t, std::size_t s) const {
    return gram_(t < l_ ? t : t - l_, s < l_ ? s : s - l_);
  }
  double Q(std::size_t t, std::size_t s) const {
    return sign_[t] * sign_[s] * K(t, s);
  }
  bool AtUpper(std::size_t t) const { return alpha_[t] >= options_.cost; }
  bool AtLower(std::size_t t) const { return alpha_[t] <= 0.0; }

  double Objective() const {
    double value = 0.0;
    for (std::size_t t = 0; t < alpha_.size(); ++t) {
      value += alpha_[t] * (gradient_[t] + linear_[t]);
    }
    return value / 2.0;
  }

  // Returns the maximal violation; sets the pair to update.
  double SelectWorkingSet(std::size_t* out_i, std::size_t* out_j) const {
    const std::size_t n = alpha_.size();
    double gmax = -kInf;
    double gmax2 = -kInf;
    std::size_t gmax_idx = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (sign_[t] > 0) {
        if (!AtUpper(t) && -gradient_[t] >= gmax) {
          gmax = -gradient_[t];
          gmax_idx = t;
        }
      } else if (!AtLower(t) && gradient_[t] >= gmax) {
        gmax = gradient_[t];
        gmax_idx = t;
      }
    }
    const std::size_t i = gmax_idx;
    std::size_t gmin_idx = n;
    double best_decrease = kInf;
    for (std::size_t t = 0; t < n && i < n; ++t) {
      double grad_diff;
      if (sign_[t] > 0) {
        if (AtLower(t)) continue;
        gmax2 = std::max(gmax2, gradient_[t]);
        grad_diff = gmax + gradient_[t];
      } else {
        if (AtUpper(t)) continue;
        gmax2 = std::max(gmax2, -gradient_[t]);
        grad_diff = gmax - gradient_[t];
      }
      const double quad = K(i, i) + K(t, t) - 2.0 * K(i, t);
      if (grad_diff > 0.0) {
        const double decrease =
            -(grad_diff * grad_diff) / (quad > 0.0 ? quad : kTau);
        if (decrease <= best_decrease) {
          best_decrease = decrease;
          gmin_idx = t;
        }
      }
    }
    *out_i = i;
    *out_j = gmin_idx;
    // -inf when no admissible pair exists, which reads as converged.
    return gmax + gmax2;
  }

  void Update(std::size_t i, std::size_t j) {
    const double c = options_.cost;
    const double old_i = alpha_[i];
    const double old_j = alpha_[j];
    double& ai = alpha_[i];
    double& aj = alpha_[j];
    const double qij = Q(i, j);
    if (sign_[i] != sign_[j]) {
      double quad = K(i, i) + K(j, j) + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-gradient_[i] - gradient_[j]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) {
          aj = 0.0;
          ai = diff;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = -diff;
      }
      if (diff > 0.0) {
        if (ai > c) {
          ai = c;
          aj = c - diff;
        }
      } else if (aj > c) {
        aj = c;
        ai = c + diff;
      }
    } else {
      double quad = K(i, i) + K(j, j) - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (gradient_[i] - gradient_[j]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c) {
        if (ai > c) {
          ai = c;
          aj = sum - c;
        }
      } else if (aj < 0.0) {
        aj = 0.0;
        ai = sum;
      }
      if (sum > c) {
        if (aj > c) {
          aj = c;
          ai = sum - c;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = sum;
      }
    }
    const double delta_i = ai - old_i;
    const double delta_j = aj - old_j;
    for (std::size_t t = 0; t < alpha_.size(); ++t) {
      gradient_[t] += Q(i, t) * delta_i + Q(j, t) * delta_j;
    }
  }

  double Rho() const {
    double upper = kInf;
    double lower = -kInf;
    double free_sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t t = 0; t < alpha_.size(); ++t) {
      const double yg = sign_[t] * gradient_[t];
      if (AtUpper(t)) {
        if (sign_[t] < 0) {
          upper = std::min(upper, yg);
        } else {
          lower = std::max(lower, yg);
        }
      } else if (AtLower(t)) {
        if (sign_[t] > 0) {
          upper = std::min(upper, yg);
        } else {
          lower = std::max(lower, yg);
        }
      } else {
        ++free_count;
        free_sum += yg;
      }
    }
    if (free_count > 0) return free_sum / static_cast<double>(free_count);
    return (upper + lower) / 2.0;
  }

  const Matrix& gram_;
  std::size_t l_;
  SolverOptions options_;
  std::vector<double> alpha_;
  std::vector<double> gradient_;
  std::vector<double> linear_;
  std::vector<double> sign_;
};

void CheckOptions(const SolverOptions& options) {
  if (!(options.epsilon >= 0.0) || !(options.cost > 0.0) ||
      !(options.gamma > 0.0) || !(options.tolerance > 0.0)) {
    throw UsageError("SVR options need epsilon >= 0 and positive cost, "
                     "gamma, tolerance");
  }
}

}  // namespace

double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma) {
  return std::exp(-gamma * simd::SquaredDistance(a, b));
}

Matrix GramMatrix(const Matrix& x, double gamma) {
  const std::size_t n = x.rows();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double k = RbfKernel(x.Row(i), x.Row(j), gamma);
      gram(i, j) = k;
      gram(j, i) = k;
    }
  }
  return gram;
}

Solution SolveWithKernel(const Matrix& gram, std::span<const double> y,
                         const SolverOptions& options) {
  CheckOptions(options);
  if (gram.rows() != y.size() || gram.cols() != y.size()) {
    throw UsageError("Gram matrix does not match the label count");
  }
  if (y.empty()) throw UsageError("SVR needs at least one training point");
  return DualSolver(gram, y, options).Run();
}

Solution Solve(const Matrix& x, std::span<const double> y,
               const SolverOptions& options) {
  CheckOptions(options);
  return SolveWithKernel(GramMatrix(x, options.gamma), y, options);
}

Model::Model(const Matrix& x, const Solution& solution, double gamma)
    : bias_(solution.bias), gamma_(gamma) {
  for (std::size_t i = 0; i < solution.coefficients.size(); ++i) {
    if (solution.coefficients[i] == 0.0) continue;
    support_vectors_.AppendRow(x.Row(i));
    coefficients_.push_back(solution.coefficients[i]);
  }
}

Model::Model(Matrix support_vectors, std::vector<double> coefficients,
             double bias, double gamma)
    : support_vectors_(std::move(support_vectors)),
      coefficients_(std::move(coefficients)),
      bias_(bias),
      gamma_(gamma) {}

double Model::Predict(std::span<const double> x) const {
  double value = bias_;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    value += coefficients_[i] * RbfKernel(support_vectors_.Row(i), x, gamma_);
  }
  return value;
}

}  // namespace tweetaffect::svr
