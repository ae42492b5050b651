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

#ifndef TWEETAFFECT_SIMD_H_
#define TWEETAFFECT_SIMD_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Dense double-precision kernels behind the RBF Gram matrix and the dense
// layers of the feed-forward network. Every backend computes the same
// quantities; vector backends reassociate sums, so results agree with the
// scalar reference to rounding, not bit for bit. The active backend is chosen
// once from CPU features and can be overridden with TWEETAFFECT_SIMD=scalar.
namespace tweetaffect::simd {

enum class Backend { kScalar, kAvx2, kNeon };

struct KernelTable {
  Backend backend;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

std::string_view BackendName(Backend backend);
bool IsSupported(Backend backend);
std::vector<Backend> SupportedBackends();

// Throws if the backend is not available on this CPU or build.
const KernelTable& KernelsFor(Backend backend);
const KernelTable& Active();
Backend ActiveBackend();
void SetActiveBackend(Backend backend);

inline double Dot(std::span<const double> a, std::span<const double> b) {
  return Active().dot(a.data(), b.data(), a.size());
}

inline double SquaredDistance(std::span<const double> a,
                              std::span<const double> b) {
  return Active().squared_distance(a.data(), b.data(), a.size());
}

inline void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  Active().axpy(alpha, x.data(), y.data(), x.size());
}

namespace detail {
extern const KernelTable kScalarKernels;
// Defined only when the corresponding source is compiled in.
const KernelTable* Avx2Kernels();
const KernelTable* NeonKernels();
}  // namespace detail

}  // namespace tweetaffect::simd

#endif  // TWEETAFFECT_SIMD_H_
