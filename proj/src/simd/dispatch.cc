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

#include <atomic>
#include <cstdlib>
#include <string>

#include "tweetaffect/error.h"
#include "tweetaffect/simd.h"

namespace tweetaffect::simd {
namespace detail {

#if !TWEETAFFECT_HAVE_AVX2
const KernelTable* Avx2Kernels() { return nullptr; }
#endif
#if !TWEETAFFECT_HAVE_NEON
const KernelTable* NeonKernels() { return nullptr; }
#endif

}  // namespace detail

namespace {

bool CpuHasAvx2() {
#if TWEETAFFECT_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* Lookup(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &detail::kScalarKernels;
    case Backend::kAvx2:
      return CpuHasAvx2() ? detail::Avx2Kernels() : nullptr;
    case Backend::kNeon:
      return detail::NeonKernels();
  }
  return nullptr;
}

const KernelTable* DefaultTable() {
  const char* forced = std::getenv("TWEETAFFECT_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") {
    return &detail::kScalarKernels;
  }
  for (Backend backend : {Backend::kAvx2, Backend::kNeon}) {
    if (const KernelTable* table = Lookup(backend)) return table;
  }
  return &detail::kScalarKernels;
}

std::atomic<const KernelTable*>& ActiveSlot() {
  static std::atomic<const KernelTable*> slot{DefaultTable()};
  return slot;
}

}  // namespace

std::string_view BackendName(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsSupported(Backend backend) { return Lookup(backend) != nullptr; }

std::vector<Backend> SupportedBackends() {
  std::vector<Backend> out;
  for (Backend backend : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
    if (IsSupported(backend)) out.push_back(backend);
  }
  return out;
}

const KernelTable& KernelsFor(Backend backend) {
  const KernelTable* table = Lookup(backend);
  if (table == nullptr) {
    throw UsageError("SIMD backend " + std::string(BackendName(backend)) +
                     " is not available");
  }
  return *table;
}

const KernelTable& Active() {
  return *ActiveSlot().load(std::memory_order_relaxed);
}

Backend ActiveBackend() { return Active().backend; }

void SetActiveBackend(Backend backend) {
  ActiveSlot().store(&KernelsFor(backend), std::memory_order_relaxed);
}

}  // namespace tweetaffect::simd
