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

#include "tweetaffect/simd.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "tweetaffect/error.h"
#include "tweetaffect/matrix.h"
#include "tweetaffect/random.h"
#include "tweetaffect/svr.h"

namespace tweetaffect {
namespace {

using simd::Backend;

std::vector<double> RandomVector(Rng& rng, std::size_t n, double scale = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = scale * rng.Normal();
  return v;
}

// Reference values in long double, independent of every backend.
long double RefDot(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long double>(a[i]) * b[i];
  return s;
}

long double AbsSum(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(static_cast<long double>(a[i]) * b[i]);
  return s;
}

class BackendTest : public ::testing::TestWithParam<Backend> {
 protected:
  void SetUp() override {
    if (!simd::IsSupported(GetParam())) {
      GTEST_SKIP() << simd::BackendName(GetParam()) << " not available on this CPU";
    }
  }
};

TEST_P(BackendTest, DotMatchesReference) {
  const simd::KernelTable& k = simd::KernelsFor(GetParam());
  Rng rng(31);
  for (std::size_t n = 0; n <= 67; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = RandomVector(rng, n), b = RandomVector(rng, n);
      const double got = k.dot(a.data(), b.data(), n);
      const long double bound = 4 * n * 0x1.0p-52 * AbsSum(a, b) + 1e-300;
      EXPECT_LE(std::abs(got - RefDot(a, b)), bound) << "n=" << n;
    }
  }
}

TEST_P(BackendTest, SquaredDistanceMatchesReference) {
  const simd::KernelTable& k = simd::KernelsFor(GetParam());
  Rng rng(32);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto a = RandomVector(rng, n), b = RandomVector(rng, n);
    long double ref = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long double d = static_cast<long double>(a[i]) - b[i];
      ref += d * d;
    }
    const double got = k.squared_distance(a.data(), b.data(), n);
    EXPECT_NEAR(got, static_cast<double>(ref), 4 * (n + 1) * 0x1.0p-52 * (ref + 1e-300));
    EXPECT_GE(got, 0.0);
    EXPECT_EQ(k.squared_distance(a.data(), a.data(), n), 0.0);
  }
}

TEST_P(BackendTest, AxpyMatchesScalarExactlyOrWithinOneFma) {
  const simd::KernelTable& k = simd::KernelsFor(GetParam());
  const simd::KernelTable& scalar = simd::KernelsFor(Backend::kScalar);
  Rng rng(33);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto x = RandomVector(rng, n);
    auto y1 = RandomVector(rng, n);
    auto y2 = y1;
    const double alpha = rng.Normal();
    k.axpy(alpha, x.data(), y1.data(), n);
    scalar.axpy(alpha, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(y1[i], y2[i], 2 * 0x1.0p-52 * (std::abs(alpha * x[i]) + std::abs(y2[i])));
    }
  }
}

TEST_P(BackendTest, AgreesWithScalarBackend) {
  const simd::KernelTable& k = simd::KernelsFor(GetParam());
  const simd::KernelTable& scalar = simd::KernelsFor(Backend::kScalar);
  Rng rng(34);
  for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 16u, 31u, 100u, 1000u}) {
    const auto a = RandomVector(rng, n, 10.0), b = RandomVector(rng, n, 10.0);
    const double tol = 8 * n * 0x1.0p-52 * static_cast<double>(AbsSum(a, b));
    EXPECT_NEAR(k.dot(a.data(), b.data(), n), scalar.dot(a.data(), b.data(), n), tol);
  }
}

TEST_P(BackendTest, GramMatrixAgreesAcrossBackends) {
  Rng rng(35);
  Matrix x(40, 13);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = rng.Normal();
  }
  const Backend previous = simd::ActiveBackend();
  simd::SetActiveBackend(Backend::kScalar);
  const Matrix reference = svr::GramMatrix(x, 0.1);
  simd::SetActiveBackend(GetParam());
  const Matrix gram = svr::GramMatrix(x, 0.1);
  simd::SetActiveBackend(previous);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    EXPECT_EQ(gram(i, i), 1.0);
    for (std::size_t j = 0; j < x.rows(); ++j) {
      EXPECT_NEAR(gram(i, j), reference(i, j), 1e-13);
      EXPECT_EQ(gram(i, j), gram(j, i));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllBackends, BackendTest,
                         ::testing::Values(Backend::kScalar, Backend::kAvx2,
                                           Backend::kNeon),
                         [](const auto& info) {
                           return std::string(simd::BackendName(info.param));
                         });

TEST(DispatchTest, ScalarAlwaysSupportedAndActiveIsSupported) {
  EXPECT_TRUE(simd::IsSupported(Backend::kScalar));
  const auto supported = simd::SupportedBackends();
  EXPECT_NE(std::find(supported.begin(), supported.end(), simd::ActiveBackend()),
            supported.end());
}

TEST(DispatchTest, SelectingUnsupportedBackendFails) {
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (!simd::IsSupported(b)) EXPECT_THROW(simd::SetActiveBackend(b), Error);
  }
}

}  // namespace
}  // namespace tweetaffect
