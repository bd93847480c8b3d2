// Copyright 2026 The qconc Authors
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

#include "qconc/nelder_mead.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace qconc {
namespace {

TEST(NelderMead, MinimizesQuadratic) {
  const auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 3.0;
  };
  NelderMeadOptions opt;
  opt.tol = 1e-14;
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, opt);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -2.0, 1e-5);
  EXPECT_NEAR(r.value, 3.0, 1e-12);
  EXPECT_TRUE(r.converged);
}

TEST(NelderMead, Rosenbrock) {
  const auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opt;
  opt.tol = 1e-16;
  opt.max_iters = 5000;
  const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, opt);
  EXPECT_LT(r.value, 1e-10);
}

TEST(NelderMead, BestValueIsMonotone) {
  const auto f = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - double(i)) + std::sin(x[i]);
    return s;
  };
  NelderMeadOptions opt;
  opt.record_history = true;
  opt.max_iters = 500;
  const NelderMeadResult r = nelder_mead(f, std::vector<double>(8, 0.3), opt);
  ASSERT_FALSE(r.history.empty());
  for (std::size_t k = 1; k < r.history.size(); ++k) EXPECT_LE(r.history[k], r.history[k - 1]);
  EXPECT_EQ(r.history.back(), r.value);
  EXPECT_LE(r.iterations, 500);
}

TEST(NelderMead, InfiniteRegionsAreAvoided) {
  const auto f = [](std::span<const double> x) {
    if (x[0] < 0.5) return std::numeric_limits<double>::infinity();
    return (x[0] - 1.0) * (x[0] - 1.0);
  };
  const NelderMeadResult r = nelder_mead(f, {2.0}, {});
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
}

}  // namespace
}  // namespace qconc
