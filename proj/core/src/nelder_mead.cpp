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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qconc {
namespace {

struct Simplex {
  std::vector<std::vector<double>> points;
  std::vector<double> values;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  const int n = static_cast<int>(x0.size());
  NelderMeadResult result;
  if (n == 0) {
    result.value = f(x0);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  // Gao & Han coefficients; reduce to the classic ones at n = 2.
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / n;
  const double contract = 0.75 - 0.5 / n;
  const double shrink = 1.0 - 1.0 / n;

  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  Simplex s;
  auto build = [&](const std::vector<double>& center, double center_value) {
    s.points.assign(1, center);
    s.values.assign(1, center_value);
    for (int i = 0; i < n; ++i) {
      std::vector<double> p = center;
      p[i] += options.initial_step;
      s.values.push_back(eval(p));
      s.points.push_back(std::move(p));
    }
  };
  build(x0, eval(x0));

  std::vector<int> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  double best_at_rebuild = *std::min_element(s.values.begin(), s.values.end());

  while (result.iterations < options.max_iters) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.values[a] < s.values[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second_worst = order[n - 1];

    if (s.values[worst] - s.values[best] <= options.tol) {
      if (options.restart_on_convergence &&
          best_at_rebuild - s.values[best] > options.tol) {
        best_at_rebuild = s.values[best];
        const std::vector<double> center = s.points[best];
        build(center, s.values[best]);
        continue;
      }
      result.converged = true;
      break;
    }
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (int k = 0; k < n; ++k) {
      const auto& p = s.points[order[k]];
      for (int i = 0; i < n; ++i) centroid[i] += p[i] / n;
    }
    const auto& xw = s.points[worst];
    for (int i = 0; i < n; ++i) trial[i] = centroid[i] + reflect * (centroid[i] - xw[i]);
    const double fr = eval(trial);

    if (fr < s.values[best]) {
      for (int i = 0; i < n; ++i) trial2[i] = centroid[i] + expand * (trial[i] - centroid[i]);
      const double fe = eval(trial2);
      if (fe < fr) {
        s.points[worst] = trial2;
        s.values[worst] = fe;
      } else {
        s.points[worst] = trial;
        s.values[worst] = fr;
      }
    } else if (fr < s.values[second_worst]) {
      s.points[worst] = trial;
      s.values[worst] = fr;
    } else {
      const bool outside = fr < s.values[worst];
      const auto& anchor = outside ? trial : xw;
      for (int i = 0; i < n; ++i) trial2[i] = centroid[i] + contract * (anchor[i] - centroid[i]);
      const double fc = eval(trial2);
      if (fc < std::min(fr, s.values[worst])) {
        s.points[worst] = trial2;
        s.values[worst] = fc;
      } else {
        const auto xb = s.points[best];
        for (int k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (int i = 0; i < n; ++i) s.points[k][i] = xb[i] + shrink * (s.points[k][i] - xb[i]);
          s.values[k] = eval(s.points[k]);
        }
      }
    }
    if (options.record_history) {
      result.history.push_back(*std::min_element(s.values.begin(), s.values.end()));
    }
  }

  const auto it = std::min_element(s.values.begin(), s.values.end());
  result.value = *it;
  result.x = s.points[static_cast<std::size_t>(it - s.values.begin())];
  return result;
}

}  // namespace qconc
