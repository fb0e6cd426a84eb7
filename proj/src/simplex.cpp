// Copyright 2026 The cddgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cddgate/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cddgate/error.hpp"

namespace cddgate {

namespace {

struct Coefficients {
  double reflect, expand, contract, shrink;
};

Coefficients coefficients(int n, bool adaptive) {
  if (!adaptive) return {1.0, 2.0, 0.5, 0.5};
  return {1.0, 1.0 + 2.0 / n, 0.75 - 0.5 / n, 1.0 - 1.0 / n};
}

}  // namespace

SimplexResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                          const SimplexSettings& s) {
  const int n = int(x0.size());
  if (n < 1) fail(ErrorCode::kInvalidInput, "nelder_mead: empty start point");
  const Coefficients c = coefficients(n, s.adaptive);

  SimplexResult res;
  std::vector<Eigen::VectorXd> pts(n + 1);
  std::vector<double> vals(n + 1);
  std::vector<int> order(n + 1);

  auto eval = [&](const Eigen::VectorXd& x) {
    ++res.evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  auto budget_left = [&] { return res.evals < s.max_evals; };

  auto build = [&](const Eigen::VectorXd& base, double base_val) {
    pts[0] = base;
    vals[0] = base_val;
    for (int i = 0; i < n; ++i) {
      pts[i + 1] = base;
      pts[i + 1][i] += s.initial_step;
      vals[i + 1] = eval(pts[i + 1]);
    }
  };

  build(x0, eval(x0));
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second_worst = order[n - 1];

    if (vals[best] <= s.f_target) {
      res.reached_target = true;
      res.stop_reason = "target reached";
      break;
    }
    double spread = 0.0;
    for (int i = 0; i <= n; ++i) {
      spread = std::max(spread, (pts[i] - pts[best]).cwiseAbs().maxCoeff());
    }
    if (spread <= s.x_tol) {
      if (res.restarts < s.max_restarts && std::isfinite(s.f_target) && budget_left()) {
        ++res.restarts;
        const Eigen::VectorXd base = pts[best];
        build(base, vals[best]);
        continue;
      }
      res.stop_reason = "simplex collapsed";
      break;
    }
    if (!budget_left()) {
      res.stop_reason = "evaluation budget exhausted";
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= double(n);

    const Eigen::VectorXd xr = centroid + c.reflect * (centroid - pts[worst]);
    const double fr = eval(xr);
    bool do_shrink = false;
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + c.expand * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else if (fr < vals[worst]) {
      const Eigen::VectorXd xc = centroid + c.contract * (xr - centroid);
      const double fc = eval(xc);
      if (fc <= fr) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        do_shrink = true;
      }
    } else {
      const Eigen::VectorXd xc = centroid - c.contract * (centroid - pts[worst]);
      const double fc = eval(xc);
      if (fc < vals[worst]) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        do_shrink = true;
      }
    }
    if (do_shrink) {
      for (int i = 0; i <= n; ++i) {
        if (i == best) continue;
        pts[i] = pts[best] + c.shrink * (pts[i] - pts[best]);
        vals[i] = eval(pts[i]);
      }
    }
    ++res.iterations;
    res.trace.push_back(*std::min_element(vals.begin(), vals.end()));
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  res.x = pts[it - vals.begin()];
  res.f = *it;
  return res;
}

}  // namespace cddgate
