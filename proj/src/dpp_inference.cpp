// Copyright 2026 The dppl Authors
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

#include "dppl/dpp_inference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dppl/errors.hpp"

namespace dppl {

ActiveSubset sample_elementary(const ElementaryDpp& elementary, Rng& rng) {
  const int n = elementary.ground_size();
  const int k = elementary.rank();
  // Columns of B = V^T: one k-dimensional vector per ground-set item.
  Eigen::MatrixXd b = elementary.vectors().transpose();
  std::vector<bool> eligible(n, true);
  std::vector<double> weights(n, 0.0);
  std::vector<int> chosen;
  chosen.reserve(k);

  constexpr double kNormFloor = 1e-12;
  for (int step = 0; step < k; ++step) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (!eligible[i]) {
        weights[i] = 0.0;
        continue;
      }
      const double norm2 = b.col(i).squaredNorm();
      if (norm2 < kNormFloor * kNormFloor) {
        eligible[i] = false;
        weights[i] = 0.0;
        continue;
      }
      weights[i] = norm2;
      any = true;
    }
    if (!any) {
      throw NumericalDegeneracyError(
          "sample_elementary: all residual norms collapsed");
    }

    const int picked = rng.pick_weighted(weights);
    chosen.push_back(picked);
    eligible[picked] = false;

    const Eigen::VectorXd unit = b.col(picked) / b.col(picked).norm();
    // Project the remaining columns onto the complement of the chosen one.
    // A second pass removes the residue the first pass leaves behind.
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < n; ++j) {
        if (eligible[j]) b.col(j) -= unit.dot(b.col(j)) * unit;
      }
    }
    b.col(picked).setZero();
  }
  return ActiveSubset(std::move(chosen));
}

ActiveSubset sample_elementary(const ElementaryDpp& elementary,
                               std::uint64_t seed) {
  Rng rng(seed);
  return sample_elementary(elementary, rng);
}

ActiveSubset sample_dpp(const DppKernel& kernel, Rng& rng) {
  const int n = kernel.size();
  std::vector<int> selected;
  for (int i = 0; i < n; ++i) {
    const double lambda = kernel.eigenvalues()(i);
    if (rng.bernoulli(lambda / (1.0 + lambda))) selected.push_back(i);
  }
  if (selected.empty()) return ActiveSubset{};

  Eigen::MatrixXd vectors(n, selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c) {
    vectors.col(c) = kernel.eigenvectors().col(selected[c]);
  }
  return sample_elementary(ElementaryDpp(std::move(vectors)), rng);
}

ActiveSubset sample_dpp(const DppKernel& kernel, std::uint64_t seed) {
  Rng rng(seed);
  return sample_dpp(kernel, rng);
}

ActiveSubset greedy_map(const DppKernel& kernel) {
  const Eigen::MatrixXd& l = kernel.l_matrix();
  const int n = kernel.size();

  // Grow a Cholesky factor of L_Y one row at a time; the determinant gain of
  // a candidate is its Schur complement against the current selection.
  Eigen::MatrixXd chol(n, n);
  std::vector<int> chosen;
  std::vector<bool> in_set(n, false);

  while (static_cast<int>(chosen.size()) < n) {
    const int depth = static_cast<int>(chosen.size());
    double best_gain = 1.0;  // require a strict determinant increase
    int best_index = -1;
    Eigen::VectorXd best_column(depth);

    for (int i = 0; i < n; ++i) {
      if (in_set[i]) continue;
      Eigen::VectorXd rhs(depth);
      for (int r = 0; r < depth; ++r) rhs(r) = l(chosen[r], i);
      chol.topLeftCorner(depth, depth)
          .triangularView<Eigen::Lower>()
          .solveInPlace(rhs);
      const double gain = l(i, i) - rhs.squaredNorm();
      if (gain > best_gain) {
        best_gain = gain;
        best_index = i;
        best_column = rhs;
      }
    }
    if (best_index < 0) break;

    chol.block(depth, 0, 1, depth) = best_column.transpose();
    chol(depth, depth) = std::sqrt(best_gain);
    chosen.push_back(best_index);
    in_set[best_index] = true;
  }

  return ActiveSubset(std::move(chosen));
}

}  // namespace dppl
