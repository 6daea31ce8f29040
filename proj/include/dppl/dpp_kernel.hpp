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

#ifndef DPPL_DPP_KERNEL_HPP
#define DPPL_DPP_KERNEL_HPP

#include <vector>

#include <Eigen/Dense>

#include "dppl/link_network.hpp"

namespace dppl {

// L-ensemble kernel: a symmetric positive-semidefinite matrix together with
// its cached eigendecomposition. Construction symmetrizes, decomposes, and
// floors slightly negative eigenvalues (numerical noise) to zero; eigenvalues
// below -1e-8 * lambda_max are treated as a modeling bug and rejected.
// Immutable afterwards.
class DppKernel {
 public:
  explicit DppKernel(Eigen::MatrixXd l_matrix);

  int size() const { return static_cast<int>(eigenvalues_.size()); }
  const Eigen::MatrixXd& l_matrix() const { return l_; }
  // Ascending, all >= 0 after flooring.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  // Orthonormal columns, matching eigenvalues() order.
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  // log det(L + I) = sum_n log(1 + lambda_n).
  double log_normalizer() const { return log_normalizer_; }
  // Number of eigenvalues clamped to zero at construction.
  int floored_count() const { return floored_count_; }

 private:
  Eigen::MatrixXd l_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  double log_normalizer_ = 0.0;
  int floored_count_ = 0;
};

// Marginal kernel K = sum_n lambda_n/(1+lambda_n) v_n v_n^T, the
// eigen-rescaled form of (L+I)^-1 L.
Eigen::MatrixXd marginal_kernel(const DppKernel& kernel);

// P_L(Y) = det(L_Y) / det(L+I), with det(L_empty) = 1.
double subset_probability(const DppKernel& kernel, const ActiveSubset& subset);

// P(A subset of Y) = det(K_A) for a marginal kernel K, with det(K_empty) = 1.
double marginal_probability(const Eigen::MatrixXd& k_matrix,
                            const ActiveSubset& subset);

// Exact probabilities of all 2^N subsets, indexed by bitmask (bit i set
// means item i is in the subset). Guarded to N <= 12.
std::vector<double> enumerate_distribution(const DppKernel& kernel);

// An elementary DPP: the span of k orthonormal N-vectors (matrix columns).
// Samples from it have cardinality exactly k.
class ElementaryDpp {
 public:
  explicit ElementaryDpp(Eigen::MatrixXd vectors);

  const Eigen::MatrixXd& vectors() const { return vectors_; }
  int ground_size() const { return static_cast<int>(vectors_.rows()); }
  int rank() const { return static_cast<int>(vectors_.cols()); }
  // Marginal kernel V V^T; eigenvalues in {0, 1}.
  Eigen::MatrixXd marginal_kernel() const { return vectors_ * vectors_.transpose(); }

 private:
  Eigen::MatrixXd vectors_;
};

}  // namespace dppl

#endif  // DPPL_DPP_KERNEL_HPP
