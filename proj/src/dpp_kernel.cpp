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

#include "dppl/dpp_kernel.hpp"

#include <cmath>

#include "dppl/errors.hpp"

namespace dppl {

namespace {

Eigen::MatrixXd principal_submatrix(const Eigen::MatrixXd& m,
                                    const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd sub(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
  }
  return sub;
}

// log det of a symmetric positive-definite principal submatrix via LDLT.
// Returns -inf when a pivot is non-positive (the determinant is <= 0 up to
// numerical noise, i.e. the subset has zero probability).
double log_det_psd(const Eigen::MatrixXd& sub) {
  if (sub.rows() == 0) return 0.0;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
  double log_det = 0.0;
  for (double pivot : ldlt.vectorD()) {
    if (!(pivot > 0.0)) return -std::numeric_limits<double>::infinity();
    log_det += std::log(pivot);
  }
  return log_det;
}

}  // namespace

DppKernel::DppKernel(Eigen::MatrixXd l_matrix) {
  const auto n = l_matrix.rows();
  if (n == 0 || l_matrix.cols() != n) {
    throw InvalidParameterError("DppKernel: matrix must be square, nonempty");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double diff = std::abs(l_matrix(i, j) - l_matrix(j, i));
      if (diff > 1e-9 * std::max(1.0, std::abs(l_matrix(i, j)))) {
        throw InvalidParameterError("DppKernel: matrix is not symmetric");
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (l_matrix + l_matrix.transpose()));
  if (solver.info() != Eigen::Success) {
    throw PsdViolationError("DppKernel: eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();

  const double lambda_max = std::max(eigenvalues_(n - 1), 0.0);
  const double floor_tol = 1e-8 * lambda_max;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eigenvalues_(i) < 0.0) {
      if (eigenvalues_(i) < -floor_tol) {
        throw PsdViolationError(
            "DppKernel: eigenvalue below the numerical-noise floor");
      }
      eigenvalues_(i) = 0.0;
      ++floored_count_;
    }
  }

  // Store the floored matrix so that l_matrix() and the cached eigenpairs
  // describe the same operator.
  l_ = eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.transpose();
  l_ = 0.5 * (l_ + l_.transpose()).eval();

  log_normalizer_ = 0.0;
  for (double lambda : eigenvalues_) log_normalizer_ += std::log1p(lambda);
}

Eigen::MatrixXd marginal_kernel(const DppKernel& kernel) {
  Eigen::VectorXd rescaled = kernel.eigenvalues();
  for (Eigen::Index i = 0; i < rescaled.size(); ++i) {
    rescaled(i) = rescaled(i) / (1.0 + rescaled(i));
  }
  Eigen::MatrixXd k = kernel.eigenvectors() * rescaled.asDiagonal() *
                      kernel.eigenvectors().transpose();
  return 0.5 * (k + k.transpose());
}

double subset_probability(const DppKernel& kernel,
                          const ActiveSubset& subset) {
  subset.validate_for(kernel.size());
  const double log_det =
      log_det_psd(principal_submatrix(kernel.l_matrix(), subset.indices()));
  return std::exp(log_det - kernel.log_normalizer());
}

double marginal_probability(const Eigen::MatrixXd& k_matrix,
                            const ActiveSubset& subset) {
  subset.validate_for(static_cast<int>(k_matrix.rows()));
  if (subset.empty()) return 1.0;
  const double det =
      principal_submatrix(k_matrix, subset.indices()).determinant();
  return std::max(det, 0.0);
}

std::vector<double> enumerate_distribution(const DppKernel& kernel) {
  const int n = kernel.size();
  if (n > 12) {
    throw InstanceTooLargeError("enumerate_distribution: N must be <= 12");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> probabilities(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    probabilities[mask] =
        subset_probability(kernel, ActiveSubset::from_mask(mask, n));
  }
  return probabilities;
}

ElementaryDpp::ElementaryDpp(Eigen::MatrixXd vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.cols() < 1 || vectors_.rows() < vectors_.cols()) {
    throw InvalidParameterError(
        "ElementaryDpp: need 1 <= k <= N orthonormal vectors");
  }
  const Eigen::MatrixXd gram = vectors_.transpose() * vectors_;
  const Eigen::MatrixXd identity =
      Eigen::MatrixXd::Identity(vectors_.cols(), vectors_.cols());
  if (((gram - identity).cwiseAbs().maxCoeff()) > 1e-9) {
    throw InvalidParameterError("ElementaryDpp: vectors are not orthonormal");
  }
}

}  // namespace dppl
