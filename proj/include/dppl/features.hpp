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

#ifndef DPPL_FEATURES_HPP
#define DPPL_FEATURES_HPP

#include <Eigen/Dense>

#include "dppl/dpp_kernel.hpp"
#include "dppl/link_network.hpp"

namespace dppl {

// Learned parameters of the conditional DPP: quality weights theta over the
// three link features and the similarity bandwidth sigma (meters). When
// `standardize` is set, features are z-scored with the stored training-set
// statistics before entering the quality exponent.
struct DppModel {
  Eigen::Vector3d theta = Eigen::Vector3d::Zero();
  double sigma = 1.0;
  bool standardize = false;
  Eigen::Vector3d feature_means = Eigen::Vector3d::Zero();
  Eigen::Vector3d feature_stds = Eigen::Vector3d::Ones();

  void validate() const;
};

// Per-link feature triple: received signal power over the direct link and
// the two strongest interfering received powers at this link's receiver.
struct LinkFeatures {
  double direct_power = 0.0;
  double interference_1 = 0.0;
  double interference_2 = 0.0;

  Eigen::Vector3d as_vector() const {
    return {direct_power, interference_1, interference_2};
  }
};

// f = [zeta_ii * p_h, I1, I2] with I1 >= I2 the top-2 of {p_h * zeta_ji}
// over interferers j != i; missing interferers fill with zero.
LinkFeatures extract_features(const LinkNetwork& network,
                              const PowerConfig& cfg, int i);

// Raw (unstandardized) features for all links, one row per link.
Eigen::MatrixXd feature_matrix(const LinkNetwork& network,
                               const PowerConfig& cfg);

// Quality g = exp(theta . f), with the model's standardization applied.
// Throws FeatureScalingError when the exponent leaves [-700, 700].
double quality(const DppModel& model, const LinkFeatures& features);

// Squared cross distance ||x(t_i)-x(r_j)||^2 + ||x(t_j)-x(r_i)||^2.
double cross_distance_sq(const LinkNetwork& network, int i, int j);

// Gaussian cross-distance similarity for i != j; S_ii = 1 by definition
// (the quality-diversity decomposition forces unit self-similarity).
double similarity(const LinkNetwork& network, double sigma, int i, int j);

Eigen::MatrixXd similarity_matrix(const LinkNetwork& network, double sigma);

// Conditional kernel L_ij = g_i * S_ij * g_j, as a raw matrix. No PSD
// flooring is applied, so the entries are smooth in (theta, sigma); this is
// the form the likelihood and its gradient differentiate.
Eigen::MatrixXd build_l_matrix(const DppModel& model,
                               const LinkNetwork& network,
                               const PowerConfig& cfg);

// Same kernel wrapped in DppKernel (eigendecomposed and PSD-floored), the
// form sampling and MAP inference consume.
DppKernel build_kernel(const DppModel& model, const LinkNetwork& network,
                       const PowerConfig& cfg);

}  // namespace dppl

#endif  // DPPL_FEATURES_HPP
