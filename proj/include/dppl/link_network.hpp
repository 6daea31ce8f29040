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

#ifndef DPPL_LINK_NETWORK_HPP
#define DPPL_LINK_NETWORK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "dppl/geometry.hpp"
#include "dppl/rng.hpp"

namespace dppl {

// A set of link indices drawn from {0..M-1}: the active links chosen by a
// scheduler or inferred by the DPP. Indices are kept sorted and unique.
class ActiveSubset {
 public:
  ActiveSubset() = default;
  explicit ActiveSubset(std::vector<int> indices);
  static ActiveSubset from_mask(std::uint64_t mask, int ground_size);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  std::uint64_t to_mask() const;

  // Throws InvalidParameterError unless every index lies in [0, ground_size).
  void validate_for(int ground_size) const;

  bool operator==(const ActiveSubset& other) const = default;

 private:
  std::vector<int> indices_;
};

// Binary power levels, stored as linear ratios to the (unit) noise power.
struct PowerConfig {
  double p_high;
  double p_low;
  double p_max;
  double p_threshold;

  PowerConfig(double high, double low, double max, double threshold);
  static PowerConfig from_db(double high_db, double low_db, double max_db,
                             double threshold_db);
};

// M transmitter/receiver pairs with fixed link distance and power-law
// channel gains. Immutable after construction and safe to share across
// threads.
class LinkNetwork {
 public:
  // Validates the geometry (equal pair counts, per-link distance equal to
  // `link_distance` within 1e-9 relative tolerance) and computes the gain
  // matrix gains(i, j) = ||tx_i - rx_j||^-alpha. Throws
  // InvalidParameterError on violations or non-finite gains.
  LinkNetwork(std::vector<Vec2> tx, std::vector<Vec2> rx, double link_distance,
              double pathloss_exponent);

  // Draws m transmitters uniformly in a disc of the given radius centered at
  // the origin and places each receiver at distance d in a uniformly random
  // direction from its transmitter. Draws that would produce an unbounded
  // gain (a transmitter coinciding with a foreign receiver) are rejected and
  // regenerated.
  static LinkNetwork generate(int m, double disc_radius, double d,
                              double alpha, std::uint64_t seed);
  static LinkNetwork generate(int m, double disc_radius, double d,
                              double alpha, Rng& rng);

  int size() const { return static_cast<int>(tx_.size()); }
  double link_distance() const { return link_distance_; }
  double pathloss_exponent() const { return pathloss_exponent_; }
  const Vec2& tx(int i) const { return tx_.at(i); }
  const Vec2& rx(int i) const { return rx_.at(i); }

  // Channel gain from transmitter `tx_index` to receiver `rx_index`.
  double gain(int tx_index, int rx_index) const {
    return gains_(tx_index, rx_index);
  }
  const Eigen::MatrixXd& gains() const { return gains_; }

  // Serialization stores positions only; gains are recomputed on load.
  nlohmann::json to_json() const;
  static LinkNetwork from_json(const nlohmann::json& j);

 private:
  std::vector<Vec2> tx_;
  std::vector<Vec2> rx_;
  double link_distance_;
  double pathloss_exponent_;
  Eigen::MatrixXd gains_;
};

// Poisson network size with mean `mean`, conditioned on being positive
// (zero draws are rejected and redrawn).
int sample_network_size(double mean, Rng& rng);
int sample_network_size(double mean, std::uint64_t seed);

// Power vector induced by a subset: p_l = p_high on active links, p_low on
// the rest.
std::vector<double> subset_powers(const ActiveSubset& subset, int m,
                                  const PowerConfig& cfg);

// SINR at receiver l under the given transmit powers, with noise power
// normalized to 1.
double sinr(const LinkNetwork& network, std::span<const double> powers, int l);

// Sum over all M links of log2(1 + SINR_l) under the subset-induced powers.
// Inactive links transmit at p_low and still contribute rate.
double sum_rate(const LinkNetwork& network, const ActiveSubset& subset,
                const PowerConfig& cfg);

}  // namespace dppl

#endif  // DPPL_LINK_NETWORK_HPP
