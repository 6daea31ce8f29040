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

#include "dppl/link_network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dppl/errors.hpp"

namespace dppl {

ActiveSubset::ActiveSubset(std::vector<int> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InvalidParameterError("ActiveSubset: duplicate link index");
  }
  if (!indices_.empty() && indices_.front() < 0) {
    throw InvalidParameterError("ActiveSubset: negative link index");
  }
}

ActiveSubset ActiveSubset::from_mask(std::uint64_t mask, int ground_size) {
  std::vector<int> indices;
  for (int i = 0; i < ground_size; ++i) {
    if (mask & (std::uint64_t{1} << i)) indices.push_back(i);
  }
  return ActiveSubset(std::move(indices));
}

bool ActiveSubset::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::uint64_t ActiveSubset::to_mask() const {
  std::uint64_t mask = 0;
  for (int i : indices_) {
    if (i >= 64) throw InvalidParameterError("ActiveSubset: index >= 64");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

void ActiveSubset::validate_for(int ground_size) const {
  for (int i : indices_) {
    if (i < 0 || i >= ground_size) {
      throw InvalidParameterError("ActiveSubset: index out of range");
    }
  }
}

PowerConfig::PowerConfig(double high, double low, double max, double threshold)
    : p_high(high), p_low(low), p_max(max), p_threshold(threshold) {
  if (!(0.0 <= p_low && p_low < p_threshold && p_threshold < p_high &&
        p_high <= p_max)) {
    throw InvalidParameterError(
        "PowerConfig: requires 0 <= p_low < p_threshold < p_high <= p_max");
  }
}

PowerConfig PowerConfig::from_db(double high_db, double low_db, double max_db,
                                 double threshold_db) {
  auto lin = [](double db) { return std::pow(10.0, db / 10.0); };
  return PowerConfig(lin(high_db), lin(low_db), lin(max_db), lin(threshold_db));
}

LinkNetwork::LinkNetwork(std::vector<Vec2> tx, std::vector<Vec2> rx,
                         double link_distance, double pathloss_exponent)
    : tx_(std::move(tx)),
      rx_(std::move(rx)),
      link_distance_(link_distance),
      pathloss_exponent_(pathloss_exponent) {
  const int m = static_cast<int>(tx_.size());
  if (m < 1 || rx_.size() != tx_.size()) {
    throw InvalidParameterError(
        "LinkNetwork: need equal, nonzero tx/rx counts");
  }
  if (!(link_distance_ > 0.0) || !std::isfinite(link_distance_)) {
    throw InvalidParameterError("LinkNetwork: link distance must be positive");
  }
  for (int l = 0; l < m; ++l) {
    const double dist = distance(tx_[l], rx_[l]);
    if (std::abs(dist - link_distance_) > 1e-9 * link_distance_) {
      throw InvalidParameterError(
          "LinkNetwork: pair distance does not match link distance");
    }
  }
  gains_.resize(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double d = distance(tx_[i], rx_[j]);
      const double g = std::pow(d, -pathloss_exponent_);
      if (!(g > 0.0) || !std::isfinite(g)) {
        throw InvalidParameterError(
            "LinkNetwork: degenerate geometry produced a non-finite gain");
      }
      gains_(i, j) = g;
    }
  }
}

LinkNetwork LinkNetwork::generate(int m, double disc_radius, double d,
                                  double alpha, std::uint64_t seed) {
  Rng rng(seed);
  return generate(m, disc_radius, d, alpha, rng);
}

LinkNetwork LinkNetwork::generate(int m, double disc_radius, double d,
                                  double alpha, Rng& rng) {
  if (m < 1) throw InvalidParameterError("generate: m must be >= 1");
  if (!(disc_radius > 0.0)) {
    throw InvalidParameterError("generate: disc radius must be positive");
  }
  if (!(d > 0.0)) {
    throw InvalidParameterError("generate: link distance must be positive");
  }

  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vec2> tx(m), rx(m);
    for (int l = 0; l < m; ++l) {
      const double r = disc_radius * std::sqrt(rng.uniform01());
      const double phi = 2.0 * std::numbers::pi * rng.uniform01();
      tx[l] = {r * std::cos(phi), r * std::sin(phi)};
      const double dir = 2.0 * std::numbers::pi * rng.uniform01();
      rx[l] = {tx[l].x + d * std::cos(dir), tx[l].y + d * std::sin(dir)};
    }
    // Reject draws where a transmitter sits on top of a foreign receiver;
    // the gain would blow up. Probability-zero event, but guard anyway.
    bool degenerate = false;
    for (int i = 0; i < m && !degenerate; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && squared_distance(tx[i], rx[j]) < 1e-24) {
          degenerate = true;
          break;
        }
      }
    }
    if (degenerate) continue;
    return LinkNetwork(std::move(tx), std::move(rx), d, alpha);
  }
  throw InvalidParameterError(
      "generate: repeated degenerate geometry draws; check parameters");
}

nlohmann::json LinkNetwork::to_json() const {
  nlohmann::json j;
  j["d"] = link_distance_;
  j["alpha"] = pathloss_exponent_;
  auto points = [](const std::vector<Vec2>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Vec2& p : ps) arr.push_back({p.x, p.y});
    return arr;
  };
  j["tx"] = points(tx_);
  j["rx"] = points(rx_);
  return j;
}

LinkNetwork LinkNetwork::from_json(const nlohmann::json& j) {
  auto points = [](const nlohmann::json& arr) {
    std::vector<Vec2> ps;
    ps.reserve(arr.size());
    for (const auto& p : arr) {
      ps.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return ps;
  };
  return LinkNetwork(points(j.at("tx")), points(j.at("rx")),
                     j.at("d").get<double>(), j.at("alpha").get<double>());
}

int sample_network_size(double mean, Rng& rng) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw InvalidParameterError("sample_network_size: mean must be positive");
  }
  while (true) {
    const int m = rng.poisson(mean);
    if (m >= 1) return m;
  }
}

int sample_network_size(double mean, std::uint64_t seed) {
  Rng rng(seed);
  return sample_network_size(mean, rng);
}

std::vector<double> subset_powers(const ActiveSubset& subset, int m,
                                  const PowerConfig& cfg) {
  subset.validate_for(m);
  std::vector<double> powers(m, cfg.p_low);
  for (int l : subset.indices()) powers[l] = cfg.p_high;
  return powers;
}

double sinr(const LinkNetwork& network, std::span<const double> powers,
            int l) {
  const int m = network.size();
  if (l < 0 || l >= m) throw std::out_of_range("sinr: link index out of range");
  if (static_cast<int>(powers.size()) != m) {
    throw InvalidParameterError("sinr: power vector length must equal M");
  }
  double interference = 0.0;
  for (int j = 0; j < m; ++j) {
    if (j != l) interference += network.gain(j, l) * powers[j];
  }
  return network.gain(l, l) * powers[l] / (1.0 + interference);
}

double sum_rate(const LinkNetwork& network, const ActiveSubset& subset,
                const PowerConfig& cfg) {
  const std::vector<double> powers =
      subset_powers(subset, network.size(), cfg);
  double total = 0.0;
  for (int l = 0; l < network.size(); ++l) {
    total += std::log2(1.0 + sinr(network, powers, l));
  }
  return total;
}

}  // namespace dppl
