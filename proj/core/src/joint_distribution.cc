// Copyright 2026 The trss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trss/joint_distribution.h"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "trss/errors.h"

namespace trss {
namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using Counts = std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, KeyHash>;

void Project(const JointDistribution& dist, std::size_t row,
             std::span<const std::size_t> a, std::span<const std::size_t> b,
             std::vector<std::uint64_t>& key) {
  key.clear();
  for (std::size_t v : a) key.push_back(dist.value(row, v));
  for (std::size_t v : b) key.push_back(dist.value(row, v));
}

}  // namespace

JointDistribution::JointDistribution(std::size_t num_variables)
    : width_(num_variables) {}

void JointDistribution::Add(std::span<const std::uint64_t> values,
                            std::uint64_t weight) {
  if (values.size() != width_) {
    throw Error(ErrorCode::kInvalidParams,
                "outcome has " + std::to_string(values.size()) +
                    " variables, expected " + std::to_string(width_));
  }
  if (weight > std::numeric_limits<std::uint64_t>::max() - total_) {
    throw Error(ErrorCode::kInvalidParams, "total weight overflows 64 bits");
  }
  values_.insert(values_.end(), values.begin(), values.end());
  weights_.push_back(weight);
  total_ += weight;
}

void JointDistribution::Resize(std::size_t rows) {
  values_.assign(rows * width_, 0);
  weights_.assign(rows, 0);
  total_ = 0;
}

void JointDistribution::Set(std::size_t row, std::span<const std::uint64_t> values,
                            std::uint64_t weight) {
  if (values.size() != width_ || row >= weights_.size()) {
    throw Error(ErrorCode::kInvalidParams, "outcome row or width out of range");
  }
  std::copy(values.begin(), values.end(), values_.begin() + row * width_);
  weights_[row] = weight;
}

void JointDistribution::Finalize() {
  total_ = 0;
  for (std::uint64_t w : weights_) {
    if (w > std::numeric_limits<std::uint64_t>::max() - total_) {
      throw Error(ErrorCode::kInvalidParams, "total weight overflows 64 bits");
    }
    total_ += w;
  }
}

void JointDistribution::CheckVariables(std::span<const std::size_t> variables) const {
  for (std::size_t v : variables) {
    if (v >= width_) {
      throw Error(ErrorCode::kUnknownSelector,
                  "variable index " + std::to_string(v) + " out of range");
    }
  }
}

double JointDistribution::ConditionalEntropy(
    std::span<const std::size_t> target,
    std::span<const std::size_t> given) const {
  CheckVariables(target);
  CheckVariables(given);
  if (total_ == 0) return 0.0;

  Counts joint;
  Counts marginal;
  std::vector<std::uint64_t> key;
  for (std::size_t row = 0; row < weights_.size(); ++row) {
    if (weights_[row] == 0) continue;
    Project(*this, row, given, {}, key);
    marginal[key] += weights_[row];
    Project(*this, row, given, target, key);
    joint[key] += weights_[row];
  }

  // H = sum_{g,x} w(g,x)/W * log2(w(g)/w(g,x)).
  long double sum = 0.0L;
  std::vector<std::uint64_t> given_key;
  for (const auto& [k, w] : joint) {
    given_key.assign(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(given.size()));
    const std::uint64_t wg = marginal.at(given_key);
    if (wg == w) continue;
    sum += static_cast<long double>(w) *
           (std::log2(static_cast<long double>(wg)) -
            std::log2(static_cast<long double>(w)));
  }
  return static_cast<double>(sum / static_cast<long double>(total_));
}

bool JointDistribution::Determines(std::span<const std::size_t> given,
                                   std::span<const std::size_t> target) const {
  CheckVariables(target);
  CheckVariables(given);
  std::unordered_map<std::vector<std::uint64_t>, std::vector<std::uint64_t>, KeyHash>
      seen;
  std::vector<std::uint64_t> g;
  std::vector<std::uint64_t> x;
  for (std::size_t row = 0; row < weights_.size(); ++row) {
    if (weights_[row] == 0) continue;
    Project(*this, row, given, {}, g);
    Project(*this, row, target, {}, x);
    auto [it, inserted] = seen.try_emplace(g, x);
    if (!inserted && it->second != x) return false;
  }
  return true;
}

}  // namespace trss
