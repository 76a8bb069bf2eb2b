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

#ifndef TRSS_JOINT_DISTRIBUTION_H_
#define TRSS_JOINT_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trss {

// Finite joint distribution over a fixed number of discrete variables, each
// outcome encoded as a uint64. Probabilities are exact rationals: outcome
// weights are integers over the common denominator total_weight(). Floating
// point enters only through the final log2 in the entropy functions.
class JointDistribution {
 public:
  explicit JointDistribution(std::size_t num_variables);

  // Appends one outcome. Throws Error(kInvalidParams) on a width mismatch
  // or if the running total would overflow 64 bits.
  void Add(std::span<const std::uint64_t> values, std::uint64_t weight);

  // Reserves room for `rows` outcomes; used with Set() for parallel fills.
  void Resize(std::size_t rows);
  void Set(std::size_t row, std::span<const std::uint64_t> values,
           std::uint64_t weight);
  // Recomputes total_weight() after Set() calls.
  void Finalize();

  std::size_t num_variables() const noexcept { return width_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t total_weight() const noexcept { return total_; }

  std::uint64_t value(std::size_t row, std::size_t variable) const {
    return values_[row * width_ + variable];
  }
  std::uint64_t weight(std::size_t row) const { return weights_[row]; }

  // H(target | given) in bits. An empty `given` yields H(target).
  double ConditionalEntropy(std::span<const std::size_t> target,
                            std::span<const std::size_t> given) const;
  double Entropy(std::span<const std::size_t> variables) const {
    return ConditionalEntropy(variables, {});
  }

  // True iff `target` is constant on every positive-weight class of `given`,
  // i.e. H(target | given) is exactly zero.
  bool Determines(std::span<const std::size_t> given,
                  std::span<const std::size_t> target) const;

 private:
  void CheckVariables(std::span<const std::size_t> variables) const;

  std::size_t width_;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

}  // namespace trss

#endif  // TRSS_JOINT_DISTRIBUTION_H_
