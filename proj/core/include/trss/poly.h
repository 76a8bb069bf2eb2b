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

#ifndef TRSS_POLY_H_
#define TRSS_POLY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "trss/field.h"

namespace trss {

class RandomSource;

// Dense polynomial over GF(q); coefficient i multiplies x^i.
class Polynomial {
 public:
  // Throws Error(kInvalidParams) if empty, kModulusMismatch if mixed fields.
  explicit Polynomial(std::vector<FieldElement> coefficients);

  // `constant` followed by `degree` uniform coefficients, drawn in order of
  // increasing power.
  static Polynomial Random(const FieldElement& constant, std::size_t degree,
                           RandomSource& rng);

  const std::vector<FieldElement>& coefficients() const noexcept {
    return coefficients_;
  }
  const FieldElement& coefficient(std::size_t i) const {
    return coefficients_.at(i);
  }
  std::size_t degree_bound() const noexcept { return coefficients_.size() - 1; }
  const FieldModulus& modulus() const noexcept {
    return coefficients_.front().modulus();
  }

  // Horner evaluation.
  FieldElement Evaluate(const FieldElement& x) const;

  // Coefficient-wise sum; the shorter operand is zero-extended.
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<FieldElement> coefficients_;
};

struct Point {
  FieldElement x;
  FieldElement y;
};

// Constant term of the unique polynomial of degree < points.size() passing
// through `points`:  sum_j y_j * prod_{l != j} x_l / (x_l - x_j).
// Throws Error(kInvalidParams) for an empty list, a zero abscissa, or a
// repeated abscissa.
FieldElement InterpolateAtZero(std::span<const Point> points);

}  // namespace trss

#endif  // TRSS_POLY_H_
