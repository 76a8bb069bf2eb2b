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

#include "trss/poly.h"

#include <string>

#include "trss/errors.h"
#include "trss/random.h"

namespace trss {

Polynomial::Polynomial(std::vector<FieldElement> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw Error(ErrorCode::kInvalidParams, "polynomial needs a coefficient");
  }
  for (const FieldElement& c : coefficients_) {
    if (c.q() != coefficients_.front().q()) {
      throw Error(ErrorCode::kModulusMismatch,
                  "polynomial coefficients from different fields");
    }
  }
}

Polynomial Polynomial::Random(const FieldElement& constant, std::size_t degree,
                              RandomSource& rng) {
  std::vector<FieldElement> coefficients;
  coefficients.reserve(degree + 1);
  coefficients.push_back(constant);
  for (std::size_t i = 0; i < degree; ++i) {
    coefficients.push_back(RandomElement(constant.modulus(), rng));
  }
  return Polynomial(std::move(coefficients));
}

FieldElement Polynomial::Evaluate(const FieldElement& x) const {
  FieldElement acc = coefficients_.back();
  for (auto it = coefficients_.rbegin() + 1; it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  // A single-coefficient polynomial never touches x; still reject a foreign x.
  if (x.q() != acc.q()) {
    throw Error(ErrorCode::kModulusMismatch, "evaluation point field differs");
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Polynomial& longer = a.coefficients_.size() >= b.coefficients_.size() ? a : b;
  const Polynomial& shorter = &longer == &a ? b : a;
  std::vector<FieldElement> sum = longer.coefficients_;
  for (std::size_t i = 0; i < shorter.coefficients_.size(); ++i) {
    sum[i] += shorter.coefficients_[i];
  }
  return Polynomial(std::move(sum));
}

FieldElement InterpolateAtZero(std::span<const Point> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidParams, "interpolation needs a point");
  }
  const FieldModulus& field = points.front().x.modulus();
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].x.is_zero()) {
      throw Error(ErrorCode::kInvalidParams, "evaluation point x = 0");
    }
    for (std::size_t l = 0; l < j; ++l) {
      if (points[l].x == points[j].x) {
        throw Error(ErrorCode::kInvalidParams,
                    "duplicate evaluation point x = " + points[j].x.ToString());
      }
    }
  }

  FieldElement result = FieldElement::Zero(field);
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElement numerator = FieldElement::One(field);
    FieldElement denominator = FieldElement::One(field);
    for (std::size_t l = 0; l < points.size(); ++l) {
      if (l == j) continue;
      numerator *= points[l].x;
      denominator *= points[l].x - points[j].x;
    }
    result += points[j].y * numerator * denominator.Inverse();
  }
  return result;
}

}  // namespace trss
