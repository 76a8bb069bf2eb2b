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

#ifndef TRSS_FIELD_H_
#define TRSS_FIELD_H_

#include <cstdint>
#include <string>

namespace trss {

class RandomSource;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t value);

// The order q of a prime field GF(q), 2 < q < 2^64.
class FieldModulus {
 public:
  // Throws Error(kInvalidParams) unless `q` is an odd prime.
  explicit FieldModulus(std::uint64_t q);

  std::uint64_t value() const noexcept { return q_; }

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::uint64_t q_;
};

// A canonical residue in [0, q). Mixing elements of different fields
// throws Error(kModulusMismatch).
class FieldElement {
 public:
  FieldElement(const FieldModulus& modulus, std::uint64_t value);

  static FieldElement Zero(const FieldModulus& modulus) { return {modulus, 0}; }
  static FieldElement One(const FieldModulus& modulus) { return {modulus, 1}; }

  std::uint64_t value() const noexcept { return value_; }
  const FieldModulus& modulus() const noexcept { return modulus_; }
  std::uint64_t q() const noexcept { return modulus_.value(); }
  bool is_zero() const noexcept { return value_ == 0; }

  // Multiplicative inverse by the extended Euclidean algorithm.
  // Throws Error(kZeroInverse) for zero.
  FieldElement Inverse() const;

  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string ToString() const { return std::to_string(value_); }

 private:
  FieldModulus modulus_;
  std::uint64_t value_;
};

// Uniform draw from GF(q) by rejection sampling on bit-masked 64-bit words;
// never reduces a wide draw modulo q.
FieldElement RandomElement(const FieldModulus& modulus, RandomSource& rng);

}  // namespace trss

#endif  // TRSS_FIELD_H_
