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

#include "trss/field.h"

#include <array>
#include <bit>

#include "trss/errors.h"
#include "trss/random.h"

namespace trss {
namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void RequireSameField(const FieldElement& a, const FieldElement& b) {
  if (a.q() != b.q()) {
    throw Error(ErrorCode::kModulusMismatch,
                "GF(" + std::to_string(a.q()) + ") vs GF(" +
                    std::to_string(b.q()) + ")");
  }
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldModulus::FieldModulus(std::uint64_t q) : q_(q) {
  if (q <= 2 || !IsPrime(q)) {
    throw Error(ErrorCode::kInvalidParams,
                "field order q = " + std::to_string(q) +
                    " must be an odd prime (primality check failed)");
  }
}

FieldElement::FieldElement(const FieldModulus& modulus, std::uint64_t value)
    : modulus_(modulus), value_(value % modulus.value()) {}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) {
    throw Error(ErrorCode::kZeroInverse, "zero has no multiplicative inverse");
  }
  // Extended Euclid on signed 128-bit intermediates.
  __int128 old_r = static_cast<__int128>(value_);
  __int128 r = static_cast<__int128>(q());
  __int128 old_s = 1;
  __int128 s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    __int128 tmp = r;
    r = old_r - quotient * r;
    old_r = tmp;
    tmp = s;
    s = old_s - quotient * s;
    old_s = tmp;
  }
  __int128 inv = old_s % static_cast<__int128>(q());
  if (inv < 0) inv += q();
  return {modulus_, static_cast<std::uint64_t>(inv)};
}

FieldElement FieldElement::operator-() const {
  return {modulus_, value_ == 0 ? 0 : q() - value_};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  const std::uint64_t q = a.q();
  // a + b may wrap past 2^64 when q is close to it.
  const u128 sum = static_cast<u128>(a.value_) + b.value_;
  return {a.modulus_, static_cast<std::uint64_t>(sum % q)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  const std::uint64_t diff =
      a.value_ >= b.value_ ? a.value_ - b.value_ : a.q() - (b.value_ - a.value_);
  return {a.modulus_, diff};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return {a.modulus_, MulMod(a.value_, b.value_, a.q())};
}

FieldElement RandomElement(const FieldModulus& modulus, RandomSource& rng) {
  const std::uint64_t q = modulus.value();
  const int bits = std::bit_width(q - 1);
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t candidate = rng.NextU64() & mask;
    if (candidate < q) return {modulus, candidate};
  }
}

}  // namespace trss
