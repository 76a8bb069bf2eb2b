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

#ifndef TRSS_RANDOM_H_
#define TRSS_RANDOM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trss {

// Source of 64-bit words consumed by the scheme operations. Not thread-safe;
// concurrent dealings need independent instances.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t NextU64() = 0;
};

using Seed = std::array<std::uint8_t, 32>;

// Parses exactly 64 hex digits (an optional "0x" prefix is accepted).
// Throws Error(kInvalidParams) on malformed input.
Seed ParseSeedHex(std::string_view hex);
std::string SeedToHex(const Seed& seed);

// Deterministic stream from a 32-byte seed: the ChaCha20 keystream under
// the seed as key, with a 96-bit nonce derived from `domain` (BLAKE2b), read
// as little-endian 64-bit words. Identical on every platform.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(const Seed& seed, std::string_view domain = {});

  // Seeds from the operating system's CSPRNG.
  static SeededRandom FromEntropy(std::string_view domain = {});

  std::uint64_t NextU64() override;

 private:
  void Refill();

  Seed key_;
  std::array<std::uint8_t, 12> nonce_{};
  std::uint32_t counter_ = 0;
  std::array<std::uint8_t, 64> block_{};
  std::size_t offset_ = 64;
};

// Replays a fixed list of words; used to inject exact coefficient and key
// assignments. Throws Error(kRandomnessExhausted) when the script runs out.
class ReplayRandom final : public RandomSource {
 public:
  explicit ReplayRandom(std::vector<std::uint64_t> words)
      : words_(std::move(words)) {}

  std::uint64_t NextU64() override;

  std::size_t consumed() const noexcept { return next_; }
  bool exhausted() const noexcept { return next_ == words_.size(); }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t next_ = 0;
};

}  // namespace trss

#endif  // TRSS_RANDOM_H_
