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

#include "trss/random.h"

#include <sodium.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "trss/errors.h"

namespace trss {
namespace {

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void EnsureSodium() {
  static const int status = sodium_init();
  if (status < 0) throw std::runtime_error("libsodium failed to initialize");
}

}  // namespace

Seed ParseSeedHex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  Seed seed{};
  if (hex.size() != 2 * seed.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "seed must be 64 hex digits (32 bytes), got " +
                    std::to_string(hex.size()));
  }
  for (std::size_t i = 0; i < seed.size(); ++i) {
    const int hi = HexDigit(hex[2 * i]);
    const int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidParams, "seed contains a non-hex digit");
    }
    seed[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return seed;
}

std::string SeedToHex(const Seed& seed) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * seed.size());
  for (std::uint8_t b : seed) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

SeededRandom::SeededRandom(const Seed& seed, std::string_view domain)
    : key_(seed) {
  EnsureSodium();
  std::array<std::uint8_t, crypto_generichash_BYTES_MIN> digest{};
  crypto_generichash(digest.data(), digest.size(),
                     reinterpret_cast<const unsigned char*>(domain.data()),
                     domain.size(), nullptr, 0);
  std::copy_n(digest.begin(), nonce_.size(), nonce_.begin());
}

SeededRandom SeededRandom::FromEntropy(std::string_view domain) {
  EnsureSodium();
  Seed seed{};
  randombytes_buf(seed.data(), seed.size());
  return SeededRandom(seed, domain);
}

std::uint64_t SeededRandom::NextU64() {
  if (offset_ + 8 > block_.size()) Refill();
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    word |= static_cast<std::uint64_t>(block_[offset_ + i]) << (8 * i);
  }
  offset_ += 8;
  return word;
}

void SeededRandom::Refill() {
  static constexpr std::array<std::uint8_t, 64> kZeros{};
  if (counter_ == std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kRandomnessExhausted, "ChaCha20 block counter wrapped");
  }
  crypto_stream_chacha20_ietf_xor_ic(block_.data(), kZeros.data(), block_.size(),
                                     nonce_.data(), counter_++, key_.data());
  offset_ = 0;
}

std::uint64_t ReplayRandom::NextU64() {
  if (next_ >= words_.size()) {
    throw Error(ErrorCode::kRandomnessExhausted,
                "replay script of " + std::to_string(words_.size()) +
                    " words exhausted");
  }
  return words_[next_++];
}

}  // namespace trss
