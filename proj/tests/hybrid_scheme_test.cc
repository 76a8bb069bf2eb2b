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

#include "trss/hybrid_scheme.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "trss/errors.h"
#include "trss/poly.h"
#include "trss/random.h"

namespace trss::hybrid {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidParams;
}

Params P(std::uint64_t q, unsigned k1, unsigned k2, unsigned n, unsigned tau,
         unsigned ell = 0) {
  return {FieldModulus(q), k1, k2, n, tau, ell};
}

TEST(HybridParamsTest, Validation) {
  EXPECT_NO_THROW(P(7, 2, 3, 4, 2).Validate());
  EXPECT_NO_THROW(P(7, 3, 3, 3, 1).Validate());
  EXPECT_EQ(CodeOf([] { P(7, 3, 2, 4, 2).Validate(); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { P(7, 2, 5, 4, 2).Validate(); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { P(7, 0, 1, 4, 2).Validate(); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { P(5, 1, 2, 5, 2).Validate(); }), ErrorCode::kInvalidParams);
}

TEST(HybridInitializeTest, KeyShape) {
  SeededRandom rng(Seed{}, "init");
  const MasterKey naive = Initialize(P(7, 1, 2, 3, 3), Variant::kNaive, rng);
  EXPECT_EQ(naive.ell, 1u);
  EXPECT_EQ(naive.entries.size(), 3u);
  const MasterKey opt = Initialize(P(7, 1, 3, 3, 3, 2), Variant::kOptimal, rng);
  EXPECT_EQ(opt.ell, 2u);
  EXPECT_EQ(opt.entries.size(), 6u);
  EXPECT_EQ(Extract(opt, 2).values.size(), 2u);
  EXPECT_EQ(Extract(opt, 2).values[1], opt.at(2, 2));
}

TEST(HybridNaiveTest, ConstantPolynomialsGiveMaskedAndPlainSecret) {
  SeededRandom rng(Seed{}, "naive");
  const Params params = P(11, 1, 1, 3, 2);
  const MasterKey key = Initialize(params, Variant::kNaive, rng);
  const FieldElement s(params.modulus, 6);
  const auto shares = DealNaive(key, params, s, 2, rng);
  ASSERT_EQ(shares.size(), 3u);
  for (const Share& share : shares) {
    ASSERT_EQ(share.values.size(), 2u);
    EXPECT_EQ(share.values[0], s + key.at(2, 1));
    EXPECT_EQ(share.values[1], s);
  }
}

TEST(HybridNaiveTest, DrawsTimedPolynomialFirst) {
  const Params params = P(7, 2, 3, 3, 1);
  ReplayRandom key_script({5});
  const MasterKey key = Initialize(params, Variant::kNaive, key_script);
  ReplayRandom coins({1, 2, 3});
  const auto shares = DealNaive(key, params, FieldElement(params.modulus, 4), 1, coins);
  EXPECT_TRUE(coins.exhausted());
  // f1 = (4 + 5) + 1x = 2 + x, f2 = 4 + 2x + 3x^2 over GF(7).
  EXPECT_EQ(shares[0].values[0].value(), 3u);
  EXPECT_EQ(shares[2].values[0].value(), 5u);
  EXPECT_EQ(shares[0].values[1].value(), 2u);
  EXPECT_EQ(shares[1].values[1].value(), 6u);
}

TEST(HybridOptimalTest, EqualThresholdsPublishNothing) {
  SeededRandom rng(Seed{}, "equal");
  const Params params = P(7, 2, 2, 3, 2, 0);
  const MasterKey key = Initialize(params, Variant::kOptimal, rng);
  EXPECT_TRUE(key.entries.empty());
  const FieldElement s(params.modulus, 5);
  const Dealing dealing = DealOptimal(key, params, s, 1, rng);
  EXPECT_TRUE(dealing.public_params.values.empty());
  const std::vector<Share> pair(dealing.shares.begin(), dealing.shares.begin() + 2);
  EXPECT_EQ(ReconstructWithSignal(pair, std::nullopt, Extract(key, 1), params), s);
  EXPECT_EQ(ReconstructWithoutSignal(pair, params), s);
}

TEST(HybridOptimalTest, PublicValueMasksLinearCoefficient) {
  const Params params = P(7, 1, 2, 2, 1, 1);
  ReplayRandom key_script({4});
  const MasterKey key = Initialize(params, Variant::kOptimal, key_script);
  ReplayRandom coins({6});
  const Dealing dealing =
      DealOptimal(key, params, FieldElement(params.modulus, 2), 1, coins);
  // f = 2 + 6x; p_1 = 6 + 4.
  ASSERT_EQ(dealing.public_params.values.size(), 1u);
  EXPECT_EQ(dealing.public_params.values[0].value(), 3u);
  EXPECT_EQ(dealing.shares[0].values[0].value(), 1u);
  EXPECT_EQ(dealing.shares[1].values[0].value(), 0u);
}

// Unmasking the public values with the signal yields the polynomial's upper
// coefficients, which a k2-point interpolation recovers independently.
TEST(HybridOptimalTest, UnmaskedPublicValuesMatchInterpolatedCoefficients) {
  SeededRandom rng(Seed{}, "unmask");
  const Params params = P(11, 2, 4, 5, 2, 3);
  const MasterKey key = Initialize(params, Variant::kOptimal, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const Dealing dealing =
        DealOptimal(key, params, FieldElement(params.modulus, 7), 2, rng);
    // Brute-force the cubic with constant 7 through shares 1..4.
    std::vector<std::uint64_t> u;
    for (int i = 0; i < 4; ++i) u.push_back(dealing.shares[i].values[0].value());
    bool found = false;
    for (std::uint64_t a1 = 0; a1 < 11 && !found; ++a1) {
      for (std::uint64_t a2 = 0; a2 < 11 && !found; ++a2) {
        for (std::uint64_t a3 = 0; a3 < 11 && !found; ++a3) {
          bool ok = true;
          for (std::uint64_t x = 1; x <= 4 && ok; ++x) {
            ok = (7 + a1 * x + a2 * x * x + a3 * x * x * x) % 11 == u[x - 1];
          }
          if (!ok) continue;
          found = true;
          const auto signal = Extract(key, 2);
          EXPECT_EQ((dealing.public_params.values[0] - signal.values[0]).value(), a2);
          EXPECT_EQ((dealing.public_params.values[1] - signal.values[1]).value(), a3);
        }
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(HybridRoundTripTest, SweepBothVariantsAndPaths) {
  SeededRandom rng(Seed{}, "sweep");
  for (std::uint64_t q : {5u, 7u}) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned k2 = 1; k2 <= n; ++k2) {
        for (unsigned k1 = 1; k1 <= k2; ++k1) {
          for (unsigned tau = 1; tau <= 2; ++tau) {
            const Params params = P(q, k1, k2, n, tau, k2 - k1);
            const MasterKey naive = Initialize(params, Variant::kNaive, rng);
            const MasterKey opt = Initialize(params, Variant::kOptimal, rng);
            for (unsigned t = 1; t <= tau; ++t) {
              for (std::uint64_t v = 0; v < q; ++v) {
                const FieldElement s(params.modulus, v);
                const auto ns = DealNaive(naive, params, s, t, rng);
                const Dealing od = DealOptimal(opt, params, s, t, rng);
                const std::vector<Share> nk1(ns.end() - k1, ns.end());
                const std::vector<Share> ok1(od.shares.end() - k1, od.shares.end());
                const std::vector<Share> nk2(ns.begin(), ns.begin() + k2);
                const std::vector<Share> ok2(od.shares.begin(), od.shares.begin() + k2);
                ASSERT_EQ(ReconstructWithSignal(nk1, std::nullopt, Extract(naive, t), params), s);
                ASSERT_EQ(ReconstructWithSignal(ok1, od.public_params, Extract(opt, t), params), s);
                ASSERT_EQ(ReconstructWithoutSignal(nk2, params), s);
                ASSERT_EQ(ReconstructWithoutSignal(ok2, params), s);
                // With k2 shares both paths agree.
                ASSERT_EQ(ReconstructWithSignal(ok2, od.public_params, Extract(opt, t), params),
                          ReconstructWithoutSignal(ok2, params));
              }
            }
          }
        }
      }
    }
  }
}

class HybridErrorTest : public ::testing::Test {
 protected:
  void SetUp() override {
    SeededRandom rng(Seed{}, "errors");
    key_ = Initialize(params_, Variant::kOptimal, rng);
    dealing_ = DealOptimal(key_, params_, FieldElement(params_.modulus, 3), 1, rng);
  }

  std::vector<Share> First(std::size_t count) const {
    return {dealing_.shares.begin(), dealing_.shares.begin() + count};
  }

  Params params_ = P(7, 2, 4, 5, 2, 2);
  MasterKey key_;
  Dealing dealing_;
};

TEST_F(HybridErrorTest, InsufficientShares) {
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(First(1), dealing_.public_params,
                                    Extract(key_, 1), params_);
            }),
            ErrorCode::kInsufficientShares);
  EXPECT_EQ(CodeOf([&] { ReconstructWithoutSignal(First(3), params_); }),
            ErrorCode::kInsufficientShares);
}

TEST_F(HybridErrorTest, MissingPublicParams) {
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(First(2), std::nullopt, Extract(key_, 1), params_);
            }),
            ErrorCode::kMissingPublicParams);
  PublicParams truncated = dealing_.public_params;
  truncated.values.pop_back();
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(First(2), truncated, Extract(key_, 1), params_);
            }),
            ErrorCode::kMissingPublicParams);
}

TEST_F(HybridErrorTest, TimeMismatch) {
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(First(2), dealing_.public_params,
                                    Extract(key_, 2), params_);
            }),
            ErrorCode::kTimeMismatch);
  PublicParams stale = dealing_.public_params;
  stale.time = 2;
    EXPECT_EQ(CodeOf([&] { ReconstructWithSignal(First(2), stale, Extract(key_, 1), params_); }),
            ErrorCode::kTimeMismatch);
}

TEST_F(HybridErrorTest, CapacityExceeded) {
  SeededRandom rng(Seed{}, "cap");
  const Params wide = P(7, 1, 4, 5, 2, 2);
  const MasterKey small = Initialize(wide, Variant::kOptimal, rng);
  EXPECT_EQ(CodeOf([&] {
              DealOptimal(small, wide, FieldElement(wide.modulus, 1), 1, rng);
            }),
            ErrorCode::kCapacityExceeded);
  TimeSignal short_signal = Extract(key_, 1);
  short_signal.values.pop_back();
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(First(2), dealing_.public_params, short_signal,
                                    params_);
            }),
            ErrorCode::kCapacityExceeded);
}

TEST_F(HybridErrorTest, DuplicateShare) {
  std::vector<Share> dup = {dealing_.shares[0], dealing_.shares[0]};
  EXPECT_EQ(CodeOf([&] {
              ReconstructWithSignal(dup, dealing_.public_params, Extract(key_, 1),
                                    params_);
            }),
            ErrorCode::kDuplicateShare);
}

TEST_F(HybridErrorTest, VariantMismatch) {
  SeededRandom rng(Seed{}, "variant");
  const MasterKey naive = Initialize(params_, Variant::kNaive, rng);
  auto shares = DealNaive(naive, params_, FieldElement(params_.modulus, 1), 1, rng);
  std::vector<Share> mixed = {shares[0], dealing_.shares[1]};
  EXPECT_EQ(CodeOf([&] { ReconstructWithoutSignal(mixed, params_); }),
            ErrorCode::kInvalidParams);
}

}  // namespace
}  // namespace trss::hybrid
