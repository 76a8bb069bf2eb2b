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

#include <benchmark/benchmark.h>

#include <vector>

#include "trss/field.h"
#include "trss/hybrid_scheme.h"
#include "trss/kn_scheme.h"
#include "trss/oracle.h"
#include "trss/poly.h"
#include "trss/random.h"

namespace {

constexpr std::uint64_t kLargePrime = 18446744073709551557ull;

void BM_FieldMul(benchmark::State& state) {
  const trss::FieldModulus m(kLargePrime);
  trss::SeededRandom rng(trss::Seed{}, "bench");
  trss::FieldElement a = trss::RandomElement(m, rng);
  const trss::FieldElement b = trss::RandomElement(m, rng);
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
  const trss::FieldModulus m(kLargePrime);
  trss::SeededRandom rng(trss::Seed{}, "bench");
  const trss::FieldElement a = trss::RandomElement(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.Inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_InterpolateAtZero(benchmark::State& state) {
  const trss::FieldModulus m(kLargePrime);
  trss::SeededRandom rng(trss::Seed{}, "bench");
  const auto k = static_cast<unsigned>(state.range(0));
  const auto f = trss::Polynomial::Random(trss::FieldElement(m, 42), k - 1, rng);
  std::vector<trss::Point> points;
  for (unsigned i = 1; i <= k; ++i) {
    const trss::FieldElement x(m, i);
    points.push_back({x, f.Evaluate(x)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(trss::InterpolateAtZero(points));
}
BENCHMARK(BM_InterpolateAtZero)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_KnDealReconstruct(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const trss::kn::Params p{trss::FieldModulus(kLargePrime), n / 2 + 1, n, 16};
  trss::SeededRandom rng(trss::Seed{}, "bench");
  const auto key = trss::kn::Initialize(p, rng);
  const trss::FieldElement secret(p.modulus, 7);
  for (auto _ : state) {
    const auto shares = trss::kn::Deal(key, p, secret, 3, rng);
    benchmark::DoNotOptimize(trss::kn::Reconstruct(shares, trss::kn::Extract(key, 3), p));
  }
}
BENCHMARK(BM_KnDealReconstruct)->Arg(5)->Arg(50)->Arg(200);

void BM_HybridOptimalDealReconstruct(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const unsigned k1 = n / 4 + 1;
  const unsigned k2 = n / 2 + 1;
  const trss::hybrid::Params p{trss::FieldModulus(kLargePrime), k1, k2, n, 16, k2 - k1};
  trss::SeededRandom rng(trss::Seed{}, "bench");
  const auto key = trss::hybrid::Initialize(p, trss::hybrid::Variant::kOptimal, rng);
  const trss::FieldElement secret(p.modulus, 7);
  for (auto _ : state) {
    const auto dealing = trss::hybrid::DealOptimal(key, p, secret, 3, rng);
    benchmark::DoNotOptimize(trss::hybrid::ReconstructWithSignal(
        dealing.shares, dealing.public_params, trss::hybrid::Extract(key, 3), p));
  }
}
BENCHMARK(BM_HybridOptimalDealReconstruct)->Arg(8)->Arg(64);

void BM_OracleCheckKn(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trss::oracle::CheckScheme(trss::oracle::SchemeDescriptor::Kn(q, 2, 3, 2)));
  }
}
BENCHMARK(BM_OracleCheckKn)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_OracleEnumerateLarge(benchmark::State& state) {
  const auto d = trss::oracle::SchemeDescriptor::Kn(11, 3, 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trss::oracle::EnumerateWorlds(d, 1, trss::oracle::SecretDistribution::Uniform(11)));
  }
}
BENCHMARK(BM_OracleEnumerateLarge)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
