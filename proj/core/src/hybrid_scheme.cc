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

#include <string>

#include "share_selection.h"
#include "trss/errors.h"
#include "trss/poly.h"
#include "trss/random.h"

namespace trss::hybrid {
namespace {

std::size_t ValuesPerShare(Variant v) { return v == Variant::kNaive ? 2 : 1; }

void RequireKeyMatches(const MasterKey& key, const Params& params,
                       Variant variant) {
  if (key.variant != variant) {
    throw Error(ErrorCode::kInvalidParams,
                std::string("master key is for the ") +
                    std::string(VariantName(key.variant)) + " variant");
  }
  if (key.tau != params.tau) {
    throw Error(ErrorCode::kInvalidParams, "master key tau differs from params");
  }
}

// Validates shares and returns the selected ones, first `threshold` by id.
std::vector<const Share*> Select(std::span<const Share> shares,
                                 std::size_t threshold, const Params& params) {
  std::vector<internal::ShareRef> refs;
  refs.reserve(shares.size());
  for (const Share& s : shares) {
    if (s.variant != shares.front().variant ||
        s.values.size() != ValuesPerShare(s.variant)) {
      throw Error(ErrorCode::kInvalidParams,
                  "share of participant " + std::to_string(s.participant) +
                      " does not match the variant of the others");
    }
    refs.push_back({s.participant, s.time});
  }
  const auto chosen = internal::SelectShares(refs, threshold, params.n);
  std::vector<const Share*> out;
  out.reserve(chosen.size());
  for (std::size_t idx : chosen) out.push_back(&shares[idx]);
  return out;
}

FieldElement InterpolateComponent(const std::vector<const Share*>& shares,
                                  std::size_t component, const Params& params) {
  std::vector<Point> points;
  points.reserve(shares.size());
  for (const Share* s : shares) {
    points.push_back({FieldElement(params.modulus, s->participant),
                      s->values[component]});
  }
  return InterpolateAtZero(points);
}

}  // namespace

std::string_view VariantName(Variant v) {
  return v == Variant::kNaive ? "hybrid-naive" : "hybrid-optimal";
}

void Params::Validate() const {
  const std::uint64_t q = modulus.value();
  if (k1 < 1) throw Error(ErrorCode::kInvalidParams, "threshold k1 must be >= 1");
  if (k1 > k2) {
    throw Error(ErrorCode::kInvalidParams,
                "need k1 <= k2; k1 = " + std::to_string(k1) +
                    ", k2 = " + std::to_string(k2));
  }
  if (k2 > n) {
    throw Error(ErrorCode::kInvalidParams,
                "threshold k2 = " + std::to_string(k2) + " exceeds n = " +
                    std::to_string(n));
  }
  if (tau < 1) throw Error(ErrorCode::kInvalidParams, "tau must be >= 1");
  if (q <= n || q <= tau) {
    throw Error(ErrorCode::kInvalidParams,
                "need q > max(n, tau); q = " + std::to_string(q) +
                    ", n = " + std::to_string(n) +
                    ", tau = " + std::to_string(tau));
  }
}

MasterKey Initialize(const Params& params, Variant variant, RandomSource& rng) {
  params.Validate();
  MasterKey key{variant, params.tau,
                variant == Variant::kNaive ? 1u : params.ell, {}};
  const std::size_t count = static_cast<std::size_t>(key.tau) * key.ell;
  key.entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    key.entries.push_back(RandomElement(params.modulus, rng));
  }
  return key;
}

std::vector<Share> DealNaive(const MasterKey& key, const Params& params,
                             const FieldElement& secret, unsigned t,
                             RandomSource& rng) {
  params.Validate();
  RequireKeyMatches(key, params, Variant::kNaive);
  internal::RequireTimeInRange(t, params.tau);
  const Polynomial timed = Polynomial::Random(secret + key.at(t, 1), params.k1 - 1, rng);
  const Polynomial plain = Polynomial::Random(secret, params.k2 - 1, rng);
  std::vector<Share> shares;
  shares.reserve(params.n);
  for (unsigned i = 1; i <= params.n; ++i) {
    const FieldElement x(params.modulus, i);
    shares.push_back({Variant::kNaive, i, t, {timed.Evaluate(x), plain.Evaluate(x)}});
  }
  return shares;
}

Dealing DealOptimal(const MasterKey& key, const Params& params,
                    const FieldElement& secret, unsigned t, RandomSource& rng) {
  params.Validate();
  RequireKeyMatches(key, params, Variant::kOptimal);
  internal::RequireTimeInRange(t, params.tau);
  const unsigned masked = params.k2 - params.k1;
  if (masked > key.ell) {
    throw Error(ErrorCode::kCapacityExceeded,
                "k2 - k1 = " + std::to_string(masked) + " exceeds ell = " +
                    std::to_string(key.ell));
  }
  const Polynomial f = Polynomial::Random(secret, params.k2 - 1, rng);

  Dealing dealing;
  dealing.shares.reserve(params.n);
  for (unsigned i = 1; i <= params.n; ++i) {
    dealing.shares.push_back(
        {Variant::kOptimal, i, t, {f.Evaluate(FieldElement(params.modulus, i))}});
  }
  dealing.public_params.time = t;
  for (unsigned i = 1; i <= masked; ++i) {
    dealing.public_params.values.push_back(f.coefficient(params.k1 - 1 + i) +
                                           key.at(t, i));
  }
  return dealing;
}

TimeSignal Extract(const MasterKey& key, unsigned t) {
  internal::RequireTimeInRange(t, key.tau);
  TimeSignal signal{t, {}};
  signal.values.reserve(key.ell);
  for (unsigned i = 1; i <= key.ell; ++i) signal.values.push_back(key.at(t, i));
  return signal;
}

FieldElement ReconstructWithSignal(std::span<const Share> shares,
                                   const std::optional<PublicParams>& public_params,
                                   const TimeSignal& signal,
                                   const Params& params) {
  params.Validate();
  const auto chosen = Select(shares, params.k1, params);
  const unsigned t = chosen.front()->time;
  if (signal.time != t) {
    throw Error(ErrorCode::kTimeMismatch,
                "signal for time " + std::to_string(signal.time) +
                    ", shares for time " + std::to_string(t));
  }

  if (chosen.front()->variant == Variant::kNaive) {
    if (signal.values.size() != 1) {
      throw Error(ErrorCode::kInvalidParams, "naive signal carries one element");
    }
    return InterpolateComponent(chosen, 0, params) - signal.values.front();
  }

  const unsigned masked = params.k2 - params.k1;
  std::vector<FieldElement> g(params.k2, FieldElement::Zero(params.modulus));
  if (masked > 0) {
    if (!public_params) {
      throw Error(ErrorCode::kMissingPublicParams,
                  "k2 > k1 requires the dealing's public parameters");
    }
    if (public_params->time != t) {
      throw Error(ErrorCode::kTimeMismatch,
                  "public parameters for time " +
                      std::to_string(public_params->time) +
                      ", shares for time " + std::to_string(t));
    }
    if (public_params->values.size() != masked) {
      throw Error(ErrorCode::kMissingPublicParams,
                  "expected " + std::to_string(masked) +
                      " public values, got " +
                      std::to_string(public_params->values.size()));
    }
    if (signal.values.size() < masked) {
      throw Error(ErrorCode::kCapacityExceeded,
                  "signal carries " + std::to_string(signal.values.size()) +
                      " elements, k2 - k1 = " + std::to_string(masked));
    }
    for (unsigned i = 1; i <= masked; ++i) {
      g[params.k1 - 1 + i] = public_params->values[i - 1] - signal.values[i - 1];
    }
  }
  const Polynomial unmasked(std::move(g));

  std::vector<Point> points;
  points.reserve(chosen.size());
  for (const Share* s : chosen) {
    const FieldElement x(params.modulus, s->participant);
    points.push_back({x, s->values.front() - unmasked.Evaluate(x)});
  }
  return InterpolateAtZero(points);
}

FieldElement ReconstructWithoutSignal(std::span<const Share> shares,
                                      const Params& params) {
  params.Validate();
  const auto chosen = Select(shares, params.k2, params);
  // Naive shares keep the plain Shamir component second.
  const std::size_t component = chosen.front()->variant == Variant::kNaive ? 1 : 0;
  return InterpolateComponent(chosen, component, params);
}

}  // namespace trss::hybrid
