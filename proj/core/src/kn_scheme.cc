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

#include "trss/kn_scheme.h"

#include <string>

#include "share_selection.h"
#include "trss/errors.h"
#include "trss/poly.h"
#include "trss/random.h"

namespace trss::kn {

void Params::Validate() const {
  const std::uint64_t q = modulus.value();
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "threshold k must be >= 1");
  if (k > n) {
    throw Error(ErrorCode::kInvalidParams,
                "threshold k = " + std::to_string(k) + " exceeds n = " +
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

MasterKey Initialize(const Params& params, RandomSource& rng) {
  params.Validate();
  MasterKey key;
  key.r.reserve(params.tau);
  for (unsigned t = 0; t < params.tau; ++t) {
    key.r.push_back(RandomElement(params.modulus, rng));
  }
  return key;
}

std::vector<Share> Deal(const MasterKey& key, const Params& params,
                        const FieldElement& secret, unsigned t,
                        RandomSource& rng) {
  params.Validate();
  internal::RequireTimeInRange(t, params.tau);
  if (key.tau() != params.tau) {
    throw Error(ErrorCode::kInvalidParams, "master key length differs from tau");
  }
  const Polynomial f = Polynomial::Random(secret + key.r[t - 1], params.k - 1, rng);
  std::vector<Share> shares;
  shares.reserve(params.n);
  for (unsigned i = 1; i <= params.n; ++i) {
    shares.push_back({i, t, f.Evaluate(FieldElement(params.modulus, i))});
  }
  return shares;
}

TimeSignal Extract(const MasterKey& key, unsigned t) {
  internal::RequireTimeInRange(t, key.tau());
  return {t, key.r[t - 1]};
}

FieldElement Reconstruct(std::span<const Share> shares,
                         const TimeSignal& signal, const Params& params) {
  params.Validate();
  std::vector<internal::ShareRef> refs;
  refs.reserve(shares.size());
  for (const Share& s : shares) refs.push_back({s.participant, s.time});
  const auto chosen = internal::SelectShares(refs, params.k, params.n);
  if (signal.time != shares.front().time) {
    throw Error(ErrorCode::kTimeMismatch,
                "signal for time " + std::to_string(signal.time) +
                    ", shares for time " + std::to_string(shares.front().time));
  }
  std::vector<Point> points;
  points.reserve(chosen.size());
  for (std::size_t idx : chosen) {
    points.push_back({FieldElement(params.modulus, shares[idx].participant),
                      shares[idx].value});
  }
  return InterpolateAtZero(points) - signal.value;
}

}  // namespace trss::kn
