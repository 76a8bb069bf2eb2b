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

#ifndef TRSS_KN_SCHEME_H_
#define TRSS_KN_SCHEME_H_

#include <span>
#include <vector>

#include "trss/field.h"

namespace trss {

class RandomSource;

namespace kn {

// (k,n) timed-release secret sharing.
//
// A trusted initializer hands the dealer and the time server a master key
// holding one uniform field element r(t) per time period. The dealer shares
// s + r(t) with a degree k-1 polynomial; at time t the server broadcasts
// r(t), after which any k participants interpolate and subtract it. Fewer
// than k participants learn nothing even holding every signal, and any
// coalition learns nothing without the signal for t.
//
// Participant i is evaluated at the field element i; times are 1-based
// indices into the master key. The entropy guarantees are for one secret per
// master key and time; the API does not stop a caller from reusing a key.

struct Params {
  FieldModulus modulus;
  unsigned k;
  unsigned n;
  unsigned tau;

  // Throws Error(kInvalidParams) naming the violated constraint unless
  // 1 <= k <= n < q and 1 <= tau < q.
  void Validate() const;
};

struct MasterKey {
  std::vector<FieldElement> r;  // r[t-1] is the key for time t

  unsigned tau() const noexcept { return static_cast<unsigned>(r.size()); }
};

struct Share {
  unsigned participant;
  unsigned time;
  FieldElement value;
};

struct TimeSignal {
  unsigned time;
  FieldElement value;
};

// Draws tau i.i.d. uniform keys, in time order.
MasterKey Initialize(const Params& params, RandomSource& rng);

// Returns the n shares of `secret` for time t. Draws the k-1 non-constant
// coefficients from `rng` in order of increasing power.
std::vector<Share> Deal(const MasterKey& key, const Params& params,
                        const FieldElement& secret, unsigned t,
                        RandomSource& rng);

TimeSignal Extract(const MasterKey& key, unsigned t);

// Interpolates over the first k shares by participant id and removes the
// time key. Errors: kInsufficientShares, kTimeMismatch, kDuplicateShare.
FieldElement Reconstruct(std::span<const Share> shares,
                         const TimeSignal& signal, const Params& params);

}  // namespace kn
}  // namespace trss

#endif  // TRSS_KN_SCHEME_H_
