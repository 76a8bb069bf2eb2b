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

#ifndef TRSS_HYBRID_SCHEME_H_
#define TRSS_HYBRID_SCHEME_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trss/field.h"

namespace trss {

class RandomSource;

namespace hybrid {

// (k1,k2,n) timed-release secret sharing: k1 shares plus the time signal,
// or k2 shares alone, recover the secret.
//
// kNaive pairs a (k1,n) timed-release sharing of s with a plain Shamir
// (k2,n) sharing of s, so every share is two field elements.
//
// kOptimal deals one polynomial f of degree k2-1 with f(0) = s and
// publishes the top k2-k1 coefficients masked by the time key row
// (r_1(t), ..., r_ell(t)). With the signal, participants strip those terms
// and interpolate the remaining degree k1-1 polynomial h. Requires
// k2 - k1 <= ell; share size is one element and the signal/key sizes meet
// the lower bounds exactly when k2 - k1 == ell.
enum class Variant { kNaive, kOptimal };

std::string_view VariantName(Variant v);

struct Params {
  FieldModulus modulus;
  unsigned k1;
  unsigned k2;
  unsigned n;
  unsigned tau;
  unsigned ell = 0;  // kOptimal only

  // 1 <= k1 <= k2 <= n < q and 1 <= tau < q. The k2 - k1 <= ell capacity
  // check happens when dealing (kCapacityExceeded).
  void Validate() const;
};

struct MasterKey {
  Variant variant;
  unsigned tau;
  unsigned ell;  // 1 for kNaive
  std::vector<FieldElement> entries;  // row-major tau x ell

  const FieldElement& at(unsigned t, unsigned i) const {
    return entries.at(static_cast<std::size_t>(t - 1) * ell + (i - 1));
  }
};

struct Share {
  Variant variant;
  unsigned participant;
  unsigned time;
  // kNaive: {f1(i), f2(i)} (timed component first); kOptimal: {f(i)}.
  std::vector<FieldElement> values;
};

struct TimeSignal {
  unsigned time;
  std::vector<FieldElement> values;  // kNaive: {r(t)}; kOptimal: r_1..r_ell
};

// Masked coefficients p_i = a_{k1-1+i} + r_i(t), i = 1..k2-k1. Public.
struct PublicParams {
  unsigned time;
  std::vector<FieldElement> values;
};

struct Dealing {
  std::vector<Share> shares;
  PublicParams public_params;  // empty for kNaive
};

// kNaive: tau keys; kOptimal: tau*ell keys, drawn row by row.
MasterKey Initialize(const Params& params, Variant variant, RandomSource& rng);

// f1 coefficients are drawn before f2 coefficients, each in increasing power.
std::vector<Share> DealNaive(const MasterKey& key, const Params& params,
                             const FieldElement& secret, unsigned t,
                             RandomSource& rng);

Dealing DealOptimal(const MasterKey& key, const Params& params,
                    const FieldElement& secret, unsigned t, RandomSource& rng);

TimeSignal Extract(const MasterKey& key, unsigned t);

// Needs k1 shares and the signal for their time. kOptimal additionally needs
// the public parameters of the dealing whenever k2 > k1
// (kMissingPublicParams); kNaive ignores them.
FieldElement ReconstructWithSignal(std::span<const Share> shares,
                                   const std::optional<PublicParams>& public_params,
                                   const TimeSignal& signal,
                                   const Params& params);

// Plain interpolation over k2 shares; never consults a signal.
FieldElement ReconstructWithoutSignal(std::span<const Share> shares,
                                      const Params& params);

}  // namespace hybrid
}  // namespace trss

#endif  // TRSS_HYBRID_SCHEME_H_
