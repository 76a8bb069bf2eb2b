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

#ifndef TRSS_ORACLE_H_
#define TRSS_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trss/joint_distribution.h"

namespace trss::oracle {

// Exhaustive verifier for the timed-release schemes. For tiny parameters it
// enumerates every (secret, master key, dealer coefficients) assignment,
// runs the real scheme operations on each, and measures exact conditional
// entropies of the secret given each coalition's view.

enum class Scheme { kKn, kHybridNaive, kHybridOptimal };

// Canned dealer/server faults used to show the checks have teeth.
enum class Mutation {
  kNone,
  kConstantTimeKeys,  // every r(t) replaced by r(1)
  kReducedDegree,     // dealer polynomials one degree short
  kUnmaskedPublic,    // hybrid-optimal publishes the raw coefficients
};

std::string_view SchemeName(Scheme s);
std::optional<Scheme> ParseScheme(std::string_view name);
std::string_view MutationName(Mutation m);
std::optional<Mutation> ParseMutation(std::string_view name);

struct SchemeDescriptor {
  Scheme scheme = Scheme::kKn;
  std::uint64_t q = 3;
  unsigned k1 = 1;  // k for kKn
  unsigned k2 = 1;  // equals k1 for kKn
  unsigned n = 1;
  unsigned tau = 1;
  unsigned ell = 0;  // kHybridOptimal only
  Mutation mutation = Mutation::kNone;

  static SchemeDescriptor Kn(std::uint64_t q, unsigned k, unsigned n, unsigned tau);
  static SchemeDescriptor HybridNaive(std::uint64_t q, unsigned k1, unsigned k2,
                                      unsigned n, unsigned tau);
  static SchemeDescriptor HybridOptimal(std::uint64_t q, unsigned k1, unsigned k2,
                                        unsigned n, unsigned tau, unsigned ell);

  // Validates against the scheme's own parameter rules, the k2 - k1 <= ell
  // capacity, and the oracle's n <= 6 limit.
  void Validate() const;

  // Secret-key elements and free dealer coefficients enumerated per world.
  unsigned KeyDimensions() const;
  unsigned CoinDimensions() const;
};

// Integer weights over GF(q); the secret distribution is weights / sum.
struct SecretDistribution {
  std::vector<std::uint64_t> weights;

  static SecretDistribution Uniform(std::uint64_t q);
  std::uint64_t total() const;
  std::size_t support_size() const;
  double Entropy() const;
};

// A variable materialized in an enumeration.
struct Selector {
  enum class Kind { kSecret, kShare, kSignal, kMasterKey, kPublic };
  Kind kind;
  unsigned index = 0;  // participant for kShare, time for kSignal

  static Selector Secret() { return {Kind::kSecret, 0}; }
  static Selector Share(unsigned participant) { return {Kind::kShare, participant}; }
  static Selector Signal(unsigned t) { return {Kind::kSignal, t}; }
  static Selector MasterKey() { return {Kind::kMasterKey, 0}; }
  static Selector Public() { return {Kind::kPublic, 0}; }

  std::string Name() const;
};

struct World {
  std::uint64_t secret;
  std::vector<std::uint64_t> key;    // master-key assignment, draw order
  std::vector<std::uint64_t> coins;  // dealer coefficients, draw order
  std::uint64_t weight;              // numerator over denominator()
};

inline constexpr std::uint64_t kDefaultWorldCap = 10'000'000;

class WorldEnumeration {
 public:
  const SchemeDescriptor& descriptor() const noexcept { return descriptor_; }
  unsigned time() const noexcept { return time_; }
  const std::vector<World>& worlds() const noexcept { return worlds_; }
  const JointDistribution& joint() const noexcept { return joint_; }

  // Common denominator of the world weights.
  std::uint64_t denominator() const noexcept { return denominator_; }
  bool WeightsSumToOne() const { return joint_.total_weight() == denominator_; }

  // Throws Error(kUnknownSelector) for a participant or time out of range.
  std::size_t VariableIndex(const Selector& selector) const;

  double ConditionalEntropy(const Selector& target,
                            std::span<const Selector> given) const;
  double Entropy(const Selector& variable) const {
    return ConditionalEntropy(variable, {});
  }
  bool Determines(std::span<const Selector> given, const Selector& target) const;

 private:
  friend WorldEnumeration EnumerateWorlds(const SchemeDescriptor&, unsigned,
                                          const SecretDistribution&,
                                          std::uint64_t);
  WorldEnumeration(SchemeDescriptor descriptor, unsigned time);

  SchemeDescriptor descriptor_;
  unsigned time_;
  std::vector<World> worlds_;
  JointDistribution joint_;
  std::uint64_t denominator_ = 0;
};

// Number of worlds |support(S)| * q^key_dims * q^coin_dims, or nullopt if it
// overflows 64 bits.
std::optional<std::uint64_t> CountWorlds(const SchemeDescriptor& descriptor,
                                         const SecretDistribution& secrets);

// Complete enumeration for a dealing at time t. Throws
// Error(kEnumerationTooLarge) when the world count exceeds `cap`.
WorldEnumeration EnumerateWorlds(const SchemeDescriptor& descriptor, unsigned t,
                                 const SecretDistribution& secrets,
                                 std::uint64_t cap = kDefaultWorldCap);

inline constexpr double kEntropyTolerance = 1e-9;

struct ConditionCheck {
  std::string condition;  // e.g. "secrecy(i)"
  unsigned time;
  std::vector<unsigned> coalition;
  std::string view;
  double entropy_bits;
  double expected_bits;
  bool pass;
};

struct SizeCheck {
  std::string quantity;  // "share", "signal", "master-key"
  unsigned index;        // participant / time; 0 for the key
  unsigned elements;
  std::optional<unsigned> bound_elements;
  double entropy_bits;
  std::optional<double> bound_bits;  // nullopt when the bound does not apply
  bool meets_bound;
  bool tight;
};

struct EntropyReport {
  SchemeDescriptor descriptor;
  std::vector<unsigned> times;
  std::uint64_t worlds_per_time = 0;
  double secret_entropy = 0.0;
  bool uniform_secret = true;
  std::vector<ConditionCheck> conditions;
  std::vector<SizeCheck> sizes;

  bool ConditionsPass() const;
  bool SizesMeetBounds() const;
  bool AllPass() const { return ConditionsPass() && SizesMeetBounds(); }
  // Every applicable size bound holds with equality.
  bool Optimal() const;
  // False if any check named `condition` failed; true if none ran.
  bool ConditionPassed(std::string_view condition) const;
  std::size_t CountChecks(std::string_view condition) const;

  // Line-oriented report ending in a `key = value` summary section.
  std::string ToText() const;
};

// Runs every security and correctness condition over all coalitions in the
// relevant size bands, for time t or (by default) for every t, plus the
// share / signal / key size bounds.
//
//   kKn:     secrecy(i)         |F| <= k-1,       U_F + all signals
//            timed-release(ii)  |A| >= k,         U_A + signals except t
//            ts-collusion(iii)  |F| <= k-1,       U_F + master key
//            correctness        |A| >= k,         U_A + signal t      (H = 0)
//   hybrid:  secrecy(i)         |F| <= k1-1,      U_F + public + all signals
//            timed-release(ii)  k1 <= |F| < k2,   U_F + public + signals except t
//            correctness-with-signal    k1 <= |A| < k2, U_A + public + signal t
//            correctness-without-signal |A| >= k2,      U_A
EntropyReport CheckScheme(const SchemeDescriptor& descriptor,
                          std::optional<unsigned> t = std::nullopt,
                          const SecretDistribution* secrets = nullptr,
                          std::uint64_t cap = kDefaultWorldCap);

// Timed-release encryption from a (1,1) scheme: C = M + r + K over GF(q),
// with r shared for time t and K pre-shared with the receiver.
struct TreReport {
  std::uint64_t q;
  unsigned tau;
  unsigned time;
  std::uint64_t worlds;
  double message_entropy;
  double pre_signal_entropy;    // H(M | C, K, share, signals except t)
  double eavesdropper_entropy;  // H(M | C, all signals)
  bool post_signal_determined;  // H(M | C, K, share, signal t) == 0
  bool recovery_exact;          // decryption returned M in every world

  bool pass() const;
  std::string ToText() const;
};

TreReport CheckTreDemo(std::uint64_t q, unsigned tau = 2, unsigned t = 1,
                       std::uint64_t cap = kDefaultWorldCap);

}  // namespace trss::oracle

#endif  // TRSS_ORACLE_H_
