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

#include "trss/oracle.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "trss/errors.h"
#include "trss/field.h"
#include "trss/hybrid_scheme.h"
#include "trss/kn_scheme.h"
#include "trss/random.h"

namespace trss::oracle {
namespace {

constexpr unsigned kMaxOracleParticipants = 6;
constexpr std::uint64_t kParallelThreshold = 1 << 16;

using u128 = unsigned __int128;

struct Thresholds {
  unsigned k1;
  unsigned k2;
};

// Thresholds the (possibly mutated) dealer actually uses.
Thresholds DealerThresholds(const SchemeDescriptor& d) {
  if (d.mutation != Mutation::kReducedDegree) return {d.k1, d.k2};
  switch (d.scheme) {
    case Scheme::kKn:
      return {d.k1 - 1, d.k2 - 1};
    case Scheme::kHybridNaive:
      return {d.k1 > 1 ? d.k1 - 1 : d.k1, d.k2 - 1};
    case Scheme::kHybridOptimal:
      return {std::min(d.k1, d.k2 - 1), d.k2 - 1};
  }
  return {d.k1, d.k2};
}

std::uint64_t Pack(std::span<const FieldElement> values, std::uint64_t q) {
  u128 acc = 0;
  u128 scale = 1;
  for (const FieldElement& v : values) {
    acc += scale * v.value();
    scale *= q;
    if (acc >> 64 || (scale >> 64 && &v != &values.back())) {
      throw Error(ErrorCode::kEnumerationTooLarge,
                  "variable does not pack into 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t PowChecked(std::uint64_t base, unsigned exp) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc >> 64) return 0;
  }
  return static_cast<std::uint64_t>(acc);
}

void Digits(std::uint64_t index, std::uint64_t q, std::vector<std::uint64_t>& out) {
  for (std::uint64_t& d : out) {
    d = index % q;
    index /= q;
  }
}

// Derived variables of one world in the row layout
// [S, U_1..U_n, TI_1..TI_tau, SK, PUB].
std::vector<std::uint64_t> DeriveRow(const SchemeDescriptor& d, unsigned t,
                                     const World& w) {
  const FieldModulus field(d.q);
  const FieldElement secret(field, w.secret);
  const Thresholds dealer = DealerThresholds(d);
  ReplayRandom key_rng(w.key);
  ReplayRandom coin_rng(w.coins);

  std::vector<std::uint64_t> row;
  row.reserve(1 + d.n + d.tau + 2);
  row.push_back(w.secret);

  if (d.scheme == Scheme::kKn) {
    const kn::Params params{field, dealer.k1, d.n, d.tau};
    kn::MasterKey key = kn::Initialize(params, key_rng);
    if (d.mutation == Mutation::kConstantTimeKeys) {
      std::fill(key.r.begin(), key.r.end(), key.r.front());
    }
    for (const kn::Share& s : kn::Deal(key, params, secret, t, coin_rng)) {
      row.push_back(s.value.value());
    }
    for (unsigned tt = 1; tt <= d.tau; ++tt) {
      row.push_back(kn::Extract(key, tt).value.value());
    }
    row.push_back(Pack(key.r, d.q));
    row.push_back(0);
    return row;
  }

  const hybrid::Variant variant = d.scheme == Scheme::kHybridNaive
                                      ? hybrid::Variant::kNaive
                                      : hybrid::Variant::kOptimal;
  const hybrid::Params params{field, dealer.k1, dealer.k2, d.n, d.tau, d.ell};
  hybrid::MasterKey key = hybrid::Initialize(params, variant, key_rng);
  if (d.mutation == Mutation::kConstantTimeKeys) {
    for (unsigned tt = 2; tt <= key.tau; ++tt) {
      for (unsigned i = 1; i <= key.ell; ++i) {
        key.entries[(tt - 1) * key.ell + (i - 1)] = key.at(1, i);
      }
    }
  }
  hybrid::Dealing dealing;
  if (variant == hybrid::Variant::kNaive) {
    dealing.shares = hybrid::DealNaive(key, params, secret, t, coin_rng);
  } else {
    dealing = hybrid::DealOptimal(key, params, secret, t, coin_rng);
    if (d.mutation == Mutation::kUnmaskedPublic) {
      for (std::size_t i = 0; i < dealing.public_params.values.size(); ++i) {
        dealing.public_params.values[i] -= key.at(t, static_cast<unsigned>(i + 1));
      }
    }
  }
  for (const hybrid::Share& s : dealing.shares) row.push_back(Pack(s.values, d.q));
  for (unsigned tt = 1; tt <= d.tau; ++tt) {
    row.push_back(Pack(hybrid::Extract(key, tt).values, d.q));
  }
  row.push_back(Pack(key.entries, d.q));
  row.push_back(Pack(dealing.public_params.values, d.q));
  return row;
}

// All subsets of {1..n} with size in [lo, hi], by size then lexicographically.
std::vector<std::vector<unsigned>> Coalitions(unsigned n, unsigned lo, unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned size = lo; size <= hi && size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<unsigned> members;
      for (unsigned i = 0; i < n; ++i) {
        if (pick[i]) members.push_back(i + 1);
      }
      out.push_back(std::move(members));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

std::string_view SchemeName(Scheme s) {
  switch (s) {
    case Scheme::kKn:
      return "kn";
    case Scheme::kHybridNaive:
      return "hybrid-naive";
    case Scheme::kHybridOptimal:
      return "hybrid-optimal";
  }
  return "unknown";
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  for (Scheme s : {Scheme::kKn, Scheme::kHybridNaive, Scheme::kHybridOptimal}) {
    if (SchemeName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view MutationName(Mutation m) {
  switch (m) {
    case Mutation::kNone:
      return "none";
    case Mutation::kConstantTimeKeys:
      return "constant-time-keys";
    case Mutation::kReducedDegree:
      return "reduced-degree";
    case Mutation::kUnmaskedPublic:
      return "unmasked-public";
  }
  return "unknown";
}

std::optional<Mutation> ParseMutation(std::string_view name) {
  for (Mutation m : {Mutation::kNone, Mutation::kConstantTimeKeys,
                     Mutation::kReducedDegree, Mutation::kUnmaskedPublic}) {
    if (MutationName(m) == name) return m;
  }
  return std::nullopt;
}

SchemeDescriptor SchemeDescriptor::Kn(std::uint64_t q, unsigned k, unsigned n,
                                      unsigned tau) {
  return {Scheme::kKn, q, k, k, n, tau, 0, Mutation::kNone};
}

SchemeDescriptor SchemeDescriptor::HybridNaive(std::uint64_t q, unsigned k1,
                                               unsigned k2, unsigned n,
                                               unsigned tau) {
  return {Scheme::kHybridNaive, q, k1, k2, n, tau, 0, Mutation::kNone};
}

SchemeDescriptor SchemeDescriptor::HybridOptimal(std::uint64_t q, unsigned k1,
                                                 unsigned k2, unsigned n,
                                                 unsigned tau, unsigned ell) {
  return {Scheme::kHybridOptimal, q, k1, k2, n, tau, ell, Mutation::kNone};
}

void SchemeDescriptor::Validate() const {
  const FieldModulus field(q);
  if (scheme == Scheme::kKn) {
    if (k1 != k2) {
      throw Error(ErrorCode::kInvalidParams, "kn descriptor needs k1 == k2");
    }
    kn::Params{field, k1, n, tau}.Validate();
  } else {
    hybrid::Params{field, k1, k2, n, tau, ell}.Validate();
    if (scheme == Scheme::kHybridOptimal && k2 - k1 > ell) {
      throw Error(ErrorCode::kCapacityExceeded,
                  "k2 - k1 = " + std::to_string(k2 - k1) + " exceeds ell = " +
                      std::to_string(ell));
    }
  }
  if (n > kMaxOracleParticipants) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "oracle runs are limited to n <= " +
                    std::to_string(kMaxOracleParticipants));
  }
  const bool applicable = [&] {
    switch (mutation) {
      case Mutation::kNone:
      case Mutation::kConstantTimeKeys:
        return true;
      case Mutation::kReducedDegree:
        return k2 >= 2;
      case Mutation::kUnmaskedPublic:
        return scheme == Scheme::kHybridOptimal && k2 > k1;
    }
    return false;
  }();
  if (!applicable) {
    throw Error(ErrorCode::kInvalidParams,
                "mutation " + std::string(MutationName(mutation)) +
                    " does not apply to these parameters");
  }
}

unsigned SchemeDescriptor::KeyDimensions() const {
  return scheme == Scheme::kHybridOptimal ? tau * ell : tau;
}

unsigned SchemeDescriptor::CoinDimensions() const {
  const Thresholds dealer = DealerThresholds(*this);
  switch (scheme) {
    case Scheme::kKn:
      return dealer.k1 - 1;
    case Scheme::kHybridNaive:
      return (dealer.k1 - 1) + (dealer.k2 - 1);
    case Scheme::kHybridOptimal:
      return dealer.k2 - 1;
  }
  return 0;
}

SecretDistribution SecretDistribution::Uniform(std::uint64_t q) {
  return {std::vector<std::uint64_t>(q, 1)};
}

std::uint64_t SecretDistribution::total() const {
  u128 sum = 0;
  for (std::uint64_t w : weights) sum += w;
  if (sum >> 64) throw Error(ErrorCode::kInvalidParams, "weights overflow");
  return static_cast<std::uint64_t>(sum);
}

std::size_t SecretDistribution::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](auto w) { return w > 0; }));
}

double SecretDistribution::Entropy() const {
  const auto sum = static_cast<long double>(total());
  long double h = 0.0L;
  for (std::uint64_t w : weights) {
    if (w == 0) continue;
    const long double p = static_cast<long double>(w) / sum;
    h -= p * std::log2(p);
  }
  return static_cast<double>(h);
}

std::string Selector::Name() const {
  switch (kind) {
    case Kind::kSecret:
      return "S";
    case Kind::kShare:
      return "U" + std::to_string(index);
    case Kind::kSignal:
      return "TI" + std::to_string(index);
    case Kind::kMasterKey:
      return "SK";
    case Kind::kPublic:
      return "PUB";
  }
  return "?";
}

WorldEnumeration::WorldEnumeration(SchemeDescriptor descriptor, unsigned time)
    : descriptor_(descriptor),
      time_(time),
      joint_(1 + descriptor.n + descriptor.tau + 2) {}

std::size_t WorldEnumeration::VariableIndex(const Selector& s) const {
  const unsigned n = descriptor_.n;
  const unsigned tau = descriptor_.tau;
  switch (s.kind) {
    case Selector::Kind::kSecret:
      return 0;
    case Selector::Kind::kShare:
      if (s.index >= 1 && s.index <= n) return s.index;
      break;
    case Selector::Kind::kSignal:
      if (s.index >= 1 && s.index <= tau) return n + s.index;
      break;
    case Selector::Kind::kMasterKey:
      return n + tau + 1;
    case Selector::Kind::kPublic:
      return n + tau + 2;
  }
  throw Error(ErrorCode::kUnknownSelector, "no variable " + s.Name());
}

double WorldEnumeration::ConditionalEntropy(const Selector& target,
                                            std::span<const Selector> given) const {
  const std::size_t target_index = VariableIndex(target);
  std::vector<std::size_t> given_index;
  for (const Selector& s : given) given_index.push_back(VariableIndex(s));
  return joint_.ConditionalEntropy({&target_index, 1}, given_index);
}

bool WorldEnumeration::Determines(std::span<const Selector> given,
                                  const Selector& target) const {
  const std::size_t target_index = VariableIndex(target);
  std::vector<std::size_t> given_index;
  for (const Selector& s : given) given_index.push_back(VariableIndex(s));
  return joint_.Determines(given_index, {&target_index, 1});
}

std::optional<std::uint64_t> CountWorlds(const SchemeDescriptor& d,
                                         const SecretDistribution& secrets) {
  const std::uint64_t per_secret = PowChecked(d.q, d.KeyDimensions() + d.CoinDimensions());
  if (per_secret == 0) return std::nullopt;
  const u128 count = static_cast<u128>(per_secret) * secrets.support_size();
  if (count >> 64) return std::nullopt;
  return static_cast<std::uint64_t>(count);
}

WorldEnumeration EnumerateWorlds(const SchemeDescriptor& descriptor, unsigned t,
                                 const SecretDistribution& secrets,
                                 std::uint64_t cap) {
  descriptor.Validate();
  if (t < 1 || t > descriptor.tau) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) +
                                            " outside [1, " +
                                            std::to_string(descriptor.tau) + "]");
  }
  if (secrets.weights.size() != descriptor.q || secrets.support_size() == 0) {
    throw Error(ErrorCode::kInvalidParams,
                "secret distribution needs q = " + std::to_string(descriptor.q) +
                    " weights with a nonzero entry");
  }
  const auto count = CountWorlds(descriptor, secrets);
  if (!count || *count > cap) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "enumeration exceeds the cap of " + std::to_string(cap) +
                    " worlds; use smaller q, n, tau or ell");
  }
  const std::uint64_t per_secret =
      PowChecked(descriptor.q, descriptor.KeyDimensions() + descriptor.CoinDimensions());
  const std::uint64_t key_space = PowChecked(descriptor.q, descriptor.KeyDimensions());
  const u128 denominator = static_cast<u128>(secrets.total()) * per_secret;
  if (denominator >> 64) {
    throw Error(ErrorCode::kEnumerationTooLarge, "weight denominator overflows");
  }

  std::vector<std::uint64_t> support;
  for (std::uint64_t s = 0; s < descriptor.q; ++s) {
    if (secrets.weights[s] > 0) support.push_back(s);
  }

  WorldEnumeration result(descriptor, t);
  result.denominator_ = static_cast<std::uint64_t>(denominator);
  result.worlds_.resize(*count);
  result.joint_.Resize(*count);

  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      World& w = result.worlds_[idx];
      w.secret = support[idx / per_secret];
      const std::uint64_t rest = idx % per_secret;
      w.key.resize(descriptor.KeyDimensions());
      w.coins.resize(descriptor.CoinDimensions());
      Digits(rest % key_space, descriptor.q, w.key);
      Digits(rest / key_space, descriptor.q, w.coins);
      w.weight = secrets.weights[w.secret];
      result.joint_.Set(idx, DeriveRow(descriptor, t, w), w.weight);
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (*count < kParallelThreshold || hw == 1) {
    fill(0, *count);
  } else {
    const std::uint64_t chunk = (*count + hw - 1) / hw;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(hw);
    for (unsigned i = 0; i < hw; ++i) {
      const std::uint64_t begin = std::min<std::uint64_t>(*count, i * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(*count, begin + chunk);
      workers.emplace_back([&, i, begin, end] {
        try {
          fill(begin, end);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (std::thread& th : workers) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  result.joint_.Finalize();
  return result;
}

EntropyReport CheckScheme(const SchemeDescriptor& d, std::optional<unsigned> t,
                          const SecretDistribution* secrets, std::uint64_t cap) {
  d.Validate();
  const SecretDistribution uniform = SecretDistribution::Uniform(d.q);
  const SecretDistribution& dist = secrets ? *secrets : uniform;

  EntropyReport report;
  report.descriptor = d;
  report.secret_entropy = dist.Entropy();
  report.uniform_secret = dist.support_size() == d.q &&
                          std::all_of(dist.weights.begin(), dist.weights.end(),
                                      [&](auto w) { return w == dist.weights[0]; });
  if (t) {
    report.times.push_back(*t);
  } else {
    for (unsigned tt = 1; tt <= d.tau; ++tt) report.times.push_back(tt);
  }

  const double hs = report.secret_entropy;
  const Selector secret = Selector::Secret();
  const bool is_hybrid = d.scheme != Scheme::kKn;

  auto view_of = [&](const std::vector<unsigned>& coalition) {
    std::vector<Selector> view;
    for (unsigned i : coalition) view.push_back(Selector::Share(i));
    if (is_hybrid) view.push_back(Selector::Public());
    return view;
  };
  auto describe = [](const std::vector<Selector>& view) {
    std::string out;
    for (const Selector& s : view) {
      if (!out.empty()) out += "+";
      out += s.Name();
    }
    return out.empty() ? std::string("{}") : out;
  };

  std::vector<bool> share_tight;
  std::optional<WorldEnumeration> first;
  for (unsigned time : report.times) {
    WorldEnumeration worlds = EnumerateWorlds(d, time, dist, cap);
    report.worlds_per_time = worlds.worlds().size();

    auto secrecy = [&](std::string name, unsigned lo, unsigned hi, auto extend) {
      for (const auto& coalition : Coalitions(d.n, lo, hi)) {
        std::vector<Selector> view = view_of(coalition);
        extend(view);
        const double h = worlds.ConditionalEntropy(secret, view);
        report.conditions.push_back({name, time, coalition, describe(view), h, hs,
                                     std::abs(h - hs) <= kEntropyTolerance});
      }
    };
    auto correctness = [&](std::string name, unsigned lo, unsigned hi,
                           bool with_signal, bool with_public) {
      for (const auto& coalition : Coalitions(d.n, lo, hi)) {
        std::vector<Selector> view;
        for (unsigned i : coalition) view.push_back(Selector::Share(i));
        if (with_public) view.push_back(Selector::Public());
        if (with_signal) view.push_back(Selector::Signal(time));
        const double h = worlds.ConditionalEntropy(secret, view);
        report.conditions.push_back({name, time, coalition, describe(view), h, 0.0,
                                     worlds.Determines(view, secret)});
      }
    };
    auto all_signals = [&](std::vector<Selector>& view) {
      for (unsigned tt = 1; tt <= d.tau; ++tt) view.push_back(Selector::Signal(tt));
    };
    auto other_signals = [&](std::vector<Selector>& view) {
      for (unsigned tt = 1; tt <= d.tau; ++tt) {
        if (tt != time) view.push_back(Selector::Signal(tt));
      }
    };
    auto master_key = [](std::vector<Selector>& view) {
      view.push_back(Selector::MasterKey());
    };
    if (!is_hybrid) {
      const unsigned k = d.k1;
      secrecy("secrecy(i)", 0, k - 1, all_signals);
      secrecy("timed-release(ii)", k, d.n, other_signals);
      secrecy("ts-collusion(iii)", 0, k - 1, master_key);
      correctness("correctness", k, d.n, true, false);
    } else {
      secrecy("secrecy(i)", 0, d.k1 - 1, all_signals);
      if (d.k2 > d.k1) {
        secrecy("timed-release(ii)", d.k1, d.k2 - 1, other_signals);
        correctness("correctness-with-signal", d.k1, d.k2 - 1, true, true);
      }
      correctness("correctness-without-signal", d.k2, d.n, false, false);
    }

    for (unsigned i = 1; i <= d.n; ++i) {
      const double h = worlds.Entropy(Selector::Share(i));
      const unsigned elements = d.scheme == Scheme::kHybridNaive ? 2 : 1;
      const bool tight = std::abs(h - hs) <= kEntropyTolerance;
      share_tight.push_back(tight);
      report.sizes.push_back({"share", i, elements, 1u, h, hs,
                              h >= hs - kEntropyTolerance, tight});
    }
    if (!first) first.emplace(std::move(worlds));
  }

  // Signal and key distributions do not depend on the dealing time.
  const bool bounds_apply =
      !is_hybrid || std::all_of(share_tight.begin(), share_tight.end(),
                                [](bool b) { return b; });
  const unsigned signal_bound = is_hybrid ? d.k2 - d.k1 : 1;
  const unsigned signal_elements = d.scheme == Scheme::kHybridOptimal ? d.ell : 1;
  for (unsigned tt = 1; tt <= d.tau; ++tt) {
    const double h = first->Entropy(Selector::Signal(tt));
    SizeCheck row{"signal", tt, signal_elements, std::nullopt, h, std::nullopt, true, false};
    if (bounds_apply) {
      const double bound = signal_bound * hs;
      row.bound_elements = signal_bound;
      row.bound_bits = bound;
      row.meets_bound = h >= bound - kEntropyTolerance;
      row.tight = std::abs(h - bound) <= kEntropyTolerance;
    }
    report.sizes.push_back(row);
  }
  {
    const double h = first->Entropy(Selector::MasterKey());
    SizeCheck row{"master-key", 0, d.tau * signal_elements, std::nullopt, h,
                  std::nullopt, true, false};
    if (bounds_apply) {
      const double bound = d.tau * signal_bound * hs;
      row.bound_elements = d.tau * signal_bound;
      row.bound_bits = bound;
      row.meets_bound = h >= bound - kEntropyTolerance;
      row.tight = std::abs(h - bound) <= kEntropyTolerance;
    }
    report.sizes.push_back(row);
  }
  return report;
}

TreReport CheckTreDemo(std::uint64_t q, unsigned tau, unsigned t, std::uint64_t cap) {
  const FieldModulus field(q);
  const kn::Params params{field, 1, 1, tau};
  params.Validate();
  if (t < 1 || t > tau) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) +
                                            " outside [1, " + std::to_string(tau) + "]");
  }
  const std::uint64_t count = PowChecked(q, 3 + tau);
  if (count == 0 || count > cap) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "TRE enumeration exceeds the cap of " + std::to_string(cap));
  }

  // Variables: M, K, C, U, TI_1..TI_tau.
  enum : std::size_t { kM = 0, kK = 1, kC = 2, kU = 3, kTI = 4 };
  JointDistribution joint(4 + tau);
  bool recovery_exact = true;
  std::vector<std::uint64_t> digits(3 + tau);
  std::vector<std::uint64_t> row(4 + tau);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Digits(idx, q, digits);
    const FieldElement m(field, digits[0]);
    const FieldElement pad(field, digits[1]);
    const FieldElement r(field, digits[2]);
    ReplayRandom key_rng(std::vector<std::uint64_t>(digits.begin() + 3, digits.end()));
    ReplayRandom no_coins({});
    const kn::MasterKey key = kn::Initialize(params, key_rng);
    const kn::Share share = kn::Deal(key, params, r, t, no_coins).front();
    const FieldElement ciphertext = m + r + pad;

    const kn::TimeSignal signal = kn::Extract(key, t);
    const FieldElement recovered =
        ciphertext - pad - kn::Reconstruct({&share, 1}, signal, params);
    recovery_exact = recovery_exact && recovered == m;

    row[kM] = m.value();
    row[kK] = pad.value();
    row[kC] = ciphertext.value();
    row[kU] = share.value.value();
    for (unsigned tt = 1; tt <= tau; ++tt) row[kTI + tt - 1] = key.r[tt - 1].value();
    joint.Add(row, 1);
  }

  const std::size_t message[] = {kM};
  std::vector<std::size_t> pre_signal = {kC, kK, kU};
  std::vector<std::size_t> eavesdropper = {kC};
  for (unsigned tt = 1; tt <= tau; ++tt) {
    if (tt != t) pre_signal.push_back(kTI + tt - 1);
    eavesdropper.push_back(kTI + tt - 1);
  }
  const std::vector<std::size_t> post_signal = {kC, kK, kU, kTI + t - 1};

  TreReport report;
  report.q = q;
  report.tau = tau;
  report.time = t;
  report.worlds = count;
  report.message_entropy = joint.Entropy(message);
  report.pre_signal_entropy = joint.ConditionalEntropy(message, pre_signal);
  report.eavesdropper_entropy = joint.ConditionalEntropy(message, eavesdropper);
  report.post_signal_determined = joint.Determines(post_signal, message);
  report.recovery_exact = recovery_exact;
  return report;
}

}  // namespace trss::oracle
