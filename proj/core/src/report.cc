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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "trss/oracle.h"

namespace trss::oracle {
namespace {

std::string Bits(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12f", value);
  return buf;
}

std::string Members(const std::vector<unsigned>& coalition) {
  std::string out = "{";
  for (std::size_t i = 0; i < coalition.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coalition[i]);
  }
  return out + "}";
}

}  // namespace

bool EntropyReport::ConditionsPass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionCheck& c) { return c.pass; });
}

bool EntropyReport::SizesMeetBounds() const {
  return std::all_of(sizes.begin(), sizes.end(),
                     [](const SizeCheck& s) { return s.meets_bound; });
}

bool EntropyReport::Optimal() const {
  return !sizes.empty() &&
         std::all_of(sizes.begin(), sizes.end(), [](const SizeCheck& s) {
           return s.bound_bits.has_value() && s.tight;
         });
}

bool EntropyReport::ConditionPassed(std::string_view condition) const {
  return std::none_of(conditions.begin(), conditions.end(),
                      [&](const ConditionCheck& c) {
                        return c.condition == condition && !c.pass;
                      });
}

std::size_t EntropyReport::CountChecks(std::string_view condition) const {
  return static_cast<std::size_t>(
      std::count_if(conditions.begin(), conditions.end(),
                    [&](const ConditionCheck& c) { return c.condition == condition; }));
}

std::string EntropyReport::ToText() const {
  std::ostringstream out;
  const SchemeDescriptor& d = descriptor;
  out << "trss-entropy-report v1\n";
  out << "scheme = " << SchemeName(d.scheme) << "\n";
  out << "q = " << d.q << "\n";
  if (d.scheme == Scheme::kKn) {
    out << "k = " << d.k1 << "\n";
  } else {
    out << "k1 = " << d.k1 << "\nk2 = " << d.k2 << "\n";
  }
  out << "n = " << d.n << "\ntau = " << d.tau << "\n";
  if (d.scheme == Scheme::kHybridOptimal) out << "ell = " << d.ell << "\n";
  if (d.mutation != Mutation::kNone) out << "mutation = " << MutationName(d.mutation) << "\n";
  out << "worlds_per_time = " << worlds_per_time << "\n";
  out << "secret_distribution = " << (uniform_secret ? "uniform" : "custom") << "\n";
  out << "H(S) = " << Bits(secret_entropy) << "\n";

  out << "\n[conditions]\n";
  for (const ConditionCheck& c : conditions) {
    out << (c.pass ? "PASS " : "FAIL ") << c.condition << " t=" << c.time
        << " coalition=" << Members(c.coalition) << " view=" << c.view
        << " H=" << Bits(c.entropy_bits) << " expected=" << Bits(c.expected_bits)
        << "\n";
  }

  out << "\n[sizes]\n";
  for (const SizeCheck& s : sizes) {
    out << (s.meets_bound ? "PASS " : "FAIL ") << s.quantity;
    if (s.index > 0) out << " " << s.index;
    out << " elements=" << s.elements << " H=" << Bits(s.entropy_bits);
    if (s.bound_bits) {
      out << " bound=" << Bits(*s.bound_bits) << " bound_elements=" << *s.bound_elements
          << (s.tight ? " equality" : " exceeds-bound");
    } else {
      out << " bound=n/a";
    }
    out << "\n";
  }

  std::size_t failed = 0;
  for (const ConditionCheck& c : conditions) failed += c.pass ? 0 : 1;
  for (const SizeCheck& s : sizes) failed += s.meets_bound ? 0 : 1;

  out << "\n[summary]\n";
  out << "checks = " << conditions.size() + sizes.size() << "\n";
  out << "failed = " << failed << "\n";
  for (const char* name : {"secrecy(i)", "timed-release(ii)", "ts-collusion(iii)",
                           "correctness", "correctness-with-signal",
                           "correctness-without-signal"}) {
    const std::size_t count = CountChecks(name);
    if (count == 0) continue;
    out << name << " = " << (ConditionPassed(name) ? "PASS" : "FAIL") << "\n";
  }
  out << "sizes = " << (SizesMeetBounds() ? "PASS" : "FAIL") << "\n";
  out << "optimal = " << (Optimal() ? "yes" : "no") << "\n";
  out << "result = " << (AllPass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

bool TreReport::pass() const {
  return std::abs(pre_signal_entropy - message_entropy) <= kEntropyTolerance &&
         std::abs(eavesdropper_entropy - message_entropy) <= kEntropyTolerance &&
         post_signal_determined && recovery_exact;
}

std::string TreReport::ToText() const {
  std::ostringstream out;
  out << "trss-tre-report v1\n";
  out << "q = " << q << "\ntau = " << tau << "\nt = " << time << "\n";
  out << "worlds = " << worlds << "\n";
  out << "H(M) = " << Bits(message_entropy) << "\n";
  out << "H(M|C,K,U,TI_except_t) = " << Bits(pre_signal_entropy) << "\n";
  out << "H(M|C,TI_all) = " << Bits(eavesdropper_entropy) << "\n";
  out << "post_signal_determined = " << (post_signal_determined ? "yes" : "no") << "\n";
  out << "recovery_exact = " << (recovery_exact ? "yes" : "no") << "\n";
  out << "result = " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace trss::oracle
