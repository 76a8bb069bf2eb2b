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

// Acceptance suite. Prints one PASS/FAIL line per criterion; with a
// criterion number as argument runs only that one and exits nonzero on FAIL.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <array>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "archive.h"
#include "cli.h"
#include "trss/errors.h"
#include "trss/hybrid_scheme.h"
#include "trss/kn_scheme.h"
#include "trss/oracle.h"
#include "trss/poly.h"
#include "trss/random.h"

namespace {

namespace fs = std::filesystem;
using trss::FieldElement;
using trss::FieldModulus;
using trss::oracle::EntropyReport;
using trss::oracle::Mutation;
using trss::oracle::SchemeDescriptor;

// Pinned tolerances and limits.
constexpr double kEntropyTolerance = 1e-9;
constexpr double kSweepSeconds = 30.0;
constexpr double kSuiteSeconds = 5.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void Require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit_seconds;
  std::function<Outcome()> run;
};

std::uint64_t Binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sum of C(n, s) for s in [lo, hi], times the number of checked times.
std::uint64_t Coalitions(unsigned n, unsigned lo, unsigned hi, unsigned times) {
  std::uint64_t total = 0;
  for (unsigned s = lo; s <= hi && s <= n; ++s) total += Binomial(n, s);
  return total * times;
}

// Every subset of {1..n} of the given size, ids ascending.
std::vector<std::vector<unsigned>> Subsets(unsigned n, unsigned size) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
    std::vector<unsigned> ids;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1) ids.push_back(i + 1);
    }
    out.push_back(std::move(ids));
  }
  return out;
}

template <typename Share>
std::vector<Share> Pick(const std::vector<Share>& all, const std::vector<unsigned>& ids) {
  std::vector<Share> out;
  for (unsigned id : ids) out.push_back(all[id - 1]);
  return out;
}

std::string Bits(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

// Security conditions equal H(S) within tolerance, correctness entropies
// are exactly zero, and every condition ran over the expected coalitions.
void RequireSuite(Outcome& o, const EntropyReport& r,
                  const std::map<std::string, std::uint64_t>& expected_counts,
                  const std::string& label) {
  for (const auto& [condition, count] : expected_counts) {
    o.Require(r.CountChecks(condition) == count,
              label + ": " + condition + " ran " + std::to_string(r.CountChecks(condition)) +
                  " checks, expected " + std::to_string(count));
  }
  for (const auto& c : r.conditions) {
    std::ostringstream where;
    where << label << ": " << c.condition << " t=" << c.time << " view=" << c.view;
    if (c.condition.rfind("correctness", 0) == 0) {
      o.Require(c.entropy_bits == 0.0 && c.pass,
                where.str() + " has H = " + Bits(c.entropy_bits) + ", expected exactly 0");
    } else {
      o.Require(std::abs(c.entropy_bits - r.secret_entropy) <= kEntropyTolerance && c.pass,
                where.str() + " has H = " + Bits(c.entropy_bits) + ", expected " +
                    Bits(r.secret_entropy));
    }
  }
}

std::map<std::string, std::uint64_t> KnCounts(unsigned k, unsigned n, unsigned tau) {
  return {{"secrecy(i)", Coalitions(n, 0, k - 1, tau)},
          {"timed-release(ii)", Coalitions(n, k, n, tau)},
          {"ts-collusion(iii)", Coalitions(n, 0, k - 1, tau)},
          {"correctness", Coalitions(n, k, n, tau)}};
}

std::map<std::string, std::uint64_t> HybridCounts(unsigned k1, unsigned k2, unsigned n,
                                                  unsigned tau) {
  return {{"secrecy(i)", Coalitions(n, 0, k1 - 1, tau)},
          {"timed-release(ii)", k2 > k1 ? Coalitions(n, k1, k2 - 1, tau) : 0},
          {"correctness-with-signal", k2 > k1 ? Coalitions(n, k1, k2 - 1, tau) : 0},
          {"correctness-without-signal", Coalitions(n, k2, n, tau)}};
}

std::uint64_t SweepKn(Outcome& o, const FieldModulus& field, unsigned k, unsigned n,
                      unsigned tau, trss::RandomSource& rng) {
  std::uint64_t cases = 0;
  const trss::kn::Params p{field, k, n, tau};
  const auto key = trss::kn::Initialize(p, rng);
  for (unsigned t = 1; t <= tau; ++t) {
    for (std::uint64_t v = 0; v < field.value(); ++v) {
      const FieldElement s(field, v);
      const auto shares = trss::kn::Deal(key, p, s, t, rng);
      for (const auto& ids : Subsets(n, k)) {
        ++cases;
        o.Require(trss::kn::Reconstruct(Pick(shares, ids), trss::kn::Extract(key, t), p) == s,
                  "kn reconstruction mismatch");
      }
    }
  }
  return cases;
}

std::uint64_t SweepHybrid(Outcome& o, const FieldModulus& field, unsigned k1, unsigned k2,
                          unsigned n, unsigned tau, trss::RandomSource& rng) {
  using trss::hybrid::Variant;
  std::uint64_t cases = 0;
  const trss::hybrid::Params p{field, k1, k2, n, tau, k2 - k1};
  const auto naive = trss::hybrid::Initialize(p, Variant::kNaive, rng);
  const auto opt = trss::hybrid::Initialize(p, Variant::kOptimal, rng);
  for (unsigned t = 1; t <= tau; ++t) {
    for (std::uint64_t v = 0; v < field.value(); ++v) {
      const FieldElement s(field, v);
      const auto ns = trss::hybrid::DealNaive(naive, p, s, t, rng);
      const auto od = trss::hybrid::DealOptimal(opt, p, s, t, rng);
      for (const auto& ids : Subsets(n, k1)) {
        cases += 2;
        o.Require(trss::hybrid::ReconstructWithSignal(Pick(ns, ids), std::nullopt,
                                                      trss::hybrid::Extract(naive, t), p) == s,
                  "hybrid-naive with-signal mismatch");
        o.Require(trss::hybrid::ReconstructWithSignal(Pick(od.shares, ids), od.public_params,
                                                      trss::hybrid::Extract(opt, t), p) == s,
                  "hybrid-optimal with-signal mismatch");
      }
      for (const auto& ids : Subsets(n, k2)) {
        cases += 2;
        o.Require(trss::hybrid::ReconstructWithoutSignal(Pick(ns, ids), p) == s,
                  "hybrid-naive without-signal mismatch");
        o.Require(trss::hybrid::ReconstructWithoutSignal(Pick(od.shares, ids), p) == s,
                  "hybrid-optimal without-signal mismatch");
      }
    }
  }
  return cases;
}

Outcome RoundTripSweep() {
  Outcome o;
  trss::SeededRandom rng(trss::Seed{}, "acceptance-sweep");
  std::uint64_t cases = 0;
  for (std::uint64_t q : {5u, 7u, 11u}) {
    const FieldModulus field(q);
    for (unsigned n = 1; n <= 5; ++n) {
      if (n >= q) {
        o.notes.push_back("skipped q=" + std::to_string(q) + ", n=" + std::to_string(n) +
                          ": violates q > max(n, tau)");
        continue;
      }
      for (unsigned tau : {1u, 3u}) {
        for (unsigned k2 = 1; k2 <= n; ++k2) {
          cases += SweepKn(o, field, k2, n, tau, rng);
          for (unsigned k1 = 1; k1 <= k2; ++k1) {
            cases += SweepHybrid(o, field, k1, k2, n, tau, rng);
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " reconstructions, all exact";
  return o;
}

Outcome KnEntropySuite() {
  Outcome o;
  const SchemeDescriptor stated = SchemeDescriptor::Kn(3, 2, 3, 2);
  try {
    const EntropyReport r = trss::oracle::CheckScheme(stated);
    o.Require(r.worlds_per_time == 81, "expected 81 worlds per time");
    RequireSuite(o, r, KnCounts(2, 3, 2), "kn q=3");
    if (o.pass) o.detail = std::to_string(r.conditions.size()) + " conditions pass";
  } catch (const trss::Error& e) {
    o.Require(false, std::string("q=3, (k,n)=(2,3), tau=2 is not a valid instance: ") +
                         e.what() +
                         "; GF(3) has two nonzero points for three participants");
  }

  const SchemeDescriptor admissible = SchemeDescriptor::Kn(5, 2, 3, 2);
  Outcome supplementary;
  const EntropyReport r = trss::oracle::CheckScheme(admissible);
  RequireSuite(supplementary, r, KnCounts(2, 3, 2), "kn q=5");
  o.notes.push_back("same suite at q=5 (" + std::to_string(r.worlds_per_time) +
                    " worlds per time, " + std::to_string(r.conditions.size()) +
                    " conditions): " +
                    (supplementary.pass ? "PASS" : "FAIL: " + supplementary.detail));
  return o;
}

Outcome HybridEntropySuite(bool optimal) {
  Outcome o;
  const SchemeDescriptor d = optimal ? SchemeDescriptor::HybridOptimal(3, 1, 2, 2, 2, 1)
                                     : SchemeDescriptor::HybridNaive(3, 1, 2, 2, 2);
  const EntropyReport r = trss::oracle::CheckScheme(d);
  o.Require(r.worlds_per_time == 81,
            "expected 81 worlds per time, got " + std::to_string(r.worlds_per_time));
  o.Require(std::abs(r.secret_entropy - std::log2(3.0)) <= kEntropyTolerance,
            "H(S) is not log2 3");
  RequireSuite(o, r, HybridCounts(1, 2, 2, 2), std::string(SchemeName(d.scheme)));
  if (o.pass) {
    o.detail = std::to_string(r.conditions.size()) + " conditions pass over " +
               std::to_string(r.worlds_per_time) + " worlds per time";
  }
  return o;
}

void RequireSizes(Outcome& o, const EntropyReport& r, unsigned share, unsigned signal,
                  unsigned key, bool optimal, const std::string& label) {
  for (const auto& s : r.sizes) {
    const std::string where = label + ": " + s.quantity + " " + std::to_string(s.index);
    const unsigned want = s.quantity == "share" ? share : s.quantity == "signal" ? signal : key;
    o.Require(s.elements == want, where + " has " + std::to_string(s.elements) +
                                      " elements, expected " + std::to_string(want));
    if (optimal) {
      o.Require(s.bound_bits.has_value() && s.tight && s.meets_bound &&
                    std::abs(s.entropy_bits - *s.bound_bits) <= kEntropyTolerance,
                where + " does not meet its bound with equality");
    }
  }
  o.Require(r.Optimal() == optimal, label + ": optimal flag is wrong");
}

Outcome OptimalityEqualities() {
  Outcome o;
  for (const auto& [q, k, n, tau] : std::vector<std::array<unsigned, 4>>{
           {5, 2, 3, 2}, {5, 1, 2, 3}, {3, 1, 2, 2}}) {
    const EntropyReport r = trss::oracle::CheckScheme(SchemeDescriptor::Kn(q, k, n, tau));
    RequireSizes(o, r, 1, 1, tau, true, "kn q=" + std::to_string(q));
  }
  for (const auto& [q, k1, k2, n, tau] : std::vector<std::array<unsigned, 5>>{
           {3, 1, 2, 2, 2}, {5, 1, 3, 3, 1}, {5, 2, 3, 3, 2}}) {
    const unsigned ell = k2 - k1;
    const EntropyReport r =
        trss::oracle::CheckScheme(SchemeDescriptor::HybridOptimal(q, k1, k2, n, tau, ell));
    RequireSizes(o, r, 1, ell, tau * ell, true,
                 "hybrid-optimal (" + std::to_string(k1) + "," + std::to_string(k2) + ")");
  }
  const EntropyReport naive =
      trss::oracle::CheckScheme(SchemeDescriptor::HybridNaive(3, 1, 2, 2, 2));
  RequireSizes(o, naive, 2, 1, 2, false, "hybrid-naive");
  for (const auto& s : naive.sizes) {
    if (s.quantity == "share") {
      o.Require(!s.tight && s.meets_bound && s.bound_bits &&
                    s.entropy_bits > *s.bound_bits + kEntropyTolerance,
                "hybrid-naive share is not reported as exceeding the bound");
    }
  }
  if (o.pass) {
    o.detail = "kn 1/1/tau and hybrid-optimal 1/ell/tau*ell are tight; "
               "hybrid-naive share of 2 exceeds the bound";
  }
  return o;
}

Outcome DegenerateEquivalence() {
  Outcome o;
  for (const auto& [q, k, n, tau] : std::vector<std::array<unsigned, 4>>{
           {3, 1, 2, 2}, {3, 2, 2, 2}, {5, 2, 3, 2}, {7, 3, 5, 1}}) {
    const FieldModulus field(q);
    const trss::hybrid::Params p{field, k, k, n, tau, 0};
    trss::SeededRandom rng(trss::Seed{}, "degenerate");
    const auto key = trss::hybrid::Initialize(p, trss::hybrid::Variant::kOptimal, rng);
    o.Require(key.entries.empty(), "master key is not empty");
    for (unsigned t = 1; t <= tau; ++t) {
      o.Require(trss::hybrid::Extract(key, t).values.empty(), "signal is not empty");
      for (std::uint64_t v = 0; v < q; ++v) {
        const FieldElement s(field, v);
        // Same coins into a plain Shamir polynomial.
        std::vector<std::uint64_t> coins;
        for (unsigned i = 1; i < k; ++i) coins.push_back(rng.NextU64() % q);
        trss::ReplayRandom deal_coins(coins);
        trss::ReplayRandom shamir_coins(coins);
        const auto dealing = trss::hybrid::DealOptimal(key, p, s, t, deal_coins);
        const auto shamir = trss::Polynomial::Random(s, k - 1, shamir_coins);
        o.Require(dealing.public_params.values.empty(), "public params are not empty");
        for (const auto& share : dealing.shares) {
          o.Require(share.values[0] == shamir.Evaluate(FieldElement(field, share.participant)),
                    "share differs from Shamir");
        }
        for (const auto& ids : Subsets(n, k)) {
          o.Require(trss::hybrid::ReconstructWithoutSignal(Pick(dealing.shares, ids), p) == s,
                    "without-signal reconstruction failed");
        }
      }
    }
    if (n <= 3) {
      const auto d = SchemeDescriptor::HybridOptimal(q, k, k, n, tau, 0);
      const EntropyReport r = trss::oracle::CheckScheme(d);
      RequireSuite(o, r, HybridCounts(k, k, n, tau), "degenerate q=" + std::to_string(q));
    }
  }
  if (o.pass) o.detail = "shares equal Shamir shares; empty signals; suite passes";
  return o;
}

Outcome MutationSensitivity() {
  Outcome o;
  struct Case {
    SchemeDescriptor d;
    Mutation m;
  };
  const auto opt = SchemeDescriptor::HybridOptimal(3, 1, 2, 2, 2, 1);
  const auto naive = SchemeDescriptor::HybridNaive(3, 1, 2, 2, 2);
  const auto kn = SchemeDescriptor::Kn(5, 2, 3, 2);
  const std::vector<Case> cases = {
      {opt, Mutation::kConstantTimeKeys}, {naive, Mutation::kConstantTimeKeys},
      {kn, Mutation::kConstantTimeKeys},  {opt, Mutation::kReducedDegree},
      {naive, Mutation::kReducedDegree},  {kn, Mutation::kReducedDegree},
      {opt, Mutation::kUnmaskedPublic},
  };
  for (const auto& base : {opt, naive, kn}) {
    o.Require(trss::oracle::CheckScheme(base).ConditionsPass(),
              "unmutated " + std::string(SchemeName(base.scheme)) + " fails");
  }
  std::ostringstream detected;
  for (Case c : cases) {
    c.d.mutation = c.m;
    const EntropyReport r = trss::oracle::CheckScheme(c.d);
    std::string failed;
    for (const auto& check : r.conditions) {
      if (!check.pass) {
        failed = check.condition;
        break;
      }
    }
    const std::string label = std::string(MutationName(c.m)) + " on " +
                              std::string(SchemeName(c.d.scheme));
    o.Require(!failed.empty(), label + " was not detected");
    o.notes.push_back(label + ": FAIL detected (" + failed + ")");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " mutated schemes, all detected";
  return o;
}

Outcome TreDemo() {
  Outcome o;
  const double h = std::log2(5.0);
  for (unsigned t = 1; t <= 2; ++t) {
    const auto r = trss::oracle::CheckTreDemo(5, 2, t);
    const std::string at = "t=" + std::to_string(t);
    o.Require(std::abs(r.message_entropy - h) <= kEntropyTolerance, at + ": H(M) wrong");
    o.Require(std::abs(r.pre_signal_entropy - r.message_entropy) <= kEntropyTolerance,
              at + ": pre-signal view leaks, H = " + Bits(r.pre_signal_entropy));
    o.Require(std::abs(r.eavesdropper_entropy - r.message_entropy) <= kEntropyTolerance,
              at + ": eavesdropper view leaks, H = " + Bits(r.eavesdropper_entropy));
    o.Require(r.post_signal_determined, at + ": M not determined after the signal");
    o.Require(r.recovery_exact, at + ": recovery not exact");
    if (o.pass) o.detail = "H(M | pre-signal view) = H(M) = " + Bits(h) + "; recovery exact";
  }
  return o;
}

int RunCli(std::vector<std::string> args, std::string* err) {
  args.insert(args.begin(), "trss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err_stream;
  const int code = trss::cli::Run(static_cast<int>(argv.size()), argv.data(), out, err_stream);
  *err = err_stream.str();
  return code;
}

std::map<std::string, std::string> Snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    files[entry.path().filename().string()] = trss::archive::ReadFile(entry.path());
  }
  return files;
}

Outcome CliDeterminism() {
  Outcome o;
  const std::string seed(
      "a1b2c3d4a1b2c3d4a1b2c3d4a1b2c3d4a1b2c3d4a1b2c3d4a1b2c3d4a1b2c3d4");
  const fs::path root = fs::temp_directory_path() / "trss-acceptance-cli";
  fs::remove_all(root);
  struct Archive {
    std::string name;
    std::vector<std::string> init;
    std::string secret;
    std::string t;
  };
  const std::vector<Archive> archives = {
      {"kn", {"--scheme", "kn", "--q", "7", "--k", "2", "--n", "3", "--tau", "2"}, "5", "2"},
      {"hybrid-naive",
       {"--scheme", "hybrid-naive", "--q", "7", "--k1", "1", "--k2", "2", "--n", "3",
        "--tau", "2"},
       "3", "2"},
      {"hybrid-optimal",
       {"--scheme", "hybrid-optimal", "--q", "11", "--k1", "1", "--k2", "3", "--n", "4",
        "--tau", "2", "--ell", "2"},
       "9", "1"},
  };
  std::string err;
  for (const auto& a : archives) {
    std::vector<std::map<std::string, std::string>> runs;
    for (const char* run : {"run1", "run2"}) {
      const std::string dir = (root / run / a.name).string();
      std::vector<std::string> init = {"init"};
      init.insert(init.end(), a.init.begin(), a.init.end());
      init.insert(init.end(), {"--seed", seed, "--out", dir});
      o.Require(RunCli(init, &err) == 0, a.name + " init failed: " + err);
      o.Require(RunCli({"share", "--archive", dir, "--secret", a.secret, "--t", a.t,
                        "--seed", seed},
                       &err) == 0,
                a.name + " share failed: " + err);
      o.Require(RunCli({"extract", "--archive", dir, "--all"}, &err) == 0,
                a.name + " extract failed: " + err);
      runs.push_back(Snapshot(dir));
    }
    o.Require(runs[0] == runs[1], a.name + ": two runs differ");
    o.Require(runs[0] == Snapshot(fs::path(TRSS_GOLDEN_DIR) / a.name),
              a.name + ": archive differs from the golden files");
  }
  fs::remove_all(root);
  if (o.pass) o.detail = "3 archives byte-identical across runs and equal to golden files";
  return o;
}

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "round-trip correctness sweep", kSweepSeconds, RoundTripSweep},
      {2, "kn exact-entropy suite, q=3 (k,n)=(2,3) tau=2", kSuiteSeconds, KnEntropySuite},
      {3, "hybrid-optimal exact-entropy suite, q=3 (1,2,2) tau=2 ell=1", kSuiteSeconds,
       [] { return HybridEntropySuite(true); }},
      {3, "hybrid-naive exact-entropy suite, q=3 (1,2,2) tau=2", kSuiteSeconds,
       [] { return HybridEntropySuite(false); }},
      {4, "optimality equalities", std::nullopt, OptimalityEqualities},
      {5, "degenerate k1=k2, ell=0 behaves as Shamir", std::nullopt, DegenerateEquivalence},
      {6, "mutation sensitivity", std::nullopt, MutationSensitivity},
      {7, "timed-release encryption demo at q=5", kSuiteSeconds, TreDemo},
      {8, "CLI determinism and golden files", std::nullopt, CliDeterminism},
  };
  return criteria;
}

bool RunOne(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("unexpected error: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds && seconds > *c.limit_seconds) {
    o.Require(false, "took " + std::to_string(seconds) + " s, limit " +
                         std::to_string(*c.limit_seconds) + " s");
  }
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << seconds;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
            << o.detail << " (" << time.str() << " s)" << std::endl;
  for (const auto& note : o.notes) std::cout << "       " << note << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all = true;
  bool any = false;
  for (const Criterion& c : Criteria()) {
    if (only && c.id != *only) continue;
    any = true;
    all = RunOne(c) && all;
  }
  if (!any) {
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
