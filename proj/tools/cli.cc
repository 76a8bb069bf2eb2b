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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "archive.h"
#include "trss/field.h"
#include "trss/hybrid_scheme.h"
#include "trss/kn_scheme.h"
#include "trss/oracle.h"
#include "trss/random.h"

namespace trss::cli {
namespace {

namespace fs = std::filesystem;

constexpr auto kPrivate = fs::perms::owner_read | fs::perms::owner_write;
constexpr auto kPublic = kPrivate | fs::perms::group_read | fs::perms::others_read;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchemeFlags {
  std::string scheme;
  std::uint64_t q = 0;
  std::optional<unsigned> k;
  std::optional<unsigned> k1;
  std::optional<unsigned> k2;
  unsigned n = 0;
  unsigned tau = 0;
  unsigned ell = 0;

  void Attach(CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "kn | hybrid-naive | hybrid-optimal")
        ->required()
        ->check(CLI::IsMember({"kn", "hybrid-naive", "hybrid-optimal"}));
    cmd->add_option("--q", q, "Prime field order")->required();
    cmd->add_option("--k", k, "Threshold (kn)");
    cmd->add_option("--k1", k1, "Threshold with the time signal (hybrid)");
    cmd->add_option("--k2", k2, "Threshold without the time signal (hybrid)");
    cmd->add_option("--n", n, "Number of participants")->required();
    cmd->add_option("--tau", tau, "Number of time periods")->required();
    cmd->add_option("--ell", ell, "Maximum k2 - k1 (hybrid-optimal)");
  }

  archive::Manifest ToManifest() const {
    archive::Manifest m;
    m.scheme = *oracle::ParseScheme(scheme);
    m.q = q;
    m.n = n;
    m.tau = tau;
    if (m.scheme == oracle::Scheme::kKn) {
      if (!k || k1 || k2) throw UsageError("scheme kn takes --k (not --k1/--k2)");
      m.k1 = m.k2 = *k;
    } else {
      if (k || !k1 || !k2) throw UsageError("hybrid schemes take --k1 and --k2");
      m.k1 = *k1;
      m.k2 = *k2;
    }
    if (m.scheme == oracle::Scheme::kHybridOptimal) {
      m.ell = ell;
    } else if (ell != 0) {
      throw UsageError("--ell applies to hybrid-optimal only");
    }
    return m;
  }
};

std::optional<Seed> ResolveSeed(const std::optional<std::string>& flag) {
  if (flag) return ParseSeedHex(*flag);
  if (const char* env = std::getenv("TRSS_SEED"); env != nullptr && *env != '\0') {
    return ParseSeedHex(env);
  }
  return std::nullopt;
}

SeededRandom MakeRng(const std::optional<Seed>& seed, const std::string& domain) {
  return seed ? SeededRandom(*seed, domain) : SeededRandom::FromEntropy(domain);
}

archive::Manifest LoadManifest(const fs::path& dir) {
  const fs::path path = archive::ManifestPath(dir);
  return archive::ParseManifest(archive::ReadFile(path), path.string());
}

archive::KeyRecord LoadKey(const fs::path& dir, const archive::Manifest& m) {
  const fs::path path = archive::KeyPath(dir);
  return archive::ParseKey(archive::ReadFile(path), m, path.string());
}

void RemoveDealingFiles(const fs::path& dir) {
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("share.") || name.starts_with("signal.") ||
        name.starts_with("public.")) {
      fs::remove(entry.path());
    }
  }
}

int CmdInit(const SchemeFlags& flags, const std::optional<std::string>& seed_flag,
            const fs::path& dir, bool force, std::ostream& out) {
  const archive::Manifest m = flags.ToManifest();
  m.Validate();
  const std::optional<Seed> seed = ResolveSeed(seed_flag);

  if (fs::exists(archive::ManifestPath(dir)) && !force) {
    throw UsageError(dir.string() +
                     " already holds an archive (use --force to replace it)");
  }
  fs::create_directories(dir);
  if (force) RemoveDealingFiles(dir);

  SeededRandom rng = MakeRng(seed, "init");
  archive::KeyRecord key;
  if (m.scheme == oracle::Scheme::kKn) {
    key = archive::ToRecord(kn::Initialize(m.KnParams(), rng), m);
  } else {
    key = archive::ToRecord(hybrid::Initialize(m.HybridParams(), m.Variant(), rng), m);
  }
  archive::WriteFile(archive::ManifestPath(dir), archive::FormatManifest(m), kPublic);
  archive::WriteFile(archive::KeyPath(dir), archive::FormatKey(key, m.q), kPrivate);

  out << "initialized " << oracle::SchemeName(m.scheme) << " archive at "
      << dir.string() << "\n";
  out << "master key: " << key.entries.size() << " field elements\n";
  out << "share: " << m.ShareWidth() << " field element(s); signal: "
      << m.SignalWidth() << " field element(s)\n";
  return kOk;
}

int CmdShare(const fs::path& dir, std::uint64_t secret_value, unsigned t,
             const std::optional<std::string>& seed_flag, std::ostream& out) {
  const archive::Manifest m = LoadManifest(dir);
  const archive::KeyRecord key = LoadKey(dir, m);
  if (secret_value >= m.q) {
    throw Error(ErrorCode::kOutOfRange, "secret " + std::to_string(secret_value) +
                                            " outside [0, q = " +
                                            std::to_string(m.q) + ")");
  }
  if (t < 1 || t > m.tau) {
    throw Error(ErrorCode::kOutOfRange, "time " + std::to_string(t) +
                                            " outside [1, " + std::to_string(m.tau) + "]");
  }
  const FieldElement secret(FieldModulus(m.q), secret_value);
  SeededRandom rng = MakeRng(ResolveSeed(seed_flag), "share:" + std::to_string(t));

  std::vector<archive::ShareRecord> shares;
  std::optional<archive::VectorRecord> pub;
  switch (m.scheme) {
    case oracle::Scheme::kKn:
      for (const kn::Share& s :
           kn::Deal(archive::ToKnKey(key, m), m.KnParams(), secret, t, rng)) {
        shares.push_back({m.scheme, s.participant, s.time, {s.value.value()}});
      }
      break;
    case oracle::Scheme::kHybridNaive:
    case oracle::Scheme::kHybridOptimal: {
      const hybrid::MasterKey hkey = archive::ToHybridKey(key, m);
      hybrid::Dealing dealing;
      if (m.scheme == oracle::Scheme::kHybridNaive) {
        dealing.shares = hybrid::DealNaive(hkey, m.HybridParams(), secret, t, rng);
      } else {
        dealing = hybrid::DealOptimal(hkey, m.HybridParams(), secret, t, rng);
        pub.emplace();
        pub->time = t;
        for (const FieldElement& v : dealing.public_params.values) {
          pub->values.push_back(v.value());
        }
      }
      for (const hybrid::Share& s : dealing.shares) {
        archive::ShareRecord rec{m.scheme, s.participant, s.time, {}};
        for (const FieldElement& v : s.values) rec.values.push_back(v.value());
        shares.push_back(std::move(rec));
      }
      break;
    }
  }

  for (const archive::ShareRecord& s : shares) {
    const fs::path path = archive::SharePath(dir, s.participant);
    archive::WriteFile(path, archive::FormatShare(s, m.q), kPrivate);
    out << "wrote " << path.string() << "\n";
  }
  if (pub) {
    const fs::path path = archive::PublicPath(dir, t);
    archive::WriteFile(path, archive::FormatPublic(*pub, m.q), kPublic);
    out << "wrote " << path.string() << " (" << pub->values.size()
        << " public element(s))\n";
  }
  return kOk;
}

int CmdExtract(const fs::path& dir, std::optional<unsigned> t, bool all,
               std::optional<unsigned> until, std::ostream& out) {
  const archive::Manifest m = LoadManifest(dir);
  const archive::KeyRecord key = LoadKey(dir, m);
  if (t.has_value() == all) throw UsageError("extract takes exactly one of --t or --all");
  if (until && !all) throw UsageError("--until requires --all");

  std::vector<unsigned> times;
  if (t) {
    times.push_back(*t);
  } else {
    const unsigned horizon = until.value_or(m.tau);
    for (unsigned tt = 1; tt <= horizon; ++tt) times.push_back(tt);
  }
  for (unsigned tt : times) {
    archive::VectorRecord signal{tt, {}};
    if (m.scheme == oracle::Scheme::kKn) {
      signal.values.push_back(kn::Extract(archive::ToKnKey(key, m), tt).value.value());
    } else {
      for (const FieldElement& v :
           hybrid::Extract(archive::ToHybridKey(key, m), tt).values) {
        signal.values.push_back(v.value());
      }
    }
    const fs::path path = archive::SignalPath(dir, tt);
    archive::WriteFile(path, archive::FormatSignal(signal, m.q), kPublic);
    out << "wrote " << path.string() << "\n";
  }
  return kOk;
}

int CmdReconstruct(const fs::path& dir, const std::vector<std::string>& share_files,
                   const std::optional<std::string>& signal_file,
                   const std::optional<std::string>& public_file,
                   const std::string& mode, std::ostream& out) {
  const archive::Manifest m = LoadManifest(dir);
  const bool with_signal = mode == "with-signal";
  if (m.scheme == oracle::Scheme::kKn && !with_signal) {
    throw UsageError("the kn scheme only reconstructs with a time signal");
  }
  if (with_signal && !signal_file) throw UsageError("with-signal mode needs --signal");
  if (!with_signal && (signal_file || public_file)) {
    throw UsageError("without-signal mode takes no --signal or --public");
  }

  std::vector<archive::ShareRecord> shares;
  for (const std::string& file : share_files) {
    shares.push_back(archive::ParseShare(archive::ReadFile(file), m, file));
  }
  std::optional<archive::VectorRecord> signal;
  if (signal_file) {
    signal = archive::ParseSignal(archive::ReadFile(*signal_file), m, *signal_file);
  }

  const FieldModulus field(m.q);
  auto elements = [&](const std::vector<std::uint64_t>& values) {
    std::vector<FieldElement> out_values;
    for (std::uint64_t v : values) out_values.emplace_back(field, v);
    return out_values;
  };

  FieldElement secret = FieldElement::Zero(field);
  if (m.scheme == oracle::Scheme::kKn) {
    std::vector<kn::Share> kn_shares;
    for (const auto& s : shares) kn_shares.push_back(archive::ToKnShare(s, m));
    const kn::TimeSignal ts{signal->time, FieldElement(field, signal->values.at(0))};
    secret = kn::Reconstruct(kn_shares, ts, m.KnParams());
  } else {
    std::vector<hybrid::Share> hybrid_shares;
    for (const auto& s : shares) hybrid_shares.push_back(archive::ToHybridShare(s, m));
    if (!with_signal) {
      secret = hybrid::ReconstructWithoutSignal(hybrid_shares, m.HybridParams());
    } else {
      std::optional<hybrid::PublicParams> pub;
      if (m.scheme == oracle::Scheme::kHybridOptimal) {
        std::optional<fs::path> path;
        if (public_file) {
          path = *public_file;
        } else if (!shares.empty() &&
                   fs::exists(archive::PublicPath(dir, shares.front().time))) {
          path = archive::PublicPath(dir, shares.front().time);
        }
        if (path) {
          const archive::VectorRecord rec =
              archive::ParsePublic(archive::ReadFile(*path), m, path->string());
          pub = hybrid::PublicParams{rec.time, elements(rec.values)};
        }
      }
      const hybrid::TimeSignal ts{signal->time, elements(signal->values)};
      secret = hybrid::ReconstructWithSignal(hybrid_shares, pub, ts, m.HybridParams());
    }
  }
  out << secret.value() << "\n";
  return kOk;
}

std::vector<std::uint64_t> ParseWeights(const std::string& text) {
  std::vector<std::uint64_t> weights;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--secret-weights expects comma-separated integers");
    }
    weights.push_back(std::stoull(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return weights;
}

int CmdVerify(const SchemeFlags& flags, std::optional<unsigned> t,
              const std::optional<std::string>& report_path, std::uint64_t cap,
              const std::optional<std::string>& weights,
              const std::string& mutation, std::ostream& out) {
  const archive::Manifest m = flags.ToManifest();
  oracle::SchemeDescriptor d{m.scheme, m.q, m.k1, m.k2, m.n, m.tau, m.ell,
                             *oracle::ParseMutation(mutation)};
  std::optional<oracle::SecretDistribution> dist;
  if (weights) {
    dist = oracle::SecretDistribution{ParseWeights(*weights)};
    if (dist->weights.size() != m.q) {
      throw UsageError("--secret-weights needs exactly q = " + std::to_string(m.q) +
                       " entries");
    }
  }
  const oracle::EntropyReport report =
      oracle::CheckScheme(d, t, dist ? &*dist : nullptr, cap);
  const std::string text = report.ToText();
  if (report_path) {
    archive::WriteFile(*report_path, text, kPublic);
  } else {
    out << text;
  }
  out << "verify " << oracle::SchemeName(d.scheme) << ": "
      << (report.AllPass() ? "PASS" : "FAIL") << " (" << report.conditions.size()
      << " conditions, " << report.sizes.size() << " size checks, optimal = "
      << (report.Optimal() ? "yes" : "no") << ")\n";
  return report.AllPass() ? kOk : kVerifyFailed;
}

int CmdTreDemo(std::uint64_t q, std::uint64_t message_value, unsigned t, unsigned tau,
               const std::optional<std::string>& seed_flag, bool check,
               std::ostream& out) {
  const FieldModulus field(q);
  const kn::Params params{field, 1, 1, tau};
  params.Validate();
  if (message_value >= q) {
    throw Error(ErrorCode::kOutOfRange, "message " + std::to_string(message_value) +
                                            " outside [0, q = " + std::to_string(q) + ")");
  }
  if (t < 1 || t > tau) {
    throw Error(ErrorCode::kOutOfRange,
                "time " + std::to_string(t) + " outside [1, " + std::to_string(tau) + "]");
  }
  SeededRandom rng = MakeRng(ResolveSeed(seed_flag), "tre-demo");
  const FieldElement message(field, message_value);

  const kn::MasterKey key = kn::Initialize(params, rng);
  const FieldElement pad = RandomElement(field, rng);
  const FieldElement r = RandomElement(field, rng);
  const FieldElement ciphertext = message + r + pad;
  const kn::Share share = kn::Deal(key, params, r, t, rng).front();

  out << "timed-release encryption over GF(" << q << "), tau = " << tau
      << ", release time t = " << t << "\n";
  out << "[initialize] time server key holds " << key.r.size() << " element(s)\n";
  out << "[setup] sender and receiver pre-share K = " << pad.value() << "\n";
  out << "[encrypt] sender draws pad r = " << r.value() << "; C = M + r + K = "
      << ciphertext.value() << "\n";
  out << "[share] (1,1) share of r for time " << t << ": u = " << share.value.value()
      << "\n";
  out << "[before t] receiver holds C, K, u; C - K = M + r = "
      << (ciphertext - pad).value() << "\n";
  const kn::TimeSignal signal = kn::Extract(key, t);
  out << "[extract] signal at time " << t << " = " << signal.value.value() << "\n";
  const FieldElement recovered_pad = kn::Reconstruct({&share, 1}, signal, params);
  const FieldElement recovered = ciphertext - pad - recovered_pad;
  out << "[after t] r = u - signal = " << recovered_pad.value()
      << "; M = C - K - r = " << recovered.value() << "\n";
  out << "recovered = " << recovered.value() << "\n";

  if (check) {
    const oracle::TreReport report = oracle::CheckTreDemo(q, tau, t);
    out << report.ToText();
    if (!report.pass()) return kVerifyFailed;
  }
  return recovered == message ? kOk : kFailure;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInsufficientShares:
      return kInsufficientShares;
    case ErrorCode::kTimeMismatch:
      return kTimeMismatch;
    case ErrorCode::kDuplicateShare:
      return kDuplicateShare;
    case ErrorCode::kMissingPublicParams:
      return kMissingPublicParams;
    case ErrorCode::kEnumerationTooLarge:
      return kEnumerationTooLarge;
    case ErrorCode::kCapacityExceeded:
      return kCapacityExceeded;
    case ErrorCode::kModulusMismatch:
    case ErrorCode::kZeroInverse:
    case ErrorCode::kInvalidParams:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kUnknownSelector:
      return kUsage;
    case ErrorCode::kRandomnessExhausted:
      return kFailure;
  }
  return kFailure;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timed-release secret sharing: key ceremony, dealing, time signals, "
               "reconstruction and exhaustive security verification"};
  app.require_subcommand(1);

  std::optional<std::string> seed;
  std::string dir;
  bool force = false;
  SchemeFlags init_flags;
  auto* init = app.add_subcommand("init", "Trusted initializer: write manifest and master key");
  init_flags.Attach(init);
  init->add_option("--seed", seed, "64 hex digits; overrides $TRSS_SEED");
  init->add_option("--out", dir, "Archive directory")->required();
  init->add_flag("--force", force, "Replace an existing archive");

  std::uint64_t secret = 0;
  unsigned time = 0;
  auto* share = app.add_subcommand("share", "Dealer: share a secret for a specified time");
  share->add_option("--archive", dir, "Archive directory")->required();
  share->add_option("--secret", secret, "Secret in [0, q)")->required();
  share->add_option("--t", time, "Specified release time")->required();
  share->add_option("--seed", seed, "64 hex digits; overrides $TRSS_SEED");

  std::optional<unsigned> extract_time;
  std::optional<unsigned> until;
  bool all = false;
  auto* extract = app.add_subcommand("extract", "Time server: broadcast time signals");
  extract->add_option("--archive", dir, "Archive directory")->required();
  extract->add_option("--t", extract_time, "Time to broadcast");
  extract->add_flag("--all", all, "Broadcast every time up to the horizon");
  extract->add_option("--until", until, "Horizon for --all (default tau)");

  std::vector<std::string> share_files;
  std::optional<std::string> signal_file;
  std::optional<std::string> public_file;
  std::string mode = "with-signal";
  auto* reconstruct = app.add_subcommand("reconstruct", "Participants: recover the secret");
  reconstruct->add_option("--archive", dir, "Archive directory")->required();
  reconstruct->add_option("--shares", share_files, "Share files")->required();
  reconstruct->add_option("--signal", signal_file, "Signal file");
  reconstruct->add_option("--public", public_file,
                          "Public-parameter file (default: archive's public.<t>)");
  reconstruct->add_option("--mode", mode, "with-signal | without-signal")
      ->check(CLI::IsMember({"with-signal", "without-signal"}));

  SchemeFlags verify_flags;
  std::optional<unsigned> verify_time;
  std::optional<std::string> report_path;
  std::optional<std::string> weights;
  std::uint64_t cap = oracle::kDefaultWorldCap;
  std::string mutation = "none";
  auto* verify = app.add_subcommand("verify", "Exhaustively check the security conditions");
  verify_flags.Attach(verify);
  verify->add_option("--t", verify_time, "Check one specified time (default: all)");
  verify->add_option("--report", report_path, "Write the report here instead of stdout");
  verify->add_option("--cap", cap, "Maximum worlds per enumeration");
  verify->add_option("--secret-weights", weights,
                     "Comma-separated integer weights for secrets 0..q-1");
  verify->add_option("--mutation", mutation)
      ->check(CLI::IsMember({"none", "constant-time-keys", "reduced-degree",
                             "unmasked-public"}))
      ->group("");

  std::uint64_t tre_q = 0;
  std::uint64_t message = 0;
  unsigned tre_time = 1;
  unsigned tre_tau = 1;
  bool check = false;
  auto* tre = app.add_subcommand("tre-demo", "Timed-release encryption from a (1,1) scheme");
  tre->add_option("--q", tre_q, "Prime field order")->required();
  tre->add_option("--message", message, "Message in [0, q)")->required();
  tre->add_option("--t", tre_time, "Release time");
  tre->add_option("--tau", tre_tau, "Number of time periods");
  tre->add_option("--seed", seed, "64 hex digits; overrides $TRSS_SEED");
  tre->add_flag("--check", check, "Also run the exhaustive leakage check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*init) return CmdInit(init_flags, seed, dir, force, out);
    if (*share) return CmdShare(dir, secret, time, seed, out);
    if (*extract) return CmdExtract(dir, extract_time, all, until, out);
    if (*reconstruct) {
      return CmdReconstruct(dir, share_files, signal_file, public_file, mode, out);
    }
    if (*verify) {
      return CmdVerify(verify_flags, verify_time, report_path, cap, weights, mutation, out);
    }
    if (*tre) return CmdTreDemo(tre_q, message, tre_time, tre_tau, seed, check, out);
  } catch (const UsageError& e) {
    err << "trss: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const archive::ParseError& e) {
    err << "trss: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "trss: " << e.what() << "\n";
    if (e.code() == ErrorCode::kEnumerationTooLarge) {
      err << "trss: try a smaller q, n, tau or ell\n";
    }
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "trss: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace trss::cli
