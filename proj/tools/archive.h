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

#ifndef TRSS_TOOLS_ARCHIVE_H_
#define TRSS_TOOLS_ARCHIVE_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trss/hybrid_scheme.h"
#include "trss/kn_scheme.h"
#include "trss/oracle.h"

namespace trss::archive {

// On-disk protocol state. Every file is line-oriented text: a one-line
// `trss-<kind> v1` header followed by `key = value` records. All integers,
// field elements included, are lowercase hex; field elements are
// zero-padded to the hex width of q - 1.
//
//   <dir>/manifest     scheme parameters                      0644
//   <dir>/master.key   TA key held by dealer and time server  0600
//   <dir>/share.<i>    participant i's share                  0600
//   <dir>/signal.<t>   time-server broadcast for time t       0644
//   <dir>/public.<t>   dealer's public parameters for time t  0644
//
// Concurrent commands on one archive are unsupported.

inline constexpr std::string_view kFormatVersion = "v1";

// Malformed or inconsistent file; the message names the file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, const std::string& what)
      : std::runtime_error(source + ": " + what) {}
};

struct Manifest {
  oracle::Scheme scheme = oracle::Scheme::kKn;
  std::uint64_t q = 0;
  unsigned k1 = 0;  // k for kn
  unsigned k2 = 0;
  unsigned n = 0;
  unsigned tau = 0;
  unsigned ell = 0;

  // Throws trss::Error(kInvalidParams) naming the violated constraint.
  void Validate() const;
  kn::Params KnParams() const;
  hybrid::Params HybridParams() const;
  hybrid::Variant Variant() const;
  // Elements per share / signal / master key.
  unsigned ShareWidth() const;
  unsigned SignalWidth() const;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

struct KeyRecord {
  oracle::Scheme scheme;
  unsigned tau;
  unsigned width;
  std::vector<std::uint64_t> entries;  // row-major tau x width

  friend bool operator==(const KeyRecord&, const KeyRecord&) = default;
};

struct ShareRecord {
  oracle::Scheme scheme;
  unsigned participant;
  unsigned time;
  std::vector<std::uint64_t> values;

  friend bool operator==(const ShareRecord&, const ShareRecord&) = default;
};

// Signals and public parameters share one shape.
struct VectorRecord {
  unsigned time;
  std::vector<std::uint64_t> values;

  friend bool operator==(const VectorRecord&, const VectorRecord&) = default;
};

std::string FormatManifest(const Manifest& m);
Manifest ParseManifest(std::string_view text, const std::string& source);

std::string FormatKey(const KeyRecord& key, std::uint64_t q);
KeyRecord ParseKey(std::string_view text, const Manifest& m, const std::string& source);

std::string FormatShare(const ShareRecord& share, std::uint64_t q);
ShareRecord ParseShare(std::string_view text, const Manifest& m, const std::string& source);

std::string FormatSignal(const VectorRecord& signal, std::uint64_t q);
VectorRecord ParseSignal(std::string_view text, const Manifest& m,
                         const std::string& source);

std::string FormatPublic(const VectorRecord& pub, std::uint64_t q);
VectorRecord ParsePublic(std::string_view text, const Manifest& m,
                         const std::string& source);

// Conversions between records and library types.
KeyRecord ToRecord(const kn::MasterKey& key, const Manifest& m);
KeyRecord ToRecord(const hybrid::MasterKey& key, const Manifest& m);
kn::MasterKey ToKnKey(const KeyRecord& key, const Manifest& m);
hybrid::MasterKey ToHybridKey(const KeyRecord& key, const Manifest& m);
kn::Share ToKnShare(const ShareRecord& s, const Manifest& m);
hybrid::Share ToHybridShare(const ShareRecord& s, const Manifest& m);

// File placement.
std::filesystem::path ManifestPath(const std::filesystem::path& dir);
std::filesystem::path KeyPath(const std::filesystem::path& dir);
std::filesystem::path SharePath(const std::filesystem::path& dir, unsigned participant);
std::filesystem::path SignalPath(const std::filesystem::path& dir, unsigned t);
std::filesystem::path PublicPath(const std::filesystem::path& dir, unsigned t);

// Writes atomically enough for a single-process tool: truncate, write,
// then set `perms`. Throws std::runtime_error on I/O failure.
void WriteFile(const std::filesystem::path& path, std::string_view content,
               std::filesystem::perms perms);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace trss::archive

#endif  // TRSS_TOOLS_ARCHIVE_H_
