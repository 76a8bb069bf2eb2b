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

#include "archive.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "trss/errors.h"

namespace trss::archive {
namespace {

namespace fs = std::filesystem;

unsigned HexWidth(std::uint64_t q) {
  const int bits = std::bit_width(q - 1);
  return std::max(1u, static_cast<unsigned>((bits + 3) / 4));
}

std::string Hex(std::uint64_t value, unsigned width = 1) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.push_back(kDigits[value & 0xf]);
    value >>= 4;
  } while (value != 0);
  while (out.size() < width) out.push_back('0');
  std::reverse(out.begin(), out.end());
  return out;
}

std::string HexList(const std::vector<std::uint64_t>& values, std::uint64_t q) {
  std::string out;
  for (std::uint64_t v : values) {
    out += " ";
    out += Hex(v, HexWidth(q));
  }
  return out;
}

std::string Header(std::string_view kind) {
  return "trss-" + std::string(kind) + " " + std::string(kFormatVersion);
}

class Records {
 public:
  Records(std::string_view text, std::string_view kind, std::string source)
      : source_(std::move(source)) {
    if (text.empty() || text.back() != '\n') Fail("missing trailing newline");
    std::vector<std::string_view> lines;
    while (!text.empty()) {
      const std::size_t nl = text.find('\n');
      lines.push_back(text.substr(0, nl));
      text.remove_prefix(nl + 1);
    }
    if (lines.front() != Header(kind)) {
      Fail("expected header '" + Header(kind) + "'");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const std::string_view line = lines[i];
      const std::size_t eq = line.find(" =");
      if (eq == std::string_view::npos || eq == 0) {
        Fail("line " + std::to_string(i + 1) + " is not 'key = value'");
      }
      std::string key(line.substr(0, eq));
      std::string_view value = line.substr(eq + 2);
      if (!value.empty()) {
        if (value.front() != ' ' || value.size() == 1) {
          Fail("line " + std::to_string(i + 1) + " is not 'key = value'");
        }
        value.remove_prefix(1);
      }
      if (!fields_.emplace(key, std::string(value)).second) {
        Fail("duplicate key '" + key + "'");
      }
      order_.push_back(std::move(key));
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(source_, what);
  }

  const std::string& Get(const std::string& key) const {
    const auto it = fields_.find(key);
    if (it == fields_.end()) Fail("missing key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::uint64_t HexValue(std::string_view digits, const std::string& key) const {
    if (digits.empty() || digits.size() > 16) {
      Fail("bad hex value for '" + key + "'");
    }
    std::uint64_t v = 0;
    for (char c : digits) {
      int d = -1;
      if (c >= '0' && c <= '9') d = c - '0';
      if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      if (d < 0) Fail("bad hex digit in '" + key + "'");
      v = v << 4 | static_cast<std::uint64_t>(d);
    }
    return v;
  }

  std::uint64_t Number(const std::string& key) const {
    return HexValue(Get(key), key);
  }

  unsigned Small(const std::string& key) const {
    const std::uint64_t v = Number(key);
    if (v > 0xffffffffu) Fail("value of '" + key + "' too large");
    return static_cast<unsigned>(v);
  }

  std::vector<std::uint64_t> Elements(const std::string& key, std::size_t count,
                                      std::uint64_t q) const {
    std::string_view rest = Get(key);
    std::vector<std::uint64_t> out;
    while (!rest.empty()) {
      const std::size_t sp = rest.find(' ');
      const std::string_view token = rest.substr(0, sp);
      const std::uint64_t v = HexValue(token, key);
      if (v >= q) Fail("field element in '" + key + "' is not below q");
      out.push_back(v);
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
      if (rest.empty()) Fail("trailing space in '" + key + "'");
    }
    if (out.size() != count) {
      Fail("'" + key + "' holds " + std::to_string(out.size()) +
           " elements, expected " + std::to_string(count));
    }
    return out;
  }

  oracle::Scheme SchemeField() const {
    const auto scheme = oracle::ParseScheme(Get("scheme"));
    if (!scheme) Fail("unknown scheme '" + Get("scheme") + "'");
    return *scheme;
  }

  // Rejects keys no accessor asked for.
  void Done() const {
    for (const std::string& key : order_) {
      if (!used_.count(key)) Fail("unexpected key '" + key + "'");
    }
  }

 private:
  std::string source_;
  std::map<std::string, std::string> fields_;
  std::vector<std::string> order_;
  mutable std::set<std::string> used_;
};

unsigned CheckTime(const Records& r, unsigned t, const Manifest& m) {
  if (t < 1 || t > m.tau) r.Fail("time " + std::to_string(t) + " outside [1, tau]");
  return t;
}

}  // namespace

void Manifest::Validate() const {
  if (scheme == oracle::Scheme::kKn) {
    KnParams().Validate();
  } else {
    HybridParams().Validate();
    if (scheme == oracle::Scheme::kHybridOptimal && k2 - k1 > ell) {
      throw Error(ErrorCode::kCapacityExceeded,
                  "k2 - k1 = " + std::to_string(k2 - k1) + " exceeds ell = " +
                      std::to_string(ell));
    }
  }
}

kn::Params Manifest::KnParams() const { return {FieldModulus(q), k1, n, tau}; }

hybrid::Params Manifest::HybridParams() const {
  return {FieldModulus(q), k1, k2, n, tau, ell};
}

hybrid::Variant Manifest::Variant() const {
  return scheme == oracle::Scheme::kHybridNaive ? hybrid::Variant::kNaive
                                                : hybrid::Variant::kOptimal;
}

unsigned Manifest::ShareWidth() const {
  return scheme == oracle::Scheme::kHybridNaive ? 2 : 1;
}

unsigned Manifest::SignalWidth() const {
  return scheme == oracle::Scheme::kHybridOptimal ? ell : 1;
}

std::string FormatManifest(const Manifest& m) {
  std::ostringstream out;
  out << Header("manifest") << "\n";
  out << "scheme = " << oracle::SchemeName(m.scheme) << "\n";
  out << "q = " << Hex(m.q) << "\n";
  if (m.scheme == oracle::Scheme::kKn) {
    out << "k = " << Hex(m.k1) << "\n";
  } else {
    out << "k1 = " << Hex(m.k1) << "\n";
    out << "k2 = " << Hex(m.k2) << "\n";
  }
  out << "n = " << Hex(m.n) << "\n";
  out << "tau = " << Hex(m.tau) << "\n";
  if (m.scheme == oracle::Scheme::kHybridOptimal) out << "ell = " << Hex(m.ell) << "\n";
  return out.str();
}

Manifest ParseManifest(std::string_view text, const std::string& source) {
  const Records r(text, "manifest", source);
  Manifest m;
  m.scheme = r.SchemeField();
  m.q = r.Number("q");
  if (m.scheme == oracle::Scheme::kKn) {
    m.k1 = m.k2 = r.Small("k");
  } else {
    m.k1 = r.Small("k1");
    m.k2 = r.Small("k2");
  }
  m.n = r.Small("n");
  m.tau = r.Small("tau");
  if (m.scheme == oracle::Scheme::kHybridOptimal) m.ell = r.Small("ell");
  r.Done();
  try {
    m.Validate();
  } catch (const Error& e) {
    r.Fail(e.what());
  }
  return m;
}

std::string FormatKey(const KeyRecord& key, std::uint64_t q) {
  std::ostringstream out;
  out << Header("master-key") << "\n";
  out << "scheme = " << oracle::SchemeName(key.scheme) << "\n";
  out << "tau = " << Hex(key.tau) << "\n";
  out << "width = " << Hex(key.width) << "\n";
  for (unsigned t = 1; t <= key.tau; ++t) {
    const auto first = key.entries.begin() + static_cast<std::ptrdiff_t>((t - 1) * key.width);
    out << "r." << Hex(t) << " ="
        << HexList({first, first + key.width}, q) << "\n";
  }
  return out.str();
}

KeyRecord ParseKey(std::string_view text, const Manifest& m, const std::string& source) {
  const Records r(text, "master-key", source);
  KeyRecord key{r.SchemeField(), r.Small("tau"), r.Small("width"), {}};
  if (key.scheme != m.scheme || key.tau != m.tau || key.width != m.SignalWidth()) {
    r.Fail("key shape does not match the manifest");
  }
  for (unsigned t = 1; t <= key.tau; ++t) {
    const auto row = r.Elements("r." + Hex(t), key.width, m.q);
    key.entries.insert(key.entries.end(), row.begin(), row.end());
  }
  r.Done();
  return key;
}

std::string FormatShare(const ShareRecord& share, std::uint64_t q) {
  std::ostringstream out;
  out << Header("share") << "\n";
  out << "scheme = " << oracle::SchemeName(share.scheme) << "\n";
  out << "participant = " << Hex(share.participant) << "\n";
  out << "time = " << Hex(share.time) << "\n";
  out << "values =" << HexList(share.values, q) << "\n";
  return out.str();
}

ShareRecord ParseShare(std::string_view text, const Manifest& m, const std::string& source) {
  const Records r(text, "share", source);
  ShareRecord share{r.SchemeField(), r.Small("participant"), 0, {}};
  if (share.scheme != m.scheme) r.Fail("share scheme does not match the manifest");
  if (share.participant < 1 || share.participant > m.n) {
    r.Fail("participant outside [1, n]");
  }
  share.time = CheckTime(r, r.Small("time"), m);
  share.values = r.Elements("values", m.ShareWidth(), m.q);
  r.Done();
  return share;
}

std::string FormatSignal(const VectorRecord& signal, std::uint64_t q) {
  return Header("signal") + "\ntime = " + Hex(signal.time) + "\nvalues =" +
         HexList(signal.values, q) + "\n";
}

VectorRecord ParseSignal(std::string_view text, const Manifest& m,
                         const std::string& source) {
  const Records r(text, "signal", source);
  VectorRecord signal{CheckTime(r, r.Small("time"), m), {}};
  signal.values = r.Elements("values", m.SignalWidth(), m.q);
  r.Done();
  return signal;
}

std::string FormatPublic(const VectorRecord& pub, std::uint64_t q) {
  return Header("public") + "\ntime = " + Hex(pub.time) + "\nvalues =" +
         HexList(pub.values, q) + "\n";
}

VectorRecord ParsePublic(std::string_view text, const Manifest& m,
                         const std::string& source) {
  const Records r(text, "public", source);
  VectorRecord pub{CheckTime(r, r.Small("time"), m), {}};
  pub.values = r.Elements("values", m.k2 - m.k1, m.q);
  r.Done();
  return pub;
}

KeyRecord ToRecord(const kn::MasterKey& key, const Manifest& m) {
  KeyRecord out{m.scheme, key.tau(), 1, {}};
  for (const FieldElement& e : key.r) out.entries.push_back(e.value());
  return out;
}

KeyRecord ToRecord(const hybrid::MasterKey& key, const Manifest& m) {
  KeyRecord out{m.scheme, key.tau, key.ell, {}};
  for (const FieldElement& e : key.entries) out.entries.push_back(e.value());
  return out;
}

kn::MasterKey ToKnKey(const KeyRecord& key, const Manifest& m) {
  const FieldModulus field(m.q);
  kn::MasterKey out;
  for (std::uint64_t v : key.entries) out.r.emplace_back(field, v);
  return out;
}

hybrid::MasterKey ToHybridKey(const KeyRecord& key, const Manifest& m) {
  const FieldModulus field(m.q);
  hybrid::MasterKey out{m.Variant(), key.tau, key.width, {}};
  for (std::uint64_t v : key.entries) out.entries.emplace_back(field, v);
  return out;
}

kn::Share ToKnShare(const ShareRecord& s, const Manifest& m) {
  return {s.participant, s.time, FieldElement(FieldModulus(m.q), s.values.at(0))};
}

hybrid::Share ToHybridShare(const ShareRecord& s, const Manifest& m) {
  const FieldModulus field(m.q);
  hybrid::Share out{m.Variant(), s.participant, s.time, {}};
  for (std::uint64_t v : s.values) out.values.emplace_back(field, v);
  return out;
}

fs::path ManifestPath(const fs::path& dir) { return dir / "manifest"; }
fs::path KeyPath(const fs::path& dir) { return dir / "master.key"; }
fs::path SharePath(const fs::path& dir, unsigned participant) {
  return dir / ("share." + std::to_string(participant));
}
fs::path SignalPath(const fs::path& dir, unsigned t) {
  return dir / ("signal." + std::to_string(t));
}
fs::path PublicPath(const fs::path& dir, unsigned t) {
  return dir / ("public." + std::to_string(t));
}

void WriteFile(const fs::path& path, std::string_view content, fs::perms perms) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
  }
  fs::permissions(path, perms, fs::perm_options::replace);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace trss::archive
