// Copyright 2026 The chaoskey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chaoskey/params_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>

#include "chaoskey/error.hpp"

namespace chaoskey {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint32_t decode_u32(std::string_view text, const std::string& where) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 10);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw MalformedInput(where + ": expected a decimal integer, got '" + std::string(text) + "'");
  }
  return v;
}

using Section = std::map<std::string, std::string, std::less<>>;

const std::string* lookup(const Section& s, std::string_view key) {
  const auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

double require_real(const Section& s, const char* section, const char* key) {
  const std::string* v = lookup(s, key);
  if (!v) throw MalformedInput(std::string("[") + section + "] is missing '" + key + "'");
  return decode_f64(*v);
}

}  // namespace

std::string encode_f64(double v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = kDigits[(bits >> (60 - 4 * i)) & 0xf];
  return out;
}

double decode_f64(std::string_view hex16) {
  std::uint64_t bits = 0;
  const auto [ptr, ec] = std::from_chars(hex16.data(), hex16.data() + hex16.size(), bits, 16);
  if (hex16.size() != 16 || ec != std::errc() || ptr != hex16.data() + hex16.size()) {
    throw MalformedInput("expected 16 hex digits of a binary64 value, got '" +
                         std::string(hex16) + "'");
  }
  return std::bit_cast<double>(bits);
}

ChaosParamSet parse_params(std::string_view text) {
  std::map<std::string, Section, std::less<>> sections;
  std::string current;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string where = "params line " + std::to_string(line_no);

    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw MalformedInput(where + ": unterminated section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (current != "logistic" && current != "cross") {
        throw MalformedInput(where + ": unknown section [" + current + "]");
      }
      if (sections.contains(current)) throw MalformedInput(where + ": duplicate section");
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw MalformedInput(where + ": expected key=value");
    if (current.empty()) throw MalformedInput(where + ": key outside of a section");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    auto& sec = sections[current];
    if (sec.contains(key)) throw MalformedInput(where + ": duplicate key '" + key + "'");
    sec.emplace(std::move(key), std::move(value));
  }

  ChaosParamSet out;
  if (const auto it = sections.find("logistic"); it != sections.end()) {
    const Section& s = it->second;
    for (const auto& [k, v] : s) {
      if (k != "mu" && k != "x0" && k != "burn_in") {
        throw MalformedInput("[logistic] has unknown key '" + k + "'");
      }
    }
    LogisticParams p;
    p.mu = require_real(s, "logistic", "mu");
    p.x0 = require_real(s, "logistic", "x0");
    if (const auto* v = lookup(s, "burn_in")) p.burn_in = decode_u32(*v, "[logistic] burn_in");
    p.validate();
    out.logistic = p;
  }
  if (const auto it = sections.find("cross"); it != sections.end()) {
    const Section& s = it->second;
    for (const auto& [k, v] : s) {
      if (k != "mu" && k != "k" && k != "x0" && k != "y0" && k != "burn_in") {
        throw MalformedInput("[cross] has unknown key '" + k + "'");
      }
    }
    CrossParams p;
    if (const auto* v = lookup(s, "mu")) p.mu = decode_f64(*v);
    if (const auto* v = lookup(s, "k")) p.k = decode_u32(*v, "[cross] k");
    p.x0 = require_real(s, "cross", "x0");
    p.y0 = require_real(s, "cross", "y0");
    if (const auto* v = lookup(s, "burn_in")) p.burn_in = decode_u32(*v, "[cross] burn_in");
    p.validate();
    out.cross = p;
  }
  return out;
}

std::string format_params(const ChaosParamSet& params) {
  std::ostringstream os;
  if (params.logistic) {
    const auto& p = *params.logistic;
    os << "[logistic]\n"
       << "mu=" << encode_f64(p.mu) << '\n'
       << "x0=" << encode_f64(p.x0) << '\n'
       << "burn_in=" << p.burn_in << '\n';
  }
  if (params.cross) {
    if (params.logistic) os << '\n';
    const auto& p = *params.cross;
    os << "[cross]\n"
       << "mu=" << encode_f64(p.mu) << '\n'
       << "k=" << p.k << '\n'
       << "x0=" << encode_f64(p.x0) << '\n'
       << "y0=" << encode_f64(p.y0) << '\n'
       << "burn_in=" << p.burn_in << '\n';
  }
  return os.str();
}

}  // namespace chaoskey
