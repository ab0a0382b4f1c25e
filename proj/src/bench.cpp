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

#include "chaoskey/bench.hpp"

#include <time.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "chaoskey/error.hpp"
#include "chaoskey/image_cipher.hpp"

namespace chaoskey {

namespace {

template <typename Fn>
std::size_t calibrate_batch(Fn&& fn, double min_sample_s) {
  std::size_t batch = 1;
  for (;;) {
    const double t0 = process_cpu_seconds();
    for (std::size_t i = 0; i < batch; ++i) fn();
    const double dt = process_cpu_seconds() - t0;
    if (dt >= min_sample_s || batch >= (std::size_t{1} << 24)) return batch;
    batch *= 2;
  }
}

template <typename Fn>
double time_batch(Fn&& fn, std::size_t batch) {
  const double t0 = process_cpu_seconds();
  for (std::size_t i = 0; i < batch; ++i) fn();
  const double dt = process_cpu_seconds() - t0;
  return std::max(0.0, dt) / static_cast<double>(batch);
}

std::size_t mode_rank(WrapMode m) { return static_cast<std::size_t>(m); }

std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw MalformedInput("bench CSV line " + std::to_string(line) + ": bad number '" +
                         std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> BenchRecord::total_samples() const {
  std::vector<double> out(encrypt_samples.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double wrap = i < wrap_samples.size() ? wrap_samples[i] : 0.0;
    out[i] = wrap + encrypt_samples[i] + decrypt_samples[i];
  }
  return out;
}

double process_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

double median(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("median of no samples");
  std::vector<double> v(samples.begin(), samples.end());
  const std::size_t mid = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  return v[mid];
}

double stddev(std::span<const double> samples) {
  if (samples.size() < 2) return 0.0;
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  return std::sqrt(ss / static_cast<double>(samples.size() - 1));
}

std::vector<BenchRecord> run_benchmark(std::span<const BenchImage> images,
                                       std::span<const WrapMode> variants, const AesKey& key,
                                       const ChaosSecret& secret, const BenchOptions& options) {
  if (options.reps == 0) throw DomainError("benchmark needs at least one repetition");

  // Per-record state: the closures capture the image, the secret and the
  // warm-up ciphertext, so everything lives in stable storage.
  struct Cell {
    ChaosSecret secret;
    const BenchImage* image = nullptr;
    AesKey effective;
    BmpImage ciphertext;
    std::size_t wrap_batch = 0, enc_batch = 0, dec_batch = 0;
    BenchRecord rec;
  };
  std::vector<Cell> cells;
  cells.reserve(images.size() * variants.size());
  for (WrapMode variant : variants) {
    ChaosSecret vs = secret;
    vs.mode = variant;
    vs.validate();
    for (const BenchImage& bi : images) {
      // Warm-up pass, also a correctness check outside the timed region.
      const AesKey eff = effective_cipher_key(key, vs);
      BmpImage enc = encrypt_image(bi.image, expand_key(eff));
      if (decrypt_image(enc, expand_key(eff)).pixels != bi.image.pixels) {
        throw Error("benchmark round trip failed for '" + bi.name + "'");
      }
      Cell c{vs, &bi, eff, std::move(enc), 0, 0, 0, {}};
      c.rec.variant = variant;
      c.rec.image_name = bi.name;
      c.rec.repetitions = options.reps;
      cells.push_back(std::move(c));
    }
  }

  auto wrap_phase = [&key](const Cell& c) { return [&] { (void)effective_cipher_key(key, c.secret); }; };
  auto encrypt_phase = [](const Cell& c) {
    return [&] { (void)encrypt_image(c.image->image, expand_key(c.effective)); };
  };
  auto decrypt_phase = [](const Cell& c) { return [&] { (void)decrypt_image(c.ciphertext, expand_key(c.effective)); }; };

  for (Cell& c : cells) {
    if (c.rec.variant != WrapMode::Standard) c.wrap_batch = calibrate_batch(wrap_phase(c), options.min_sample_s);
    c.enc_batch = calibrate_batch(encrypt_phase(c), options.min_sample_s);
    c.dec_batch = calibrate_batch(decrypt_phase(c), options.min_sample_s);
  }

  // Round-robin over the cells so slow drift (frequency scaling, cache
  // pressure from other tenants) spreads evenly across variants.
  for (std::size_t r = 0; r < options.reps; ++r) {
    for (Cell& c : cells) {
      c.rec.wrap_samples.push_back(c.wrap_batch ? time_batch(wrap_phase(c), c.wrap_batch) : 0.0);
      c.rec.encrypt_samples.push_back(time_batch(encrypt_phase(c), c.enc_batch));
      c.rec.decrypt_samples.push_back(time_batch(decrypt_phase(c), c.dec_batch));
    }
  }

  std::vector<BenchRecord> records;
  records.reserve(cells.size());
  for (Cell& c : cells) {
    BenchRecord& rec = c.rec;
    rec.wrap_time_s = c.wrap_batch ? median(rec.wrap_samples) : 0.0;
    rec.encrypt_time_s = median(rec.encrypt_samples);
    rec.decrypt_time_s = median(rec.decrypt_samples);
    rec.total_time_s = rec.wrap_time_s + rec.encrypt_time_s + rec.decrypt_time_s;
    records.push_back(std::move(rec));
  }
  return records;
}

std::string emit_csv(std::span<const BenchRecord> records) {
  std::vector<const BenchRecord*> order;
  for (const auto& r : records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const BenchRecord* a, const BenchRecord* b) {
    return mode_rank(a->variant) < mode_rank(b->variant);
  });

  std::string out = "variant,image,wrap_s,encrypt_s,decrypt_s,total_s,reps\n";
  for (const BenchRecord* r : order) {
    out += std::string(to_string(r->variant)) + ',' + r->image_name + ',' +
           format_seconds(r->wrap_time_s) + ',' + format_seconds(r->encrypt_time_s) + ',' +
           format_seconds(r->decrypt_time_s) + ',' + format_seconds(r->total_time_s) + ',' +
           std::to_string(r->repetitions) + '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != "variant,image,wrap_s,encrypt_s,decrypt_s,total_s,reps") {
        throw MalformedInput("bench CSV has an unexpected header");
      }
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> f;
    for (;;) {
      const auto comma = line.find(',');
      f.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (f.size() != 7) {
      throw MalformedInput("bench CSV line " + std::to_string(line_no) + ": expected 7 fields");
    }
    BenchRecord r;
    try {
      r.variant = parse_wrap_mode(f[0]);
    } catch (const DomainError&) {
      throw MalformedInput("bench CSV line " + std::to_string(line_no) + ": bad variant");
    }
    r.image_name = std::string(f[1]);
    r.wrap_time_s = parse_double(f[2], line_no);
    r.encrypt_time_s = parse_double(f[3], line_no);
    r.decrypt_time_s = parse_double(f[4], line_no);
    r.total_time_s = parse_double(f[5], line_no);
    r.repetitions = static_cast<std::size_t>(parse_double(f[6], line_no));
    out.push_back(std::move(r));
  }
  if (line_no == 0) throw MalformedInput("bench CSV is empty");
  return out;
}

std::string emit_gnuplot(std::span<const BenchRecord> records) {
  std::vector<std::string> image_order;
  std::map<std::string, std::map<std::size_t, double>> table;
  std::vector<bool> present(std::size(kAllModes), false);
  for (const auto& r : records) {
    if (!table.contains(r.image_name)) image_order.push_back(r.image_name);
    table[r.image_name][mode_rank(r.variant)] = r.total_time_s;
    present[mode_rank(r.variant)] = true;
  }

  std::ostringstream os;
  os << "# image";
  for (WrapMode m : kAllModes) {
    if (present[mode_rank(m)]) os << ' ' << to_string(m);
  }
  os << '\n';
  for (const auto& name : image_order) {
    os << name;
    for (WrapMode m : kAllModes) {
      if (!present[mode_rank(m)]) continue;
      const auto& row = table[name];
      const auto it = row.find(mode_rank(m));
      os << ' ' << (it == row.end() ? std::string("nan") : format_seconds(it->second));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace chaoskey
