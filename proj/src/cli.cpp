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

#include "chaoskey/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "chaoskey/analysis.hpp"
#include "chaoskey/bench.hpp"
#include "chaoskey/bmp.hpp"
#include "chaoskey/error.hpp"
#include "chaoskey/hex.hpp"
#include "chaoskey/image_cipher.hpp"
#include "chaoskey/key_wrap.hpp"
#include "chaoskey/params_io.hpp"

namespace chaoskey::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CliConfig {
  std::string key_hex;
  std::string mode;
  std::string params_path;
  std::string in_path;
  std::string out_path;
  std::string csv_path;
  std::string gnuplot_path;
  std::string modes = "all";
  std::vector<std::string> images;
  std::size_t reps = 5;
  std::size_t bits = 100000;
  std::size_t lag = 1;
  bool raw = false;
};

const std::vector<std::string> kModeNames = {"standard", "logistic", "cross", "dual"};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

AesKey parse_key(const std::string& hex) {
  try {
    return AesKey::from_hex(hex);
  } catch (const Error& e) {
    throw UsageError(std::string("--key: ") + e.what());
  }
}

ChaosParamSet load_params(const std::string& path) {
  const auto bytes = read_file(path);
  return parse_params(std::string(bytes.begin(), bytes.end()));
}

ChaosSecret load_secret(const CliConfig& cfg) {
  const WrapMode mode = parse_wrap_mode(cfg.mode);
  if (mode == WrapMode::Standard) return ChaosSecret::standard();
  if (cfg.params_path.empty()) {
    throw UsageError("--mode " + cfg.mode + " requires --params");
  }
  ChaosSecret secret = ChaosSecret::from_params(mode, load_params(cfg.params_path));
  try {
    secret.validate();
  } catch (const MissingParams& e) {
    throw UsageError(std::string(e.what()) + " in '" + cfg.params_path + "'");
  }
  return secret;
}

int cmd_wrap(const CliConfig& cfg, std::ostream& out) {
  const AesKey key = parse_key(cfg.key_hex);
  const ChaosSecret secret = load_secret(cfg);
  out << wrap_key(key, secret).key.to_hex() << '\n';
  return kOk;
}

int cmd_crypt(const CliConfig& cfg, bool encrypt, std::ostream& out) {
  const AesKey key = parse_key(cfg.key_hex);
  const ChaosSecret secret = load_secret(cfg);
  const BmpImage in = load_bmp(read_file(cfg.in_path));
  const BmpImage result = encrypt ? encrypt_image(in, key, secret) : decrypt_image(in, key, secret);
  write_file_atomic(cfg.out_path, save_bmp(result));
  out << (encrypt ? "encrypted " : "decrypted ") << cfg.in_path << " -> " << cfg.out_path << " ("
      << result.width << 'x' << result.height << ", " << result.bit_depth << "-bit, mode "
      << cfg.mode << ")\n";
  return kOk;
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  std::string source;
  Bitstream bits;
  std::vector<double> series;
  std::vector<std::uint8_t> bytes;

  if (!cfg.in_path.empty()) {
    source = cfg.in_path;
    bytes = read_file(cfg.in_path);
    if (!cfg.raw) bytes = load_bmp(bytes).pixels;
    if (bytes.empty()) throw MalformedInput("nothing to analyze in '" + cfg.in_path + "'");
    bits = Bitstream::from_bytes(bytes, bytes.size() * 8);
    series.assign(bytes.begin(), bytes.end());
  } else {
    if (cfg.mode.empty()) throw UsageError("analyze needs --in or --mode");
    const ChaosSecret secret = load_secret(cfg);
    if (secret.mode == WrapMode::Standard) {
      throw UsageError("analyze --mode standard has no keystream to analyze");
    }
    if (cfg.bits == 0) throw UsageError("--bits must be at least 1");
    source = cfg.mode;
    bits = wrap_keystream(secret, cfg.bits);
    bytes = bits.to_bytes();
    series.assign(bits.bits().begin(), bits.bits().end());
  }

  const double ones = monobit_fraction(bits);
  std::string corr = "undefined";
  if (series.size() > cfg.lag) {
    try {
      corr = fixed6(serial_correlation(series, cfg.lag));
    } catch (const ConstantInput&) {
    }
  }
  const double entropy = byte_entropy(bytes);

  out << "source=" << source << '\n'
      << "bits=" << bits.size() << '\n'
      << "ones_fraction=" << fixed6(ones) << '\n'
      << "serial_correlation_lag" << cfg.lag << '=' << corr << '\n'
      << "byte_entropy=" << fixed6(entropy) << '\n';

  if (!cfg.csv_path.empty()) {
    const std::string csv = "source,bits,ones_fraction,lag,serial_correlation,byte_entropy\n" +
                            source + ',' + std::to_string(bits.size()) + ',' + fixed6(ones) + ',' +
                            std::to_string(cfg.lag) + ',' + corr + ',' + fixed6(entropy) + '\n';
    write_file_atomic(cfg.csv_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                                              csv.size()));
  }
  return kOk;
}

std::vector<WrapMode> parse_mode_list(const std::string& list) {
  if (list == "all") return {std::begin(kAllModes), std::end(kAllModes)};
  std::vector<WrapMode> modes;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      modes.push_back(parse_wrap_mode(item));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--modes: ") + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return modes;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  if (cfg.reps == 0) throw UsageError("--reps must be at least 1");
  const std::vector<WrapMode> modes = parse_mode_list(cfg.modes);
  const AesKey key = parse_key(cfg.key_hex.empty() ? "000102030405060708090a0b0c0d0e0f" : cfg.key_hex);

  ChaosParamSet params{LogisticParams{}, CrossParams{}};
  if (!cfg.params_path.empty()) params = load_params(cfg.params_path);
  ChaosSecret secret = ChaosSecret::from_params(WrapMode::Standard, params);
  for (WrapMode m : modes) {
    secret.mode = m;
    try {
      secret.validate();
    } catch (const MissingParams& e) {
      throw UsageError(std::string(e.what()) + " in '" + cfg.params_path + "'");
    }
  }

  std::vector<BenchImage> images;
  for (const auto& path : cfg.images) {
    images.push_back({std::filesystem::path(path).filename().string(), load_bmp(read_file(path))});
  }

  BenchOptions opts;
  opts.reps = cfg.reps;
  const auto records = run_benchmark(images, modes, key, secret, opts);
  const std::string csv = emit_csv(records);
  if (cfg.out_path.empty()) {
    out << csv;
  } else {
    write_file_atomic(cfg.out_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                                              csv.size()));
    out << "wrote " << records.size() << " records to " << cfg.out_path << '\n';
  }
  if (!cfg.gnuplot_path.empty()) {
    const std::string table = emit_gnuplot(records);
    write_file_atomic(cfg.gnuplot_path, std::span(reinterpret_cast<const std::uint8_t*>(table.data()),
                                                  table.size()));
  }
  return kOk;
}

void add_key_mode_params(CLI::App* cmd, CliConfig& cfg, bool key_required) {
  auto* key = cmd->add_option("--key", cfg.key_hex, "AES key as 32, 48 or 64 hex digits");
  if (key_required) key->required();
  cmd->add_option("--params", cfg.params_path, "chaos parameter file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"chaoskey: AES with a chaotically pre-encrypted key"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* wrap = app.add_subcommand("wrap", "print the chaos-wrapped key");
  add_key_mode_params(wrap, cfg, true);
  wrap->add_option("--mode", cfg.mode, "standard|logistic|cross|dual")
      ->required()
      ->check(CLI::IsMember(kModeNames));

  CLI::App* crypt[2] = {app.add_subcommand("encrypt", "encrypt a BMP image"),
                        app.add_subcommand("decrypt", "decrypt a BMP image")};
  for (auto* cmd : crypt) {
    add_key_mode_params(cmd, cfg, true);
    cmd->add_option("--mode", cfg.mode, "standard|logistic|cross|dual")
        ->required()
        ->check(CLI::IsMember(kModeNames));
    cmd->add_option("--in", cfg.in_path, "input BMP")->required();
    cmd->add_option("--out", cfg.out_path, "output BMP")->required();
  }

  auto* analyze = app.add_subcommand("analyze", "randomness statistics of a keystream or file");
  analyze->add_option("--mode", cfg.mode, "keystream source: logistic|cross|dual")
      ->check(CLI::IsMember(kModeNames));
  analyze->add_option("--params", cfg.params_path, "chaos parameter file");
  analyze->add_option("--bits", cfg.bits, "keystream length in bits")->capture_default_str();
  analyze->add_option("--lag", cfg.lag, "serial correlation lag")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* in_opt = analyze->add_option("--in", cfg.in_path, "analyze a BMP pixel payload instead");
  analyze->add_flag("--raw", cfg.raw, "with --in: analyze all file bytes, not a BMP payload")
      ->needs(in_opt);
  analyze->add_option("--csv", cfg.csv_path, "also write results as CSV");

  auto* bench = app.add_subcommand("bench", "CPU-time comparison of the four variants");
  bench->add_option("--images", cfg.images, "comma-separated BMP paths")
      ->required()
      ->delimiter(',');
  bench->add_option("--modes", cfg.modes, "all or a comma-separated subset")->capture_default_str();
  bench->add_option("--reps", cfg.reps, "timed repetitions per phase")->capture_default_str();
  bench->add_option("--out", cfg.out_path, "CSV output (stdout when omitted)");
  bench->add_option("--gnuplot", cfg.gnuplot_path, "also write a gnuplot data table");
  add_key_mode_params(bench, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (wrap->parsed()) return cmd_wrap(cfg, out);
    if (crypt[0]->parsed()) return cmd_crypt(cfg, true, out);
    if (crypt[1]->parsed()) return cmd_crypt(cfg, false, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
    return kUsage;
  } catch (const DegenerateOrbit& e) {
    err << "chaoskey: degenerate orbit: " << e.what() << '\n';
    return kDegenerateOrbit;
  } catch (const BadPadding& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kBadPadding;
  } catch (const UsageError& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kUsage;
  } catch (const MissingParams& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidKeyLength& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "chaoskey: invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kIoOrFormat;
  } catch (const std::exception& e) {
    err << "chaoskey: " << e.what() << '\n';
    return kIoOrFormat;
  }
}

}  // namespace chaoskey::cli
