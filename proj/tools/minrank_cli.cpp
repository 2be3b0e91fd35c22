// Copyright 2026 The minrank-keygen Authors
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
//
///////////////////////////////////////////////////////////////////////////////

// minrank-cli: key generation, verification, size tables, statistics and
// timing, all through the C API.

#include <minrank/minrank.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct ExitError {
  int code;
  std::string message;
};

struct ParamsDeleter {
  void operator()(minrank_params* p) const { minrank_params_free(p); }
};
struct KeypairDeleter {
  void operator()(minrank_keypair* k) const { minrank_keypair_free(k); }
};
using ParamsPtr = std::unique_ptr<minrank_params, ParamsDeleter>;
using KeypairPtr = std::unique_ptr<minrank_keypair, KeypairDeleter>;

void check(minrank_status s, int exit_code) {
  if (s == MINRANK_OK) return;
  std::string msg = minrank_status_name(s);
  if (*minrank_last_error() != '\0') msg += std::string(": ") + minrank_last_error();
  throw ExitError{exit_code, msg};
}

int exit_code_for(minrank_status s) {
  return s == MINRANK_E_INVALID_PARAMS || s == MINRANK_E_INVALID_ARGUMENT ||
                 s == MINRANK_E_INVALID_KIND || s == MINRANK_E_TOO_LARGE
             ? kExitUsage
             : kExitFail;
}

void check(minrank_status s) { check(s, exit_code_for(s)); }

// ---------------------------------------------------------------------------

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) return std::nullopt;
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(hex[2 * i]);
    const int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

// --seed, then $MINRANK_SEED, then OS entropy.
std::vector<std::uint8_t> resolve_seed(const std::string& flag, std::size_t entropy_bytes) {
  std::string hex = flag;
  if (hex.empty()) {
    if (const char* env = std::getenv("MINRANK_SEED"); env != nullptr) hex = env;
  }
  if (hex.empty()) {
    std::vector<std::uint8_t> seed(entropy_bytes);
    check(minrank_random_seed(seed.data(), seed.size()), kExitFail);
    return seed;
  }
  auto bytes = from_hex(hex);
  if (!bytes || bytes->empty()) throw ExitError{kExitUsage, "seed is not a hex string: " + hex};
  return *bytes;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kExitIo, "cannot open " + path};
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw ExitError{kExitIo, "read failed: " + path};
  return data;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ExitError{kExitIo, "cannot create " + path};
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw ExitError{kExitIo, "write failed: " + path};
}

// ---------------------------------------------------------------------------

struct ParamFlags {
  std::string set;
  unsigned q = 0, m = 0, n = 0, k = 0, r = 0, lambda = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--set", set, "Named parameter set (see `sizes`)");
    cmd->add_option("--q", q, "Field size");
    cmd->add_option("--m", m, "Rows");
    cmd->add_option("--n", n, "Columns");
    cmd->add_option("--k", k, "Number of matrices M_1..M_k");
    cmd->add_option("--r", r, "Target rank");
    cmd->add_option("--lambda", lambda, "Security parameter in bits");
  }

  ParamsPtr resolve() const {
    minrank_params* p = nullptr;
    const bool explicit_params = q || m || n || k || r || lambda;
    if (!set.empty() && explicit_params) {
      throw ExitError{kExitUsage, "use either --set or explicit --q/--m/--n/--k/--r/--lambda"};
    }
    if (explicit_params) {
      check(minrank_params_create(q, m, n, k, r, lambda == 0 ? 128 : lambda, &p), kExitUsage);
    } else {
      check(minrank_params_by_name(set.empty() ? "mirith-Ia" : set.c_str(), &p), kExitUsage);
    }
    return ParamsPtr(p);
  }
};

minrank_params_info info_of(const minrank_params* p) {
  minrank_params_info info{};
  check(minrank_params_info_get(p, &info));
  return info;
}

std::string set_label(const minrank_params_info& i) {
  if (*i.name != '\0') return i.name;
  return "custom-" + std::to_string(i.q) + "-" + std::to_string(i.m) + "-" + std::to_string(i.n) +
         "-" + std::to_string(i.k) + "-" + std::to_string(i.r);
}

std::vector<std::uint8_t> export_blob(const minrank_keypair* kp, bool secret) {
  auto fn = secret ? minrank_keypair_export_sk : minrank_keypair_export_pk;
  std::size_t len = 0;
  check(fn(kp, nullptr, 0, &len));
  std::vector<std::uint8_t> blob(len);
  check(fn(kp, blob.data(), blob.size(), &len));
  return blob;
}

void print(const json& j, const std::string& format, const std::vector<std::string>& text_lines) {
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& l : text_lines) std::cout << l << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_keygen(const ParamFlags& pf, int variant, const std::string& seed_hex,
               const std::string& out, const std::string& format) {
  const ParamsPtr p = pf.resolve();
  const auto info = info_of(p.get());
  std::size_t seed_len = 0;
  check(minrank_seed_bytes(p.get(), &seed_len));
  const auto seed = resolve_seed(seed_hex, seed_len);
  if (seed.size() != seed_len) {
    throw ExitError{kExitUsage, "seed must be " + std::to_string(seed_len) + " bytes (" +
                                    std::to_string(2 * seed_len) + " hex digits)"};
  }
  minrank_keypair* raw = nullptr;
  check(minrank_keygen(p.get(), variant, seed.data(), seed.size(), &raw));
  const KeypairPtr kp(raw);
  const auto pk = export_blob(kp.get(), false);
  const auto sk = export_blob(kp.get(), true);
  write_file(out + ".pk", pk);
  write_file(out + ".sk", sk);

  std::uint64_t pk_bits = 0;
  std::uint64_t sk_bits = 0;
  check(minrank_pk_size_bits(p.get(), variant, &pk_bits));
  check(minrank_sk_size_bits(p.get(), variant, &sk_bits));
  json j;
  j["set"] = set_label(info);
  j["variant"] = variant;
  j["seed"] = to_hex(seed);
  j["attempts"] = minrank_keypair_attempts(kp.get());
  j["pk_file"] = out + ".pk";
  j["sk_file"] = out + ".sk";
  j["pk_bits"] = pk_bits;
  j["pk_bytes"] = pk.size();
  j["sk_bits"] = sk_bits;
  j["sk_bytes"] = sk.size();
  j["pk"] = to_hex(pk);
  j["sk"] = to_hex(sk);
  std::vector<std::string> lines;
  if (format == "csv") {
    lines.push_back("set,variant,seed,attempts,pk_file,sk_file,pk_bits,pk_bytes,sk_bits,sk_bytes,pk,sk");
    std::string row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!row.empty()) row += ',';
      row += it->is_string() ? it->get<std::string>() : it->dump();
    }
    lines.push_back(row);
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      lines.push_back(it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()));
    }
  }
  print(j, format, lines);
  return 0;
}

int cmd_verify(const ParamFlags& pf, int variant, const std::string& in, std::string pk_path,
               std::string sk_path, const std::string& format) {
  const ParamsPtr p = pf.resolve();
  if (pk_path.empty()) pk_path = in + ".pk";
  if (sk_path.empty()) sk_path = in + ".sk";
  const auto pk = read_file(pk_path);
  const auto sk = read_file(sk_path);
  minrank_keypair* raw = nullptr;
  const minrank_status st =
      minrank_keypair_load(p.get(), variant, pk.data(), pk.size(), sk.data(), sk.size(), &raw);
  if (st == MINRANK_E_MALFORMED_KEY) {
    std::cerr << "malformed key: " << minrank_last_error() << '\n';
    return kExitFail;
  }
  check(st);
  const KeypairPtr kp(raw);
  minrank_verify_result res{};
  check(minrank_keypair_verify(kp.get(), &res));
  const bool ok = res.keys_match && res.witness_valid;
  json j;
  j["keys_match"] = res.keys_match ? "yes" : "no";
  j["witness"] = res.witness_valid ? "valid" : "invalid";
  j["rank"] = res.rank;
  j["canonical"] = res.canonical ? "yes" : "no";
  j["result"] = ok ? "ok" : "fail";
  std::vector<std::string> lines;
  if (format == "csv") {
    lines.push_back("keys_match,witness,rank,canonical,result");
    lines.push_back(j["keys_match"].get<std::string>() + "," + j["witness"].get<std::string>() + "," +
                    std::to_string(res.rank) + "," + j["canonical"].get<std::string>() + "," +
                    j["result"].get<std::string>());
  } else {
    lines.push_back("keys match: " + j["keys_match"].get<std::string>());
    lines.push_back("witness: " + j["witness"].get<std::string>());
    lines.push_back("rank: " + std::to_string(res.rank));
    lines.push_back("canonical: " + j["canonical"].get<std::string>());
    lines.push_back("result: " + j["result"].get<std::string>());
  }
  print(j, format, lines);
  return ok ? 0 : kExitFail;
}

int cmd_sizes(const std::string& format) {
  json rows = json::array();
  std::vector<std::string> lines;
  char buf[160];
  if (format == "csv") {
    lines.emplace_back("set,lambda,q,m,n,k,r,keygen1,keygen2,keygen3");
  } else {
    std::snprintf(buf, sizeof buf, "%-12s %6s %3s %3s %3s %4s %3s %8s %8s %8s", "set", "lambda",
                  "q", "m", "n", "k", "r", "keygen1", "keygen2", "keygen3");
    lines.emplace_back(buf);
  }
  for (std::size_t i = 0; i < minrank_registry_count(); ++i) {
    const std::string name = minrank_registry_name(i);
    if (name.rfind("mirith-", 0) != 0) continue;
    minrank_params* raw = nullptr;
    check(minrank_params_by_name(name.c_str(), &raw));
    const ParamsPtr p(raw);
    const auto info = info_of(p.get());
    std::uint64_t bits[3];
    for (int v = 1; v <= 3; ++v) check(minrank_pk_size_bits(p.get(), v, &bits[v - 1]));
    rows.push_back({{"set", name}, {"lambda", info.lambda}, {"q", info.q}, {"m", info.m},
                    {"n", info.n}, {"k", info.k}, {"r", info.r}, {"keygen1", bits[0]},
                    {"keygen2", bits[1]}, {"keygen3", bits[2]}});
    if (format == "csv") {
      std::snprintf(buf, sizeof buf, "%s,%u,%u,%u,%u,%u,%u,%llu,%llu,%llu", name.c_str(),
                    info.lambda, info.q, info.m, info.n, info.k, info.r,
                    static_cast<unsigned long long>(bits[0]),
                    static_cast<unsigned long long>(bits[1]),
                    static_cast<unsigned long long>(bits[2]));
    } else {
      std::snprintf(buf, sizeof buf, "%-12s %6u %3u %3u %3u %4u %3u %8llu %8llu %8llu",
                    name.c_str(), info.lambda, info.q, info.m, info.n, info.k, info.r,
                    static_cast<unsigned long long>(bits[0]),
                    static_cast<unsigned long long>(bits[1]),
                    static_cast<unsigned long long>(bits[2]));
    }
    lines.emplace_back(buf);
  }
  print(json{{"unit", "bits"}, {"public_key_sizes", rows}}, format, lines);
  return 0;
}

struct StatsSink {
  std::string format;
  json reports = json::array();
  std::vector<std::string> lines;
};

void on_report(const minrank_report* r, void* user) {
  auto* sink = static_cast<StatsSink*>(user);
  if (sink->format == "csv") {
    sink->lines.emplace_back(r->csv_row);
  } else {
    sink->lines.push_back(std::string(2 * r->depth, ' ') + r->text);
  }
  sink->reports.push_back({{"depth", r->depth},
                           {"name", r->name},
                           {"claim", r->claim},
                           {"trials", r->trials},
                           {"successes", r->successes},
                           {"estimate", r->estimate},
                           {"bound", r->bound},
                           {"sigma", r->sigma},
                           {"chi2", r->chi2},
                           {"dof", r->dof},
                           {"p_value", r->p_value},
                           {"pass", r->pass != 0}});
}

int cmd_stats(const std::string& kind, const minrank_stats_config& cfg, std::uint64_t trials,
              const std::string& seed_hex, const std::string& format) {
  const auto seed = resolve_seed(seed_hex, 16);
  std::vector<std::string> kinds;
  if (kind == "all") {
    for (std::size_t i = 0; i < minrank_stats_kind_count(); ++i) {
      kinds.emplace_back(minrank_stats_kind_name(i));
    }
  } else {
    kinds.push_back(kind);
  }
  StatsSink sink;
  sink.format = format;
  if (format == "csv") sink.lines.emplace_back(minrank_report_csv_header());
  bool all_pass = true;
  for (const auto& k : kinds) {
    int pass = 0;
    check(minrank_stats_run(k.c_str(), &cfg, trials, seed.data(), seed.size(), on_report, &sink,
                            &pass));
    all_pass = all_pass && pass;
  }
  if (format == "text") sink.lines.push_back(std::string("seed: ") + to_hex(seed));
  print(json{{"seed", to_hex(seed)}, {"pass", all_pass}, {"reports", sink.reports}}, format,
        sink.lines);
  return all_pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct Timing {
  double median_us;
  double p95_us;
};

Timing summarize(std::vector<double> us) {
  std::sort(us.begin(), us.end());
  const auto at = [&](double frac) {
    const auto idx = static_cast<std::size_t>(frac * static_cast<double>(us.size() - 1) + 0.5);
    return us[std::min(idx, us.size() - 1)];
  };
  return {at(0.5), at(0.95)};
}

template <typename Fn>
double time_us(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const ParamFlags& pf, int variant, unsigned runs, unsigned warmup,
              const std::string& seed_hex, const std::string& format) {
  const ParamsPtr p = pf.resolve();
  const auto info = info_of(p.get());
  std::size_t seed_len = 0;
  check(minrank_seed_bytes(p.get(), &seed_len));
  // Run i uses the base seed with i folded into its last bytes, so a fixed
  // --seed replays the same keys.
  const auto base = resolve_seed(seed_hex, seed_len);
  if (base.size() != seed_len) {
    throw ExitError{kExitUsage, "seed must be " + std::to_string(seed_len) + " bytes"};
  }
  if (runs == 0) throw ExitError{kExitUsage, "--runs must be positive"};
  auto seed_for = [&](unsigned i) {
    auto s = base;
    for (std::size_t b = 0; b < 4 && b < s.size(); ++b) {
      s[s.size() - 1 - b] ^= static_cast<std::uint8_t>(i >> (8 * b));
    }
    return s;
  };

  json rows = json::array();
  std::vector<std::string> lines;
  if (format == "csv") lines.emplace_back("set,variant,operation,runs,median_us,p95_us");
  for (int v = 1; v <= 3; ++v) {
    if (variant != 0 && v != variant) continue;
    std::vector<double> t_keygen;
    std::vector<double> t_pk;
    std::vector<double> t_sk;
    for (unsigned i = 0; i < warmup + runs; ++i) {
      const auto s = seed_for(i);
      minrank_keypair* raw = nullptr;
      const double tk = time_us([&] { check(minrank_keygen(p.get(), v, s.data(), s.size(), &raw)); });
      const KeypairPtr kp(raw);
      const auto pk = export_blob(kp.get(), false);
      const auto sk = export_blob(kp.get(), true);
      const double tp = time_us([&] { check(minrank_decompress_pk(p.get(), v, pk.data(), pk.size())); });
      const double ts = time_us([&] { check(minrank_decompress_sk(p.get(), v, sk.data(), sk.size())); });
      if (i < warmup) continue;
      t_keygen.push_back(tk);
      t_pk.push_back(tp);
      t_sk.push_back(ts);
    }
    const std::pair<const char*, std::vector<double>*> ops[] = {
        {"keygen", &t_keygen}, {"decompress_pk", &t_pk}, {"decompress_sk", &t_sk}};
    for (const auto& [op, samples] : ops) {
      const Timing t = summarize(*samples);
      rows.push_back({{"set", set_label(info)}, {"variant", v}, {"operation", op}, {"runs", runs},
                      {"median_us", t.median_us}, {"p95_us", t.p95_us}});
      char buf[160];
      if (format == "csv") {
        std::snprintf(buf, sizeof buf, "%s,%d,%s,%u,%.1f,%.1f", set_label(info).c_str(), v, op, runs,
                      t.median_us, t.p95_us);
      } else {
        std::snprintf(buf, sizeof buf, "%-14s v%d %-14s median %10.1f us  p95 %10.1f us",
                      set_label(info).c_str(), v, op, t.median_us, t.p95_us);
      }
      lines.emplace_back(buf);
    }
  }
  print(json{{"seed", to_hex(base)}, {"results", rows}}, format, lines);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MinRank key generation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(minrank_version()));

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  std::string seed_hex;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_hex, "Seed as hex (default: $MINRANK_SEED, then OS entropy)");
  };

  ParamFlags pf;
  int variant = 3;

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair and write <out>.pk/<out>.sk");
  pf.add_to(keygen);
  keygen->add_option("--variant", variant, "Key generation variant")->check(CLI::Range(1, 3));
  add_seed(keygen);
  std::string out = "key";
  keygen->add_option("--out", out, "Output path prefix");
  add_format(keygen);

  auto* verify = app.add_subcommand("verify", "Check that a key pair decompresses to a valid witness");
  pf.add_to(verify);
  verify->add_option("--variant", variant, "Key generation variant")->check(CLI::Range(1, 3));
  std::string in = "key";
  std::string pk_path;
  std::string sk_path;
  verify->add_option("--in", in, "Input path prefix");
  verify->add_option("--pk", pk_path, "Public key file (default <in>.pk)");
  verify->add_option("--sk", sk_path, "Secret key file (default <in>.sk)");
  add_format(verify);

  auto* sizes = app.add_subcommand("sizes", "Public key sizes in bits for the named sets");
  add_format(sizes);

  auto* stats = app.add_subcommand("stats", "Monte Carlo checks of the probability bounds");
  std::string kind;
  std::vector<std::string> kind_names{"all"};
  for (std::size_t i = 0; i < minrank_stats_kind_count(); ++i) {
    kind_names.emplace_back(minrank_stats_kind_name(i));
  }
  stats->add_option("kind", kind, "Suite to run")->required()->check(CLI::IsMember(kind_names));
  minrank_stats_config cfg{};
  std::uint64_t trials = 0;
  stats->add_option("--q", cfg.q, "Field size (default 16; 2 for distribution/oracle)");
  stats->add_option("--s", cfg.s, "Rows for fullrank/invertible/product");
  stats->add_option("--t", cfg.t, "Columns for fullrank/product");
  stats->add_option("--m", cfg.m);
  stats->add_option("--n", cfg.n);
  stats->add_option("--k", cfg.k);
  stats->add_option("--r", cfg.r);
  stats->add_flag("--toy", "Toy dimensions (the default)");
  stats->add_option("--trials", trials, "Trials or samples per side (default per suite)");
  add_seed(stats);
  add_format(stats);

  auto* bench = app.add_subcommand("bench", "Time key generation and decompression");
  pf.add_to(bench);
  int bench_variant = 0;
  unsigned runs = 20;
  unsigned warmup = 3;
  bench->add_option("--variant", bench_variant, "Variant, 0 for all")->check(CLI::Range(0, 3));
  bench->add_option("--runs", runs, "Timed runs");
  bench->add_option("--warmup", warmup, "Untimed runs first");
  add_seed(bench);
  add_format(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(pf, variant, seed_hex, out, format);
    if (*verify) return cmd_verify(pf, variant, in, pk_path, sk_path, format);
    if (*sizes) return cmd_sizes(format);
    if (*stats) return cmd_stats(kind, cfg, trials, seed_hex, format);
    if (*bench) return cmd_bench(pf, bench_variant, runs, warmup, seed_hex, format);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  return kExitUsage;
}
