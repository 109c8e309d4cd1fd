/*
 * Copyright 2026 The embsp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "error.hpp"

namespace embsp {

const char* to_string(DriverKind k) {
  switch (k) {
    case DriverKind::ExplicitSync: return "unix";
    case DriverKind::AsyncQueued: return "async";
    case DriverKind::MemoryMapped: return "mmap";
    case DriverKind::InMemory: return "mem";
  }
  return "?";
}

const char* to_string(Layout l) {
  return l == Layout::WholeContextPerDisk ? "whole" : "striped";
}

namespace {

[[noreturn]] void config_error(const std::string& msg) {
  fail(EMBSP_ERR_CONFIG, msg);
}

uint64_t parse_u64(const std::string& key, const std::string& s) {
  // Accept decimal with an optional K/M/G binary suffix.
  std::string body = s;
  uint64_t mult = 1;
  if (!body.empty()) {
    char c = body.back();
    if (c == 'K' || c == 'k') mult = 1ull << 10;
    if (c == 'M' || c == 'm') mult = 1ull << 20;
    if (c == 'G' || c == 'g') mult = 1ull << 30;
    if (mult != 1) body.pop_back();
  }
  uint64_t val = 0;
  auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), val);
  if (ec != std::errc() || p != body.data() + body.size() || body.empty())
    fail(EMBSP_ERR_ARG, "malformed value for --" + key + ": '" + s + "'");
  return val * mult;
}

double parse_f64(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    double d = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return d;
  } catch (const std::exception&) {
    fail(EMBSP_ERR_ARG, "malformed value for --" + key + ": '" + s + "'");
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

void config_set(SimConfig& cfg, const std::string& key,
                const std::string& value) {
  if (key == "p") cfg.P = parse_u64(key, value);
  else if (key == "rank") cfg.rank = parse_u64(key, value);
  else if (key == "v") cfg.v = parse_u64(key, value);
  else if (key == "k") cfg.k = parse_u64(key, value);
  else if (key == "mu") cfg.mu = parse_u64(key, value);
  else if (key == "disks") cfg.disk_paths = split_commas(value);
  else if (key == "block-size") cfg.B = parse_u64(key, value);
  else if (key == "sigma") cfg.sigma = parse_u64(key, value);
  else if (key == "alpha") cfg.alpha = parse_u64(key, value);
  else if (key == "io") {
    if (value == "unix") cfg.driver = DriverKind::ExplicitSync;
    else if (value == "async") cfg.driver = DriverKind::AsyncQueued;
    else if (value == "mmap") cfg.driver = DriverKind::MemoryMapped;
    else if (value == "mem") cfg.driver = DriverKind::InMemory;
    else fail(EMBSP_ERR_ARG, "malformed value for --io: '" + value +
                                 "' (expected unix|async|mmap|mem)");
  } else if (key == "layout") {
    if (value == "whole") cfg.layout = Layout::WholeContextPerDisk;
    else if (value == "striped") cfg.layout = Layout::BlockStriped;
    else fail(EMBSP_ERR_ARG, "malformed value for --layout: '" + value +
                                 "' (expected whole|striped)");
    cfg.layout_set = true;
  } else if (key == "strict-accounting") {
    cfg.strict_accounting = value.empty() || value == "1" || value == "true";
  } else if (key == "keep-last-resident") {
    cfg.keep_last_resident = value.empty() || value == "1" || value == "true";
  } else if (key == "hosts") {
    cfg.hosts = split_commas(value);
  } else if (key == "app") {
    cfg.app = value;
  } else if (key == "n") {
    cfg.n = parse_u64(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "bench-out") {
    cfg.bench_out = value;
  } else if (key == "omega") {
    cfg.omega = parse_u64(key, value);
  } else if (key == "indirect-omega") {
    cfg.indirect_omega = parse_u64(key, value);
  } else if (key == "cost") {
    auto parts = split_commas(value);
    if (parts.size() != 6)
      fail(EMBSP_ERR_ARG, "malformed value for --cost: expected G,S,g,b,l,L");
    cfg.cost.G = parse_f64("cost", parts[0]);
    cfg.cost.S = parse_f64("cost", parts[1]);
    cfg.cost.g = parse_f64("cost", parts[2]);
    cfg.cost.b = parse_u64("cost", parts[3]);
    cfg.cost.l = parse_f64("cost", parts[4]);
    cfg.cost.L = parse_f64("cost", parts[5]);
    cfg.cost.provided = true;
  } else {
    fail(EMBSP_ERR_ARG, "unknown flag --" + key);
  }
}

SimConfig validate(SimConfig cfg) {
  if (cfg.P < 1) config_error("P must be >= 1");
  if (cfg.v == 0) cfg.v = cfg.P;
  if (cfg.v < cfg.P) config_error("v must be >= P (v=" + std::to_string(cfg.v) +
                                  ", P=" + std::to_string(cfg.P) + ")");
  if (cfg.v % cfg.P != 0) config_error("v not divisible by P");
  if (cfg.rank >= cfg.P) config_error("rank must be < P");
  if (cfg.D < 1) config_error("D must be >= 1");
  if (cfg.B < 1) config_error("block size B must be >= 1");
  if (cfg.k < 1) config_error("k must be >= 1");
  if (cfg.k > cfg.v / cfg.P)
    config_error("k exceeds v/P (k=" + std::to_string(cfg.k) +
                 ", v/P=" + std::to_string(cfg.v / cfg.P) + ")");
  if (cfg.mu == 0) config_error("mu must be > 0");
  if (cfg.mu % cfg.B != 0)
    config_error("mu must be a multiple of the block size B (mu=" +
                 std::to_string(cfg.mu) + ", B=" + std::to_string(cfg.B) + ")");

  if (cfg.alpha == 0)
    cfg.alpha = std::max<uint64_t>(
        1, std::min(cfg.v / cfg.P, cfg.v > 1 ? cfg.v - 1 : 1));
  if (cfg.alpha < 1) config_error("alpha must be >= 1");
  if (cfg.v > 1 && cfg.alpha >= cfg.v)
    config_error("alpha must be < v (alpha=" + std::to_string(cfg.alpha) +
                 ", v=" + std::to_string(cfg.v) + ")");

  if (!cfg.layout_set)
    cfg.layout = cfg.k >= cfg.D ? Layout::WholeContextPerDisk
                                : Layout::BlockStriped;
  if (cfg.layout == Layout::BlockStriped &&
      cfg.driver == DriverKind::MemoryMapped)
    config_error(
        "block-striped layout cannot be memory mapped (a context must be a "
        "contiguous address range); use --layout whole");

  if (cfg.disk_paths.empty())
    cfg.disk_paths.assign(cfg.D, ".");
  if (cfg.disk_paths.size() != cfg.D)
    config_error("disk path count must equal D (" +
                 std::to_string(cfg.disk_paths.size()) + " paths, D=" +
                 std::to_string(cfg.D) + ")");

  if (cfg.sigma == 0) {
    // Room for the boundary-block cache plus rooted-collective staging.
    uint64_t cache = 2 * cfg.v * (cfg.v / cfg.P) * cfg.B;
    cfg.sigma = cache + (8ull << 20);
  }

  if (cfg.P > 1) {
    if (cfg.hosts.size() != cfg.P)
      config_error("--hosts must list exactly P host:port entries");
  }

  // S is zero by definition under memory-mapped I/O.
  if (cfg.driver == DriverKind::MemoryMapped) cfg.cost.S = 0;
  if (cfg.cost.G < 0 || cfg.cost.S < 0 || cfg.cost.g < 0 || cfg.cost.l < 0 ||
      cfg.cost.L < 0)
    config_error("cost coefficients must be >= 0");
  if (cfg.cost.b == 0) config_error("cost packet size b must be >= 1");

  return cfg;
}

SimConfig parse_cli(const std::vector<std::string>& argv) {
  SimConfig cfg;
  size_t i = 0;
  while (i < argv.size()) {
    const std::string& arg = argv[i];
    if (arg.rfind("--", 0) != 0)
      fail(EMBSP_ERR_ARG, "unknown argument '" + arg + "'");
    std::string key = arg.substr(2);
    std::string value;
    auto eq = key.find('=');
    bool has_value = false;
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
      has_value = true;
    }
    bool is_switch = key == "strict-accounting" || key == "keep-last-resident";
    if (!has_value && !is_switch) {
      if (i + 1 >= argv.size())
        fail(EMBSP_ERR_ARG, "missing value for --" + key);
      value = argv[++i];
    }
    config_set(cfg, key, value);
    ++i;
  }
  return validate(cfg);
}

}  // namespace embsp
