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

#ifndef EMBSP_CONFIG_HPP
#define EMBSP_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace embsp {

enum class DriverKind { ExplicitSync, AsyncQueued, MemoryMapped, InMemory };
enum class Layout { WholeContextPerDisk, BlockStriped };

const char* to_string(DriverKind k);
const char* to_string(Layout l);

// Per-unit cost coefficients used only by the cost model; the runtime never
// sleeps to simulate time.
struct CostParams {
  double G = 0;      // seconds per delivery block
  double S = 0;      // seconds per swap block
  double g = 0;      // seconds per network packet of size b
  uint64_t b = 1;    // network packet size, bytes
  double l = 0;      // network superstep overhead, seconds
  double L = 0;      // virtual superstep overhead, seconds
  bool provided = false;
};

struct SimConfig {
  uint64_t P = 1;      // real processors
  uint64_t v = 1;      // virtual processors (0 = default to P)
  uint64_t k = 1;      // concurrent threads per real processor
  uint64_t mu = 1ull << 20;  // context size, bytes
  uint64_t D = 1;      // disks per real processor
  uint64_t B = 4096;   // block size, bytes
  uint64_t sigma = 0;  // shared buffer size, bytes (0 = default)
  uint64_t alpha = 0;  // network chunk size in messages (0 = default v/P)
  DriverKind driver = DriverKind::ExplicitSync;
  Layout layout = Layout::WholeContextPerDisk;
  bool layout_set = false;
  bool strict_accounting = false;
  std::vector<std::string> disk_paths;  // D entries
  uint64_t rank = 0;
  uint64_t seed = 1;

  // Baseline indirect delivery: per-message slot bound in bytes, rounded up
  // to B for the on-disk area.  0 disables the indirect area.
  uint64_t indirect_omega = 0;

  // Keep the last barrier arriver resident through the barrier.  Off by
  // default: it trades one swap per round for losing the deterministic
  // id-ordered schedule, which strict accounting depends on.
  bool keep_last_resident = false;

  // Test hook: nonzero seeds randomized micro-delays at scheduling points.
  uint64_t test_jitter_seed = 0;

  CostParams cost;

  // Harness fields (CLI).
  std::string app;        // psrs | psum | alltoall
  uint64_t n = 0;         // app problem size
  std::string bench_out;  // marker output path; enables benchmarking
  std::vector<std::string> hosts;  // host:port per rank, P entries when P > 1
  uint64_t omega = 0;     // message-size bound for `predict`

  uint64_t local_vps() const { return v / P; }
  uint64_t context_blocks() const { return mu / B; }
};

// Returns the config unchanged iff all invariants hold; fills defaults that
// depend on other fields (alpha, sigma, layout, disk paths) first.  Throws
// Error{EMBSP_ERR_CONFIG} naming the offending field and bound otherwise.
SimConfig validate(SimConfig cfg);

// Maps command line flags one-to-one onto SimConfig fields and validates the
// result.  argv holds flags only (no program name).
SimConfig parse_cli(const std::vector<std::string>& argv);

// Single key/value assignment ("v", "mu", "io", ...); does not validate.
void config_set(SimConfig& cfg, const std::string& key,
                const std::string& value);

}  // namespace embsp

#endif
