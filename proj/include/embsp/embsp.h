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

/* embsp: an external-memory bulk-synchronous message-passing runtime.
 *
 * A fixed number of "virtual processors" (VPs), each with a private
 * byte-addressable context of mu bytes, execute the same program function
 * as OS threads.  Contexts live on disk and are swapped into one of k RAM
 * partitions while a VP runs; collective communication delivers messages
 * directly into on-disk contexts.  All disk traffic is attributed to
 * instrumented counters.
 *
 * This header is the C surface of the runtime.  MPI-style names for use
 * inside VP programs live in <embsp/mpi.h>.
 */

#ifndef EMBSP_H
#define EMBSP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct embsp_config_s embsp_config_t;
typedef struct embsp_runtime_s embsp_runtime_t;

typedef enum embsp_status {
  EMBSP_OK = 0,
  EMBSP_ERR_ARG = 1,         /* malformed or unknown argument            */
  EMBSP_ERR_CONFIG = 2,      /* configuration invariant violated         */
  EMBSP_ERR_IO = 3,          /* disk I/O failure                         */
  EMBSP_ERR_OOM = 4,         /* context allocator out of memory          */
  EMBSP_ERR_PROTOCOL = 5,    /* mismatched collective discipline         */
  EMBSP_ERR_UNSUPPORTED = 6, /* function not implemented                 */
  EMBSP_ERR_NET = 7,         /* transport failure                        */
  EMBSP_ERR_ABORTED = 8,     /* run aborted (panic or MPI_Abort)         */
  EMBSP_ERR_STATE = 9        /* call in the wrong lifecycle state        */
} embsp_status_t;

const char* embsp_status_str(embsp_status_t s);

/* Message for the most recent failing call on this thread. */
const char* embsp_last_error(void);

/* ---- Configuration ----------------------------------------------------- */

embsp_config_t* embsp_config_create(void);
void embsp_config_destroy(embsp_config_t* cfg);

/* Parse command line flags (see README for the flag list).  argv holds the
 * flags only, no program name.  Unspecified flags keep their defaults; the
 * result is validated. */
embsp_status_t embsp_config_parse(embsp_config_t* cfg, int argc,
                                  const char* const* argv);

/* Key/value access for individual fields ("v", "k", "mu", "app", ...). */
embsp_status_t embsp_config_set(embsp_config_t* cfg, const char* key,
                                const char* value);
embsp_status_t embsp_config_get_u64(const embsp_config_t* cfg, const char* key,
                                    uint64_t* out);
embsp_status_t embsp_config_get_str(const embsp_config_t* cfg, const char* key,
                                    char* buf, size_t buflen);

/* Re-run validation (parse already validates). */
embsp_status_t embsp_config_validate(embsp_config_t* cfg);

/* ---- Runtime lifecycle -------------------------------------------------- */

/* Creates backing files (preallocated to exactly (v/P)*mu bytes per rank),
 * RAM partitions, and, for P > 1, the TCP transport. */
embsp_status_t embsp_runtime_create(const embsp_config_t* cfg,
                                    embsp_runtime_t** out);
void embsp_runtime_destroy(embsp_runtime_t* rt);

/* Program executed by every virtual processor on its own thread. */
typedef void (*embsp_vp_fn)(void* user);

/* Runs fn on all local VPs and joins them.  Contexts persist across runs. */
embsp_status_t embsp_run(embsp_runtime_t* rt, embsp_vp_fn fn, void* user);

/* ---- Instrumentation ---------------------------------------------------- */

typedef struct embsp_counters {
  /* byte counters (logical bytes requested by the runtime) */
  uint64_t swap_in_bytes;
  uint64_t swap_out_bytes;
  uint64_t delivery_read_bytes;
  uint64_t delivery_write_bytes;
  uint64_t boundary_flush_bytes;
  uint64_t shadow_total_bytes; /* sum of all categorized bytes */
  /* operation counters */
  uint64_t read_ops;
  uint64_t write_ops;
  /* message counters (local deliveries) */
  uint64_t direct_msgs;
  uint64_t indirect_msgs;
  uint64_t remote_msgs;
  /* swap-out events split by cause */
  uint64_t swap_out_events_barrier, swap_out_bytes_barrier;
  uint64_t swap_out_events_collective, swap_out_bytes_collective;
  uint64_t swap_out_events_rooted, swap_out_bytes_rooted;
  uint64_t swap_out_events_final, swap_out_bytes_final;
  uint64_t swap_out_events_other, swap_out_bytes_other;
  /* shared buffer */
  uint64_t shared_buffer_in_use;
  uint64_t shared_buffer_high_water;
  uint64_t cache_blocks_high_water;
  /* network */
  uint64_t net_barriers;
  uint64_t net_bcasts;
  uint64_t net_gathers; /* gather rounds */
  uint64_t net_reduces;
  uint64_t net_reduce_rounds;
  uint64_t net_alltoalls;
  uint64_t net_bytes_sent;
  uint64_t net_bytes_recv;
  /* context allocator */
  uint64_t alloc_high_water_total;
} embsp_counters_t;

embsp_status_t embsp_counters_snapshot(const embsp_runtime_t* rt,
                                       embsp_counters_t* out);

/* Sum of per-rank backing file sizes in bytes (in-memory driver reports the
 * backing array sizes). */
embsp_status_t embsp_backing_bytes(const embsp_runtime_t* rt, uint64_t* out);

/* ---- Benchmarking ------------------------------------------------------- */

/* Records an elapsed-time marker for the calling VP.  No-op unless
 * benchmarking was enabled (--bench-out). */
void embsp_bench_mark(const char* label);

/* Writes the marker table (one column per label, one row per local VP). */
embsp_status_t embsp_bench_report(embsp_runtime_t* rt, const char* path);

/* ---- Cost model --------------------------------------------------------- */

typedef struct embsp_predict_input {
  uint64_t v, P, k, D;
  uint64_t mu, omega, B, b;
  uint64_t n;
  uint64_t alpha;
  uint64_t pi;      /* width of a count integer, bytes */
  uint64_t epsilon; /* width of a data element, bytes  */
  double G, S, g, l, L;
} embsp_predict_input_t;

typedef struct embsp_prediction {
  /* I/O volume (bytes) */
  uint64_t io_pems1_alltoallv;
  uint64_t io_alltoallv_seq;
  uint64_t io_alltoallv_par;
  int64_t delta_vs_baseline;
  /* disk footprint (bytes) */
  uint64_t disk_pems1;
  uint64_t disk_pems2_per_rank;
  /* shared buffer (bytes) */
  uint64_t buf_bcast, buf_gather, buf_reduce;
  uint64_t buf_alltoallv_seq, buf_alltoallv_par;
  /* predicted times (seconds) */
  double time_pems1_alltoallv;
  double time_alltoallv_seq;
  double time_alltoallv_par;
  double time_bcast, time_gather, time_reduce;
  double comm_alltoallv_par;
  /* message counts */
  uint64_t direct_msgs, indirect_msgs;
} embsp_prediction_t;

embsp_status_t embsp_predict(const embsp_predict_input_t* in,
                             embsp_prediction_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EMBSP_H */
