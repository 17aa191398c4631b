#pragma once

#include <functional>
#include <optional>

#include "oilpaint/filter.hpp"

namespace oilpaint {

struct ParallelConfig {
    // Unset means Auto: the OILBENCH_THREADS environment variable if it
    // holds a positive integer, otherwise hardware concurrency.
    std::optional<int> worker_count;
    // Chunking floor: no task gets fewer rows than this (except a final
    // remainder chunk).
    int min_rows_per_task = 1;
};

// Effective worker count for cfg (always >= 1).
int resolve_worker_count(const ParallelConfig& cfg);

// Splits [begin, end) into contiguous row chunks and runs
// body(chunk_begin, chunk_end) across the workers. Chunks are disjoint and
// cover the range exactly. Blocking; body must not throw. Worker thread
// creation failures propagate as std::system_error.
void parallel_for_rows(int begin, int end, const ParallelConfig& cfg,
                       const std::function<void(int, int)>& body);

// Data-parallel engine. Output is byte-identical to apply_sequential for
// every cfg: interior rows are processed in disjoint bands, each worker
// reads the shared input, writes only its own output rows and owns a
// private HistogramAccumulator.
Image apply_parallel(const Image& img, const FilterParams& params, const ParallelConfig& cfg = {});

}  // namespace oilpaint
