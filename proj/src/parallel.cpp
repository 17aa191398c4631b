#include "oilpaint/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace oilpaint {

namespace {

// Strict positive-integer parse; anything else (absent, empty, junk,
// non-positive, out of int range) is treated as unset.
std::optional<int> env_thread_override() {
    const char* value = std::getenv("OILBENCH_THREADS");
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    long parsed = 0;
    const char* p = value;
    for (; *p != '\0'; ++p) {
        if (*p < '0' || *p > '9') {
            return std::nullopt;
        }
        parsed = parsed * 10 + (*p - '0');
        if (parsed > 1 << 20) {
            return std::nullopt;
        }
    }
    if (parsed < 1) {
        return std::nullopt;
    }
    return static_cast<int>(parsed);
}

}  // namespace

int resolve_worker_count(const ParallelConfig& cfg) {
    if (cfg.worker_count.has_value()) {
        if (*cfg.worker_count < 1) {
            throw std::invalid_argument("worker_count must be >= 1, got " +
                                        std::to_string(*cfg.worker_count));
        }
        return *cfg.worker_count;
    }
    if (auto env = env_thread_override()) {
        return *env;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_rows(int begin, int end, const ParallelConfig& cfg,
                       const std::function<void(int, int)>& body) {
    const int total = end - begin;
    if (total <= 0) {
        return;
    }
    if (cfg.min_rows_per_task < 1) {
        throw std::invalid_argument("min_rows_per_task must be >= 1, got " +
                                    std::to_string(cfg.min_rows_per_task));
    }

    const int workers = resolve_worker_count(cfg);
    // A few chunks per worker lets uneven rows rebalance without dropping
    // below the configured grain.
    const int grain = std::max(cfg.min_rows_per_task,
                               total / std::max(1, workers * 4));
    const int chunks = (total + grain - 1) / grain;
    const int threads = std::min(workers, chunks);

    std::atomic<int> next_chunk{0};
    auto drain = [&] {
        for (int i = next_chunk.fetch_add(1, std::memory_order_relaxed); i < chunks;
             i = next_chunk.fetch_add(1, std::memory_order_relaxed)) {
            const int chunk_begin = begin + i * grain;
            const int chunk_end = std::min(end, chunk_begin + grain);
            body(chunk_begin, chunk_end);
        }
    };

    if (threads <= 1) {
        drain();
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    try {
        for (int t = 1; t < threads; ++t) {
            pool.emplace_back(drain);
        }
    } catch (...) {
        // Thread creation failed; finish the remaining chunks on this
        // thread before propagating the resource error.
        drain();
        for (auto& t : pool) {
            t.join();
        }
        throw;
    }
    drain();
    for (auto& t : pool) {
        t.join();
    }
}

Image apply_parallel(const Image& img, const FilterParams& params, const ParallelConfig& cfg) {
    validate(img, params);

    Image out = params.border == BorderPolicy::CopyInput ? img : Image(img.width(), img.height());
    const int r = params.radius;
    const int width = img.width();

    parallel_for_rows(r, img.height() - r, cfg, [&](int row_begin, int row_end) {
        // Scratch is private to the band; rows outside [row_begin, row_end)
        // are never written from here.
        HistogramAccumulator hist(params.intensity_levels);
        for (int y = row_begin; y < row_end; ++y) {
            std::uint8_t* out_px = out.pixel(r, y);
            for (int x = r; x < width - r; ++x, out_px += 3) {
                const Rgb c = filter_pixel(img, x, y, r, hist);
                out_px[0] = c.r;
                out_px[1] = c.g;
                out_px[2] = c.b;
            }
        }
    });
    return out;
}

}  // namespace oilpaint
