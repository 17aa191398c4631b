#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oilpaint/parallel.hpp"

namespace oilpaint {

enum class EngineKind { Sequential, Parallel };

std::string_view engine_name(EngineKind engine);  // "seq" / "par"

struct SizeSpec {
    std::string label;
    int width = 0;
    int height = 0;
};

// The conventional display-size grid the default sweep walks:
// VGA 640x480, SVGA 800x600, XGA 1024x768, FHD 1920x1080, WQXGA 2560x1600.
const std::vector<SizeSpec>& standard_sizes();

// Case-insensitive lookup of a standard size by label ("vga", "WQXGA", ...).
std::optional<SizeSpec> find_standard_size(std::string_view label);

// One (size, radius, engine) measurement with repetition statistics.
struct BenchRecord {
    std::string label;
    int width = 0;
    int height = 0;
    int radius = 0;
    int intensity_levels = 0;
    EngineKind engine = EngineKind::Sequential;
    int reps = 0;
    std::vector<double> times_ms;  // one entry per rep, run order
    double median_ms = 0;          // lower median of the sorted times
    double min_ms = 0;
    double max_ms = 0;
};

struct ImprovementPair {
    std::string label;
    int radius = 0;
    double t1_ms = 0;  // sequential median
    double t2_ms = 0;  // parallel median
    double improvement_pct = 0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<ImprovementPair> pairs;
};

// 100*(t1-t2)/t1. Throws std::invalid_argument when t1 <= 0.
double improvement_pct(double t1_ms, double t2_ms);

// Lower median: element (n-1)/2 of the sorted values. Empty input is a
// caller bug.
double lower_median(std::vector<double> values);

// Runs the size x radius grid. Per (size, radius) and engine: one untimed
// warm-up call, then reps timed calls with a monotonic high-resolution
// clock around the filter call only. Workloads are deterministic noise
// images generated once per size. Pairs hold per-(size, radius) sequential
// vs parallel medians.
BenchReport run_sweep(const std::vector<SizeSpec>& sizes, const std::vector<int>& radii,
                      int intensity_levels, int reps, const ParallelConfig& cfg);

// Record rows, a blank line, then pair rows:
//   label,width,height,radius,levels,engine,reps,median_ms,min_ms,max_ms
//   label,radius,t1_ms,t2_ms,improvement_pct
// Times carry six fixed decimals, decimal point, no locale formatting.
std::string write_csv(const BenchReport& report);

}  // namespace oilpaint
