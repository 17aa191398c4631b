#include "oilpaint/bench.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "oilpaint/pattern.hpp"

namespace oilpaint {

namespace {

constexpr std::uint64_t kWorkloadSeed = 1;

double time_call_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
    return static_cast<double>(ns.count()) / 1e6;
}

void append_time(std::string& out, double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", ms);
    out += buf;
}

}  // namespace

std::string_view engine_name(EngineKind engine) {
    return engine == EngineKind::Sequential ? "seq" : "par";
}

const std::vector<SizeSpec>& standard_sizes() {
    static const std::vector<SizeSpec> sizes = {
        {"VGA", 640, 480},    {"SVGA", 800, 600},     {"XGA", 1024, 768},
        {"FHD", 1920, 1080},  {"WQXGA", 2560, 1600},
    };
    return sizes;
}

std::optional<SizeSpec> find_standard_size(std::string_view label) {
    auto lower = [](char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c; };
    for (const SizeSpec& size : standard_sizes()) {
        if (size.label.size() != label.size()) {
            continue;
        }
        bool match = true;
        for (std::size_t i = 0; i < label.size(); ++i) {
            if (lower(size.label[i]) != lower(label[i])) {
                match = false;
                break;
            }
        }
        if (match) {
            return size;
        }
    }
    return std::nullopt;
}

double improvement_pct(double t1_ms, double t2_ms) {
    if (!(t1_ms > 0)) {
        throw std::invalid_argument("improvement_pct needs t1 > 0, got " + std::to_string(t1_ms));
    }
    return 100.0 * (t1_ms - t2_ms) / t1_ms;
}

double lower_median(std::vector<double> values) {
    assert(!values.empty());
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

BenchReport run_sweep(const std::vector<SizeSpec>& sizes, const std::vector<int>& radii,
                      int intensity_levels, int reps, const ParallelConfig& cfg) {
    if (reps < 1) {
        throw std::invalid_argument("reps must be >= 1, got " + std::to_string(reps));
    }

    BenchReport report;
    for (const SizeSpec& size : sizes) {
        // Filter work per pixel is fixed by radius and levels, not by
        // content, so a deterministic noise image stands in for a photo.
        const Image workload =
            generate({patterns::Noise{kWorkloadSeed}, size.width, size.height});

        for (const int radius : radii) {
            FilterParams params;
            params.radius = radius;
            params.intensity_levels = intensity_levels;
            validate(workload, params);

            double medians[2] = {0, 0};
            for (const EngineKind engine : {EngineKind::Sequential, EngineKind::Parallel}) {
                auto call = [&] {
                    if (engine == EngineKind::Sequential) {
                        apply_sequential(workload, params);
                    } else {
                        apply_parallel(workload, params, cfg);
                    }
                };
                call();  // warm-up, untimed

                BenchRecord rec;
                rec.label = size.label;
                rec.width = size.width;
                rec.height = size.height;
                rec.radius = radius;
                rec.intensity_levels = intensity_levels;
                rec.engine = engine;
                rec.reps = reps;
                rec.times_ms.reserve(static_cast<std::size_t>(reps));
                for (int i = 0; i < reps; ++i) {
                    rec.times_ms.push_back(time_call_ms(call));
                }
                rec.median_ms = lower_median(rec.times_ms);
                rec.min_ms = *std::min_element(rec.times_ms.begin(), rec.times_ms.end());
                rec.max_ms = *std::max_element(rec.times_ms.begin(), rec.times_ms.end());
                medians[engine == EngineKind::Parallel] = rec.median_ms;
                report.records.push_back(std::move(rec));
            }

            report.pairs.push_back({size.label, radius, medians[0], medians[1],
                                    improvement_pct(medians[0], medians[1])});
        }
    }
    return report;
}

std::string write_csv(const BenchReport& report) {
    std::string out = "label,width,height,radius,levels,engine,reps,median_ms,min_ms,max_ms\n";
    for (const BenchRecord& rec : report.records) {
        out += rec.label;
        out += ',' + std::to_string(rec.width);
        out += ',' + std::to_string(rec.height);
        out += ',' + std::to_string(rec.radius);
        out += ',' + std::to_string(rec.intensity_levels);
        out += ',';
        out += engine_name(rec.engine);
        out += ',' + std::to_string(rec.reps);
        out += ',';
        append_time(out, rec.median_ms);
        out += ',';
        append_time(out, rec.min_ms);
        out += ',';
        append_time(out, rec.max_ms);
        out += '\n';
    }
    out += "\nlabel,radius,t1_ms,t2_ms,improvement_pct\n";
    for (const ImprovementPair& pair : report.pairs) {
        out += pair.label;
        out += ',' + std::to_string(pair.radius);
        out += ',';
        append_time(out, pair.t1_ms);
        out += ',';
        append_time(out, pair.t2_ms);
        out += ',';
        append_time(out, pair.improvement_pct);
        out += '\n';
    }
    return out;
}

}  // namespace oilpaint
