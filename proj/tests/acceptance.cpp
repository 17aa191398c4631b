// Acceptance suite. Runs every criterion, prints one PASS/FAIL/SKIP line
// per criterion and exits nonzero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oilpaint/bench.hpp"
#include "oilpaint/parallel.hpp"
#include "oilpaint/pattern.hpp"
#include "oilpaint/ppm.hpp"
#include "support/oracle.hpp"

using namespace oilpaint;

namespace {

struct Outcome {
    enum Kind { Pass, Fail, Skip } kind = Fail;
    std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Skip, std::move(detail)}; }

Image random_image(std::mt19937_64& rng, int w, int h) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * h * 3);
    for (auto& byte : data) {
        byte = static_cast<std::uint8_t>(rng());
    }
    return Image(w, h, std::move(data));
}

// 1. Sequential engine matches the brute-force oracle byte-exactly on
//    >= 1000 randomized small images.
Outcome oracle_equivalence() {
    std::mt19937_64 rng(101);
    const int levels_pool[] = {1, 10, 20, 255};
    const int cases = 1000;
    for (int i = 0; i < cases; ++i) {
        const int w = 1 + static_cast<int>(rng() % 16);
        const int h = 1 + static_cast<int>(rng() % 16);
        const int max_r = std::min(3, (std::min(w, h) - 1) / 2);
        const int radius = static_cast<int>(rng() % (max_r + 1));
        const int levels = levels_pool[rng() % 4];
        const BorderPolicy border = rng() % 2 == 0 ? BorderPolicy::CopyInput
                                                   : BorderPolicy::ZeroFill;
        const Image img = random_image(rng, w, h);

        const Image got = apply_sequential(img, {radius, levels, border});
        const Image want = oracle::filter(img, radius, levels, border);
        if (!(got == want)) {
            return fail("mismatch at case " + std::to_string(i) + " (" + std::to_string(w) + "x" +
                        std::to_string(h) + " r=" + std::to_string(radius) +
                        " L=" + std::to_string(levels) + ")");
        }
    }
    return pass(std::to_string(cases) + " randomized cases byte-exact vs brute-force oracle");
}

// 2. Parallel engine is byte-identical to the sequential engine across
//    worker counts and chunkings on >= 200 randomized images.
Outcome parallel_equivalence() {
    std::mt19937_64 rng(202);
    const int levels_pool[] = {1, 20, 255};
    const int chunk_pool[] = {1, 2, 5, 32};
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
        const int w = 1 + static_cast<int>(rng() % 128);
        const int h = 1 + static_cast<int>(rng() % 128);
        const int max_r = std::min(5, (std::min(w, h) - 1) / 2);
        const int radius = static_cast<int>(rng() % (max_r + 1));
        const int levels = levels_pool[rng() % 3];
        const BorderPolicy border = rng() % 2 == 0 ? BorderPolicy::CopyInput
                                                   : BorderPolicy::ZeroFill;
        const Image img = random_image(rng, w, h);
        const FilterParams params{radius, levels, border};

        const Image want = apply_sequential(img, params);
        for (const int workers : {1, 2, 4, 8}) {
            ParallelConfig cfg;
            cfg.worker_count = workers;
            cfg.min_rows_per_task = chunk_pool[rng() % 4];
            if (!(apply_parallel(img, params, cfg) == want)) {
                return fail("divergence at case " + std::to_string(i) + " workers=" +
                            std::to_string(workers) + " chunk=" +
                            std::to_string(cfg.min_rows_per_task));
            }
        }
    }
    return pass(std::to_string(cases) +
                " randomized cases identical across worker counts {1,2,4,8}");
}

struct TableRow {
    const char* label;
    int radius;
    double t1;
    double t2;
    double expected_pct;
};

// 2012 i7-3630QM reference measurements, sequential vs parallel.
constexpr TableRow kReferenceTable[] = {
    {"VGA", 2, 218, 94, 56.88073394},     {"VGA", 4, 531, 156, 70.62146893},
    {"VGA", 6, 1046, 281, 73.13575526},   {"VGA", 8, 1685, 483, 71.33531157},
    {"SVGA", 2, 297, 78, 73.73737374},    {"SVGA", 4, 826, 234, 71.67070218},
    {"SVGA", 6, 1606, 452, 71.85554172},  {"SVGA", 8, 2652, 734, 72.32277526},
    {"XGA", 2, 499, 140, 71.94388778},    {"XGA", 4, 1326, 375, 71.71945701},
    {"XGA", 6, 2621, 733, 72.03357497},   {"XGA", 8, 4383, 1248, 71.52635181},
    {"FHD", 2, 1466, 343, 76.60300136},   {"FHD", 4, 3526, 967, 72.57515598},
    {"FHD", 6, 7020, 1935, 72.43589744},  {"FHD", 8, 11716, 3261, 72.16626835},
    {"WQXGA", 2, 2559, 686, 73.19265338}, {"WQXGA", 4, 6973, 1872, 73.15359243},
    {"WQXGA", 6, 14008, 3915, 72.05168475}, {"WQXGA", 8, 23229, 6490, 72.06078609},
};

// 3. Improvement formula reproduces all 20 reference rows within 1e-6 and
//    their mean lands on 71.65 +- 0.1.
Outcome improvement_table() {
    double sum = 0;
    for (const TableRow& row : kReferenceTable) {
        const double got = improvement_pct(row.t1, row.t2);
        if (std::abs(got - row.expected_pct) > 1e-6) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s r=%d: got %.8f want %.8f", row.label, row.radius,
                          got, row.expected_pct);
            return fail(buf);
        }
        sum += got;
    }
    const double mean = sum / std::size(kReferenceTable);
    if (std::abs(mean - 71.65) > 0.1) {
        return fail("mean " + std::to_string(mean) + " not within 71.65 +- 0.1");
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "all 20 rows within 1e-6, mean %.4f%%", mean);
    return pass(buf);
}

// 4. Sequential medians on an XGA noise image grow strictly with radius
//    and r=8 costs at least 3x r=2.
Outcome radius_scaling() {
    const BenchReport report = run_sweep({{"XGA", 1024, 768}}, {2, 4, 6, 8}, 20, 5, {});
    std::vector<double> medians;
    std::string shown;
    for (const BenchRecord& rec : report.records) {
        if (rec.engine == EngineKind::Sequential) {
            medians.push_back(rec.median_ms);
            char buf[48];
            std::snprintf(buf, sizeof(buf), "r=%d %.1fms ", rec.radius, rec.median_ms);
            shown += buf;
        }
    }
    for (std::size_t i = 1; i < medians.size(); ++i) {
        if (!(medians[i] > medians[i - 1])) {
            return fail("medians not strictly increasing: " + shown);
        }
    }
    const double ratio = medians.back() / medians.front();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "ratio r8/r2 = %.2f", ratio);
    if (ratio < 3) {
        return fail(shown + buf + " (< 3)");
    }
    return pass(shown + buf);
}

// 5. On >= 4 hardware threads the parallel engine improves XGA r=8 by at
//    least 40%; otherwise skipped with a diagnostic.
Outcome parallel_speedup() {
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw < 4) {
        return skip("machine reports " + std::to_string(hw) +
                    " hardware threads (< 4), speedup bound not assessable");
    }
    const BenchReport report = run_sweep({{"XGA", 1024, 768}}, {8}, 20, 5, {});
    const ImprovementPair& pair = report.pairs.at(0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "seq %.1fms par %.1fms improvement %.1f%% on %u threads",
                  pair.t1_ms, pair.t2_ms, pair.improvement_pct, hw);
    if (pair.improvement_pct < 40) {
        return fail(buf);
    }
    return pass(buf);
}

// 6. Both engines reproduce the committed golden PPM byte-exactly.
Outcome golden_file() {
    const auto path =
        std::filesystem::path(OILBENCH_GOLDEN_DIR) / "gradient8_r2_l20_zero.ppm";
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return fail("cannot open " + path.string());
    }
    const std::vector<std::uint8_t> golden{std::istreambuf_iterator<char>(in),
                                           std::istreambuf_iterator<char>()};

    const Image input = generate({patterns::Gradient{}, 8, 8});
    const FilterParams params{2, 20, BorderPolicy::ZeroFill};

    if (write_ppm(apply_sequential(input, params)) != golden) {
        return fail("sequential output differs from golden bytes");
    }
    ParallelConfig cfg;
    cfg.worker_count = 3;
    if (write_ppm(apply_parallel(input, params, cfg)) != golden) {
        return fail("parallel output differs from golden bytes");
    }
    return pass("both engines reproduce " + std::to_string(golden.size()) + " golden bytes");
}

// 7. PPM codec round-trips >= 500 generated images plus the fixed
//    byte-level examples.
Outcome codec_round_trip() {
    std::mt19937_64 rng(707);
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
        const int w = 1 + static_cast<int>(rng() % 40);
        const int h = 1 + static_cast<int>(rng() % 40);
        PatternSpec spec;
        spec.width = w;
        spec.height = h;
        switch (i % 4) {
            case 0:
                spec.kind = patterns::Noise{rng()};
                break;
            case 1:
                spec.kind = patterns::Gradient{};
                break;
            case 2:
                spec.kind = patterns::Uniform{{static_cast<std::uint8_t>(rng()),
                                               static_cast<std::uint8_t>(rng()),
                                               static_cast<std::uint8_t>(rng())}};
                break;
            default:
                spec.kind = patterns::Checker{1 + static_cast<int>(rng() % 8)};
                break;
        }
        const Image img = generate(spec);
        if (!(read_ppm(write_ppm(img)) == img)) {
            return fail("round trip failed at case " + std::to_string(i));
        }
    }

    const std::vector<std::uint8_t> red = {'P', '6', '\n', '1', ' ', '1', '\n',
                                           '2', '5', '5', '\n', 0xFF, 0x00, 0x00};
    if (!(read_ppm(red) == Image(1, 1, {255, 0, 0}))) {
        return fail("fixed example: red pixel read");
    }
    const std::vector<std::uint8_t> black = {'P', '6', '\n', '1', ' ', '1', '\n',
                                             '2', '5', '5', '\n', 0, 0, 0};
    if (write_ppm(Image(1, 1)) != black) {
        return fail("fixed example: black pixel write");
    }
    const std::vector<std::uint8_t> two = {'P', '6', '\n', '2', ' ', '1', '\n',
                                           '2', '5', '5', '\n', 1, 2, 3, 4, 5, 6};
    if (write_ppm(Image(2, 1, {1, 2, 3, 4, 5, 6})) != two) {
        return fail("fixed example: 2x1 write");
    }
    return pass(std::to_string(cases) + " generated images + 3 fixed byte examples");
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no stated budget
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", 30, oracle_equivalence},
        {2, "parallel equals sequential", 60, parallel_equivalence},
        {3, "improvement table", 0, improvement_table},
        {4, "radius scaling trend", 120, radius_scaling},
        {5, "parallel speedup", 120, parallel_speedup},
        {6, "golden file", 0, golden_file},
        {7, "codec round trip", 0, codec_round_trip},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        if (outcome.kind == Outcome::Pass && criterion.budget_s > 0 &&
            elapsed >= criterion.budget_s) {
            outcome = fail(outcome.detail + " but took " + std::to_string(elapsed) +
                           "s (budget " + std::to_string(criterion.budget_s) + "s)");
        }
        if (outcome.kind == Outcome::Fail) {
            ++failures;
        }

        const char* tag = outcome.kind == Outcome::Pass   ? "PASS"
                          : outcome.kind == Outcome::Skip ? "SKIP"
                                                          : "FAIL";
        std::printf("%s  criterion %d  %s: %s (%.1fs)\n", tag, criterion.id, criterion.name,
                    outcome.detail.c_str(), elapsed);
        std::fflush(stdout);
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    return 0;
}
