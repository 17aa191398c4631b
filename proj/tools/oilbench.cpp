// oilbench: oil-paint image filter, synthetic image generator and
// sequential-vs-parallel benchmark sweep, all on binary PPM (P6) files.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
// 3 filter parameter error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oilpaint/bench.hpp"
#include "oilpaint/parallel.hpp"
#include "oilpaint/pattern.hpp"
#include "oilpaint/ppm.hpp"

namespace {

struct ApplyArgs {
    std::string input;
    std::string output;
    int radius = 2;
    int levels = 20;
    std::string engine = "seq";
    std::string border = "copy";
    std::optional<int> threads;
};

struct GenArgs {
    std::string pattern;
    int width = 0;
    int height = 0;
    std::uint64_t seed = 0;
    std::string output;
};

struct BenchArgs {
    std::vector<std::string> sizes;
    std::vector<int> radii = {2, 4, 6, 8};
    int levels = 20;
    int reps = 5;
    std::string out;
    std::optional<int> threads;
};

oilpaint::ParallelConfig make_config(const std::optional<int>& threads) {
    oilpaint::ParallelConfig cfg;
    if (threads) {
        cfg.worker_count = *threads;
    }
    return cfg;
}

int run_apply(const ApplyArgs& args) {
    const oilpaint::Image input = oilpaint::load_ppm(args.input);

    oilpaint::FilterParams params;
    params.radius = args.radius;
    params.intensity_levels = args.levels;
    params.border = args.border == "zero" ? oilpaint::BorderPolicy::ZeroFill
                                          : oilpaint::BorderPolicy::CopyInput;

    const auto start = std::chrono::steady_clock::now();
    const oilpaint::Image output =
        args.engine == "par" ? oilpaint::apply_parallel(input, params, make_config(args.threads))
                             : oilpaint::apply_sequential(input, params);
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        static_cast<double>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()) /
        1e6;

    oilpaint::save_ppm(output, args.output);
    std::fprintf(stderr, "width=%d height=%d time_process_ms=%.3f\n", input.width(),
                 input.height(), ms);
    return 0;
}

int run_gen(const GenArgs& args) {
    oilpaint::PatternSpec spec;
    spec.width = args.width;
    spec.height = args.height;
    if (args.pattern == "uniform") {
        spec.kind = oilpaint::patterns::Uniform{{128, 128, 128}};
    } else if (args.pattern == "gradient") {
        spec.kind = oilpaint::patterns::Gradient{};
    } else if (args.pattern == "checker") {
        spec.kind = oilpaint::patterns::Checker{};
    } else {
        spec.kind = oilpaint::patterns::Noise{args.seed};
    }
    oilpaint::save_ppm(oilpaint::generate(spec), args.output);
    return 0;
}

oilpaint::SizeSpec parse_size(const std::string& token) {
    if (auto named = oilpaint::find_standard_size(token)) {
        return *named;
    }
    // WxH, e.g. 1024x768
    const auto sep = token.find_first_of("xX");
    if (sep != std::string::npos && sep > 0 && sep + 1 < token.size()) {
        try {
            const int w = std::stoi(token.substr(0, sep));
            const int h = std::stoi(token.substr(sep + 1));
            if (w >= 1 && h >= 1) {
                return {token, w, h};
            }
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--sizes", "unknown size '" + token +
                                              "' (want vga/svga/xga/fhd/wqxga or WxH)");
}

int run_bench(const BenchArgs& args) {
    std::vector<oilpaint::SizeSpec> sizes;
    if (args.sizes.empty()) {
        sizes = oilpaint::standard_sizes();
    } else {
        for (const std::string& token : args.sizes) {
            sizes.push_back(parse_size(token));
        }
    }

    const oilpaint::BenchReport report =
        oilpaint::run_sweep(sizes, args.radii, args.levels, args.reps, make_config(args.threads));
    for (const oilpaint::ImprovementPair& pair : report.pairs) {
        std::fprintf(stderr, "label=%s radius=%d t1_ms=%.3f t2_ms=%.3f improvement_pct=%.2f\n",
                     pair.label.c_str(), pair.radius, pair.t1_ms, pair.t2_ms,
                     pair.improvement_pct);
    }

    const std::string csv = oilpaint::write_csv(report);
    if (args.out.empty() || args.out == "-") {
        std::cout << csv;
        return 0;
    }
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + args.out + " for writing");
    }
    out << csv;
    if (!out) {
        throw std::runtime_error("write failed on " + args.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Histogram-based oil-paint image filter and benchmark harness"};
    app.require_subcommand(1);

    ApplyArgs apply_args;
    CLI::App* apply = app.add_subcommand("apply", "Filter a PPM image");
    apply->add_option("--input", apply_args.input, "Input PPM (P6) file")->required();
    apply->add_option("--output", apply_args.output, "Output PPM file")->required();
    apply->add_option("--radius", apply_args.radius, "Neighborhood radius")
        ->check(CLI::Range(0, 1 << 20));
    apply->add_option("--levels", apply_args.levels, "Intensity levels")
        ->check(CLI::Range(1, 255));
    apply->add_option("--engine", apply_args.engine, "Engine: seq or par")
        ->check(CLI::IsMember({"seq", "par"}));
    apply->add_option("--border", apply_args.border, "Border policy: copy or zero")
        ->check(CLI::IsMember({"copy", "zero"}));
    apply->add_option("--threads", apply_args.threads, "Worker count for --engine par")
        ->check(CLI::Range(1, 1 << 20));

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic PPM image");
    gen->add_option("--pattern", gen_args.pattern,
                    "Pattern: uniform, gradient, checker or noise")
        ->required()
        ->check(CLI::IsMember({"uniform", "gradient", "checker", "noise"}));
    gen->add_option("--width", gen_args.width, "Image width")->required()->check(CLI::Range(1, 1 << 20));
    gen->add_option("--height", gen_args.height, "Image height")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    gen->add_option("--seed", gen_args.seed, "Noise seed");
    gen->add_option("--output", gen_args.output, "Output PPM file")->required();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run the size x radius timing sweep");
    bench->add_option("--sizes", bench_args.sizes,
                      "Sizes: vga/svga/xga/fhd/wqxga or WxH (default: all standard)")
        ->delimiter(',');
    bench->add_option("--radii", bench_args.radii, "Radii to sweep (default 2,4,6,8)")
        ->delimiter(',')
        ->check(CLI::Range(0, 1 << 20));
    bench->add_option("--levels", bench_args.levels, "Intensity levels")
        ->check(CLI::Range(1, 255));
    bench->add_option("--reps", bench_args.reps, "Timed repetitions per engine")
        ->check(CLI::Range(1, 1000));
    bench->add_option("--out", bench_args.out, "CSV output file ('-' or empty for stdout)");
    bench->add_option("--threads", bench_args.threads, "Worker count for the parallel engine")
        ->check(CLI::Range(1, 1 << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help goes to stdout, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (apply->parsed()) {
            return run_apply(apply_args);
        }
        if (gen->parsed()) {
            return run_gen(gen_args);
        }
        return run_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
