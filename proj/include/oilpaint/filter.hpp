#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "oilpaint/image.hpp"

namespace oilpaint {

// Treatment of the radius-wide frame the interior loop never visits.
enum class BorderPolicy {
    CopyInput,  // border pixels copied verbatim from the input
    ZeroFill,   // border pixels left at channel value 0
};

struct FilterParams {
    int radius = 2;             // neighborhood half-width, window is (2r+1)^2
    int intensity_levels = 20;  // quantization classes L, in [1, 255]
    BorderPolicy border = BorderPolicy::CopyInput;
};

// Throws std::invalid_argument if params are out of range or the image has
// no interior (requires 2*radius < min(width, height)).
void validate(const Image& img, const FilterParams& params);

// Quantized luminance class of one pixel, in [0, levels]. The top class is
// hit only by pure white, so a histogram needs levels+1 bins. Exact integer
// arithmetic; (r+g+b)*levels is at most 255*3*255 and cannot overflow.
inline int intensity_bin(std::uint8_t r, std::uint8_t g, std::uint8_t b, int levels) {
    assert(levels >= 1 && levels <= 255);
    return static_cast<int>((static_cast<unsigned>(r) + g + b) * static_cast<unsigned>(levels) /
                            765u);
}

// Per-bin pixel counts and channel sums for one neighborhood scan.
class HistogramAccumulator {
  public:
    struct MaxBin {
        int index;
        std::uint32_t count;
    };

    explicit HistogramAccumulator(int intensity_levels)
        : levels_(intensity_levels),
          counts_(static_cast<std::size_t>(intensity_levels) + 1, 0),
          sum_r_(counts_.size(), 0),
          sum_g_(counts_.size(), 0),
          sum_b_(counts_.size(), 0) {
        assert(intensity_levels >= 1 && intensity_levels <= 255);
    }

    void reset() {
        std::fill(counts_.begin(), counts_.end(), 0u);
        std::fill(sum_r_.begin(), sum_r_.end(), 0u);
        std::fill(sum_g_.begin(), sum_g_.end(), 0u);
        std::fill(sum_b_.begin(), sum_b_.end(), 0u);
    }

    void add(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        const int bin = intensity_bin(r, g, b, levels_);
        counts_[bin] += 1;
        sum_r_[bin] += r;
        sum_g_[bin] += g;
        sum_b_[bin] += b;
    }

    // Lowest-index bin with the maximal count; ties keep the first maximum.
    // Calling this on an empty histogram is a caller bug.
    MaxBin max_bin() const {
        int best = 0;
        std::uint32_t best_count = counts_[0];
        for (std::size_t i = 1; i < counts_.size(); ++i) {
            if (counts_[i] > best_count) {
                best_count = counts_[i];
                best = static_cast<int>(i);
            }
        }
        assert(best_count > 0);
        return MaxBin{best, best_count};
    }

    int levels() const { return levels_; }
    int bins() const { return static_cast<int>(counts_.size()); }
    std::uint32_t count(int bin) const { return counts_[static_cast<std::size_t>(bin)]; }
    std::uint64_t sum_r(int bin) const { return sum_r_[static_cast<std::size_t>(bin)]; }
    std::uint64_t sum_g(int bin) const { return sum_g_[static_cast<std::size_t>(bin)]; }
    std::uint64_t sum_b(int bin) const { return sum_b_[static_cast<std::size_t>(bin)]; }

  private:
    int levels_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> sum_r_;
    std::vector<std::uint64_t> sum_g_;
    std::vector<std::uint64_t> sum_b_;
};

// New color of the interior pixel (x, y): channel-wise truncated average of
// the neighborhood pixels falling into the most frequent intensity class.
// hist is caller-owned scratch with levels+1 bins; reset here.
// Requires radius <= x < width-radius and radius <= y < height-radius.
Rgb filter_pixel(const Image& img, int x, int y, int radius, HistogramAccumulator& hist);

Rgb filter_pixel(const Image& img, int x, int y, const FilterParams& params);

// Sequential reference engine. Interior pixels get filter_pixel results,
// border pixels follow params.border.
Image apply_sequential(const Image& img, const FilterParams& params);

}  // namespace oilpaint
