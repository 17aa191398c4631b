#include "oilpaint/filter.hpp"

#include <stdexcept>
#include <string>

namespace oilpaint {

void validate(const Image& img, const FilterParams& params) {
    if (params.radius < 0) {
        throw std::invalid_argument("radius must be >= 0, got " + std::to_string(params.radius));
    }
    if (params.intensity_levels < 1 || params.intensity_levels > 255) {
        throw std::invalid_argument("intensity_levels must be in [1, 255], got " +
                                    std::to_string(params.intensity_levels));
    }
    const int min_dim = std::min(img.width(), img.height());
    if (2 * params.radius >= min_dim) {
        throw std::invalid_argument("radius " + std::to_string(params.radius) +
                                    " leaves no interior for a " + std::to_string(img.width()) +
                                    "x" + std::to_string(img.height()) +
                                    " image (need 2*radius < min dimension)");
    }
    if (img.data().size() != static_cast<std::size_t>(img.width()) * img.height() * 3) {
        throw std::invalid_argument("image data length does not match its dimensions");
    }
}

Rgb filter_pixel(const Image& img, int x, int y, int radius, HistogramAccumulator& hist) {
    assert(x >= radius && x < img.width() - radius);
    assert(y >= radius && y < img.height() - radius);

    hist.reset();
    for (int ny = y - radius; ny <= y + radius; ++ny) {
        const std::uint8_t* p = img.pixel(x - radius, ny);
        for (int i = 0; i < 2 * radius + 1; ++i, p += 3) {
            hist.add(p[0], p[1], p[2]);
        }
    }

    const auto [bin, count] = hist.max_bin();
    return Rgb{static_cast<std::uint8_t>(hist.sum_r(bin) / count),
               static_cast<std::uint8_t>(hist.sum_g(bin) / count),
               static_cast<std::uint8_t>(hist.sum_b(bin) / count)};
}

Rgb filter_pixel(const Image& img, int x, int y, const FilterParams& params) {
    HistogramAccumulator hist(params.intensity_levels);
    return filter_pixel(img, x, y, params.radius, hist);
}

Image apply_sequential(const Image& img, const FilterParams& params) {
    validate(img, params);

    Image out = params.border == BorderPolicy::CopyInput ? img : Image(img.width(), img.height());
    const int r = params.radius;

    HistogramAccumulator hist(params.intensity_levels);
    for (int y = r; y < img.height() - r; ++y) {
        std::uint8_t* out_px = out.pixel(r, y);
        for (int x = r; x < img.width() - r; ++x, out_px += 3) {
            const Rgb c = filter_pixel(img, x, y, r, hist);
            out_px[0] = c.r;
            out_px[1] = c.g;
            out_px[2] = c.b;
        }
    }
    return out;
}

}  // namespace oilpaint
