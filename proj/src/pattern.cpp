#include "oilpaint/pattern.hpp"

#include <stdexcept>
#include <string>

namespace oilpaint {

namespace {

// splitmix64 step; fixed algorithm so noise bytes are identical everywhere.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Generator {
    int width;
    int height;

    Image operator()(const patterns::Uniform& p) const {
        Image img(width, height);
        for (std::size_t i = 0; i < img.size_bytes(); i += 3) {
            img.data()[i] = p.color.r;
            img.data()[i + 1] = p.color.g;
            img.data()[i + 2] = p.color.b;
        }
        return img;
    }

    Image operator()(const patterns::Gradient&) const {
        Image img(width, height);
        const int dx = width > 1 ? width - 1 : 1;
        const int dy = height > 1 ? height - 1 : 1;
        const int dd = width + height > 2 ? width + height - 2 : 1;
        for (int y = 0; y < height; ++y) {
            std::uint8_t* p = img.row(y);
            for (int x = 0; x < width; ++x, p += 3) {
                p[0] = static_cast<std::uint8_t>(x * 255 / dx);
                p[1] = static_cast<std::uint8_t>(y * 255 / dy);
                p[2] = static_cast<std::uint8_t>((x + y) * 255 / dd);
            }
        }
        return img;
    }

    Image operator()(const patterns::Checker& p) const {
        if (p.cell_size < 1) {
            throw std::invalid_argument("checker cell_size must be >= 1, got " +
                                        std::to_string(p.cell_size));
        }
        Image img(width, height);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const bool a = ((x / p.cell_size) + (y / p.cell_size)) % 2 == 0;
                img.set(x, y, a ? p.color_a : p.color_b);
            }
        }
        return img;
    }

    Image operator()(const patterns::Noise& p) const {
        Image img(width, height);
        std::uint64_t state = p.seed;
        std::size_t i = 0;
        const std::size_t n = img.size_bytes();
        while (i < n) {
            std::uint64_t word = splitmix64(state);
            for (int k = 0; k < 8 && i < n; ++k, ++i) {
                img.data()[i] = static_cast<std::uint8_t>(word >> (8 * k));
            }
        }
        return img;
    }
};

}  // namespace

Image generate(const PatternSpec& spec) {
    if (spec.width < 1 || spec.height < 1) {
        throw std::invalid_argument("pattern dimensions must be positive, got " +
                                    std::to_string(spec.width) + "x" +
                                    std::to_string(spec.height));
    }
    return std::visit(Generator{spec.width, spec.height}, spec.kind);
}

}  // namespace oilpaint
