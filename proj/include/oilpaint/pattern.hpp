#pragma once

#include <cstdint>
#include <variant>

#include "oilpaint/image.hpp"

namespace oilpaint {

namespace patterns {

struct Uniform {
    Rgb color;
};

// pixel(x, y) = ( x*255/(w-1), y*255/(h-1), (x+y)*255/(w+h-2) ) with
// truncating division; degenerate divisors are replaced by 1.
struct Gradient {};

struct Checker {
    int cell_size = 8;
    Rgb color_a{255, 255, 255};
    Rgb color_b{0, 0, 0};
};

// Byte stream of a splitmix64 generator seeded exactly with seed, so the
// same spec yields the same bytes on every platform.
struct Noise {
    std::uint64_t seed = 0;
};

}  // namespace patterns

struct PatternSpec {
    std::variant<patterns::Uniform, patterns::Gradient, patterns::Checker, patterns::Noise> kind;
    int width = 0;
    int height = 0;
};

// Deterministic synthetic image. Throws std::invalid_argument on
// non-positive dimensions or cell size.
Image generate(const PatternSpec& spec);

}  // namespace oilpaint
