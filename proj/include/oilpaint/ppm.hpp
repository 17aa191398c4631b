#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "oilpaint/image.hpp"

namespace oilpaint {

// Malformed or unsupported PPM input. The message names the offending field.
class PpmError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses a binary PPM (P6, maxval 255). Header comments and arbitrary
// whitespace between tokens are accepted; bytes after the pixel payload are
// ignored.
Image read_ppm(std::span<const std::uint8_t> bytes);

// Canonical binary PPM: "P6\n<w> <h>\n255\n" followed by the raw payload.
// No comments, exactly one whitespace byte between tokens, so equal images
// serialize to equal bytes.
std::vector<std::uint8_t> write_ppm(const Image& img);

// File helpers. I/O failures throw std::runtime_error naming the path.
Image load_ppm(const std::filesystem::path& path);
void save_ppm(const Image& img, const std::filesystem::path& path);

}  // namespace oilpaint
