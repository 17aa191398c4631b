#include "oilpaint/image.hpp"

#include <stdexcept>
#include <string>

namespace oilpaint {

namespace {

std::size_t checked_byte_count(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
}

}  // namespace

Image::Image(int width, int height)
    : width_(width), height_(height), data_(checked_byte_count(width, height), 0) {}

Image::Image(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (data_.size() != checked_byte_count(width, height)) {
        throw std::invalid_argument("image data length " + std::to_string(data_.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height) + " (want " +
                                    std::to_string(checked_byte_count(width, height)) + ")");
    }
}

}  // namespace oilpaint
