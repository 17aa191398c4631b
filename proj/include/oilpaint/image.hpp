#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oilpaint {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Owned 8-bit RGB raster. Channels are interleaved R,G,B, rows are stored
// top to bottom with stride == width*3. data().size() == width*height*3
// always holds; both dimensions are at least 1.
class Image {
  public:
    Image(int width, int height);  // zero-filled
    Image(int width, int height, std::vector<std::uint8_t> data);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t stride() const { return static_cast<std::size_t>(width_) * 3; }
    std::size_t size_bytes() const { return data_.size(); }

    std::uint8_t* row(int y) { return data_.data() + static_cast<std::size_t>(y) * stride(); }
    const std::uint8_t* row(int y) const {
        return data_.data() + static_cast<std::size_t>(y) * stride();
    }
    std::uint8_t* pixel(int x, int y) { return row(y) + static_cast<std::size_t>(x) * 3; }
    const std::uint8_t* pixel(int x, int y) const {
        return row(y) + static_cast<std::size_t>(x) * 3;
    }

    Rgb at(int x, int y) const {
        const std::uint8_t* p = pixel(x, y);
        return Rgb{p[0], p[1], p[2]};
    }
    void set(int x, int y, Rgb c) {
        std::uint8_t* p = pixel(x, y);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }

    std::vector<std::uint8_t>& data() { return data_; }
    const std::vector<std::uint8_t>& data() const { return data_; }

    friend bool operator==(const Image&, const Image&) = default;

  private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

}  // namespace oilpaint
