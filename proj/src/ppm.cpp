#include "oilpaint/ppm.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

namespace oilpaint {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Cursor {
  public:
    explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool eof() const { return pos_ >= bytes_.size(); }
    std::uint8_t peek() const { return bytes_[pos_]; }
    std::uint8_t take() { return bytes_[pos_++]; }
    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    // Whitespace between header tokens, with '#' comments running to the
    // end of the line.
    void skip_space_and_comments() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                take();
            } else if (peek() == '#') {
                while (!eof() && take() != '\n') {
                }
            } else {
                return;
            }
        }
    }

    // Decimal header field. Throws naming the field on EOF, a non-digit or
    // a value that does not fit an int.
    int read_field(const char* field) {
        skip_space_and_comments();
        if (eof()) {
            throw PpmError(std::string("unexpected end of header while reading ") + field);
        }
        if (peek() < '0' || peek() > '9') {
            throw PpmError(std::string("invalid character in ") + field);
        }
        long long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (take() - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw PpmError(std::string(field) + " overflows");
            }
        }
        return static_cast<int>(value);
    }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

Image read_ppm(std::span<const std::uint8_t> bytes) {
    Cursor cur(bytes);

    if (bytes.size() < 3 || bytes[0] != 'P' || bytes[1] != '6' ||
        (!is_pnm_space(bytes[2]) && bytes[2] != '#')) {
        throw PpmError("bad magic (want P6)");
    }
    cur.take();
    cur.take();

    const int width = cur.read_field("width");
    const int height = cur.read_field("height");
    if (width < 1) {
        throw PpmError("width must be positive");
    }
    if (height < 1) {
        throw PpmError("height must be positive");
    }

    const int maxval = cur.read_field("maxval");
    if (maxval != 255) {
        throw PpmError("unsupported maxval " + std::to_string(maxval) + " (want 255)");
    }

    // Exactly one whitespace byte separates the header from the payload.
    if (cur.eof() || !is_pnm_space(cur.peek())) {
        throw PpmError("missing whitespace after maxval");
    }
    cur.take();

    const unsigned long long need = 3ull * width * height;
    const auto payload = cur.rest();
    if (payload.size() < need) {
        throw PpmError("truncated payload (want " + std::to_string(need) + " bytes, have " +
                       std::to_string(payload.size()) + ")");
    }
    return Image(width, height,
                 std::vector<std::uint8_t>(payload.begin(),
                                           payload.begin() + static_cast<std::size_t>(need)));
}

std::vector<std::uint8_t> write_ppm(const Image& img) {
    char header[64];
    const int n = std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n", img.width(),
                                img.height());
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) + img.size_bytes());
    out.insert(out.end(), header, header + n);
    out.insert(out.end(), img.data().begin(), img.data().end());
    return out;
}

Image load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw std::runtime_error("read failed on " + path.string());
    }
    return read_ppm(bytes);
}

void save_ppm(const Image& img, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = write_ppm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("write failed on " + path.string());
    }
}

}  // namespace oilpaint
