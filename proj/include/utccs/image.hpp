// 8-bit image matrix and colour channel stacking.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace utccs {

/// Row-major 8-bit pixel matrix.
class ImageBuffer {
public:
    ImageBuffer() = default;

    ImageBuffer(std::size_t rows, std::size_t cols, std::uint8_t fill = 0)
        : rows_(rows), cols_(cols), px_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("image must have at least one pixel");
    }

    ImageBuffer(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels)
        : rows_(rows), cols_(cols), px_(std::move(pixels)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("image must have at least one pixel");
        if (px_.size() != rows * cols) throw std::invalid_argument("pixel count does not match dimensions");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return px_.size(); }
    bool empty() const { return px_.empty(); }

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return px_[i * cols_ + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return px_[i * cols_ + j]; }

    std::span<std::uint8_t> pixels() { return px_; }
    std::span<const std::uint8_t> pixels() const { return px_; }

    bool same_shape(const ImageBuffer& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> px_;
};

using ColorChannels = std::array<ImageBuffer, 3>;  // R, G, B

/// Stacks R, G, B vertically into one 3M x N image.
inline ImageBuffer flatten_color(const ColorChannels& ch) {
    if (!ch[0].same_shape(ch[1]) || !ch[0].same_shape(ch[2])) {
        throw std::invalid_argument("colour channels must share dimensions");
    }
    const std::size_t m = ch[0].rows();
    const std::size_t n = ch[0].cols();
    std::vector<std::uint8_t> px;
    px.reserve(3 * m * n);
    for (const auto& c : ch) px.insert(px.end(), c.pixels().begin(), c.pixels().end());
    return ImageBuffer(3 * m, n, std::move(px));
}

/// Inverse of flatten_color.
inline ColorChannels split_color(const ImageBuffer& stacked) {
    if (stacked.rows() % 3 != 0) throw std::invalid_argument("stacked image rows must be divisible by 3");
    const std::size_t m = stacked.rows() / 3;
    const std::size_t n = stacked.cols();
    const auto all = stacked.pixels();
    ColorChannels out;
    for (std::size_t c = 0; c < 3; ++c) {
        auto part = all.subspan(c * m * n, m * n);
        out[c] = ImageBuffer(m, n, std::vector<std::uint8_t>(part.begin(), part.end()));
    }
    return out;
}

/// Interleaved RGB (as stored in PPM) to separate channels.
inline ColorChannels deinterleave(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> rgb) {
    if (rgb.size() != 3 * rows * cols) throw std::invalid_argument("RGB buffer size mismatch");
    ColorChannels out{ImageBuffer(rows, cols), ImageBuffer(rows, cols), ImageBuffer(rows, cols)};
    for (std::size_t k = 0; k < rows * cols; ++k) {
        for (std::size_t c = 0; c < 3; ++c) out[c].pixels()[k] = rgb[3 * k + c];
    }
    return out;
}

inline std::vector<std::uint8_t> interleave(const ColorChannels& ch) {
    if (!ch[0].same_shape(ch[1]) || !ch[0].same_shape(ch[2])) {
        throw std::invalid_argument("colour channels must share dimensions");
    }
    std::vector<std::uint8_t> rgb(3 * ch[0].size());
    for (std::size_t k = 0; k < ch[0].size(); ++k) {
        for (std::size_t c = 0; c < 3; ++c) rgb[3 * k + c] = ch[c].pixels()[k];
    }
    return rgb;
}

}  // namespace utccs
