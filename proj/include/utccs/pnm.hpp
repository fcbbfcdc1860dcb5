// Binary PGM (P5) and PPM (P6) with maxval 255.
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "utccs/image.hpp"

namespace utccs {

struct PnmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A decoded file: grayscale or colour.
using PnmImage = std::variant<ImageBuffer, ColorChannels>;

namespace detail {

// Header tokens are separated by whitespace; '#' starts a comment to end of line.
inline std::size_t read_header_uint(std::istream& in) {
    int ch = in.get();
    for (;;) {
        if (ch == '#') {
            while (ch != '\n' && ch != EOF) ch = in.get();
        } else if (ch != EOF && std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    if (ch == EOF || !std::isdigit(ch)) throw PnmError("malformed PNM header");
    std::size_t v = 0;
    while (ch != EOF && std::isdigit(ch)) {
        v = v * 10 + std::size_t(ch - '0');
        if (v > (1u << 24)) throw PnmError("PNM header value too large");
        ch = in.get();
    }
    if (ch == EOF || !std::isspace(ch)) throw PnmError("malformed PNM header");
    return v;  // exactly one whitespace byte consumed after the token
}

}  // namespace detail

inline PnmImage read_pnm(std::istream& in) {
    char magic[2] = {};
    if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6')) {
        throw PnmError("not a binary PGM (P5) or PPM (P6) file");
    }
    const std::size_t cols = detail::read_header_uint(in);
    const std::size_t rows = detail::read_header_uint(in);
    const std::size_t maxval = detail::read_header_uint(in);
    if (rows == 0 || cols == 0) throw PnmError("PNM image has zero size");
    if (maxval != 255) throw PnmError("only 8-bit PNM (maxval 255) is supported");

    const std::size_t channels = magic[1] == '5' ? 1 : 3;
    std::vector<std::uint8_t> data(rows * cols * channels);
    if (!in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()))) {
        throw PnmError("PNM pixel data truncated");
    }
    if (channels == 1) return ImageBuffer(rows, cols, std::move(data));
    return deinterleave(rows, cols, data);
}

inline PnmImage read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PnmError("cannot open " + path);
    return read_pnm(in);
}

inline void write_pgm(std::ostream& out, const ImageBuffer& img) {
    out << "P5\n" << img.cols() << ' ' << img.rows() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.size()));
    if (!out) throw PnmError("PGM write failed");
}

inline void write_ppm(std::ostream& out, const ColorChannels& ch) {
    const auto rgb = interleave(ch);
    out << "P6\n" << ch[0].cols() << ' ' << ch[0].rows() << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
    if (!out) throw PnmError("PPM write failed");
}

inline void write_pnm(const std::string& path, const PnmImage& img) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PnmError("cannot open " + path + " for writing");
    if (const auto* g = std::get_if<ImageBuffer>(&img)) {
        write_pgm(out, *g);
    } else {
        write_ppm(out, std::get<ColorChannels>(img));
    }
}

/// Grayscale pass-through; colour is stacked R,G,B.
inline ImageBuffer as_cipher_input(const PnmImage& img) {
    if (const auto* g = std::get_if<ImageBuffer>(&img)) return *g;
    return flatten_color(std::get<ColorChannels>(img));
}

/// Reverses as_cipher_input given the original file kind.
inline PnmImage from_cipher_output(const ImageBuffer& img, bool color) {
    if (!color) return img;
    return split_color(img);
}

}  // namespace utccs
