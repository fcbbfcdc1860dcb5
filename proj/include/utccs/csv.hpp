// Locale-independent CSV output for the metric curves.
#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "utccs/chaos_metrics.hpp"

namespace utccs {

/// Shortest round-trip decimal form, '.' separator; inf/nan spelled out.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), end);
}

inline void write_xy_csv(std::ostream& out, std::string_view header, std::span<const double> xs,
                         std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("CSV columns differ in length");
    out << header << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
}

/// `r,lambda`
inline void write_le_csv(std::ostream& out, std::span<const double> r, std::span<const double> lambda) {
    write_xy_csv(out, "r,lambda", r, lambda);
}

/// `r,se`
inline void write_se_csv(std::ostream& out, std::span<const double> r, std::span<const double> se) {
    write_xy_csv(out, "r,se", r, se);
}

/// `r,x`, one row per kept sample.
inline void write_bifurcation_csv(std::ostream& out, const BifurcationSeries& b) {
    out << "r,x\n";
    for (std::size_t i = 0; i < b.r_grid.size(); ++i) {
        const std::string r = format_double(b.r_grid[i]);
        for (double x : b.samples[i]) out << r << ',' << format_double(x) << '\n';
    }
}

/// `x1,y1,x2,y2`, one row per segment.
inline void write_cobweb_csv(std::ostream& out, const CobwebTrace& t) {
    out << "x1,y1,x2,y2\n";
    for (const auto& s : t.segments) {
        out << format_double(s.from.x) << ',' << format_double(s.from.y) << ',' << format_double(s.to.x)
            << ',' << format_double(s.to.y) << '\n';
    }
}

}  // namespace utccs
