// Lyapunov exponent, bifurcation samples, cobweb traces and sample entropy.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "utccs/core_maps.hpp"

namespace utccs {

inline constexpr std::size_t kDefaultLeIterations = 10'000;
inline constexpr std::size_t kDefaultLeDiscard = 1'000;

struct LyapunovResult {
    double lambda = 0.0;  // nats per iteration
    std::size_t iterations = 0;
    std::size_t transient_discard = 0;
    std::size_t skipped = 0;  // iterates on a fold or with zero derivative
};

/// Orbit average of ln|F'(x_i)| over `iterations` post-transient iterates.
/// Iterates where F is not differentiable or F' == 0 are left out of both the
/// sum and the divisor. If every iterate is left out, lambda is -inf.
template <UnitMap M>
LyapunovResult lyapunov_exponent(const M& map, double x0,
                                 std::size_t iterations = kDefaultLeIterations,
                                 std::size_t transient_discard = kDefaultLeDiscard) {
    if (iterations < 1000) throw std::invalid_argument("lyapunov_exponent needs >= 1000 iterations");
    detail::require_unit(x0, "x0");

    double x = x0;
    for (std::size_t i = 0; i < transient_discard; ++i) x = step(map, x);

    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < iterations; ++i) {
        const auto d = slope(map, x);
        if (d && *d != 0.0) {
            sum += std::log(std::abs(*d));
            ++used;
        }
        x = step(map, x);
    }
    LyapunovResult out;
    out.iterations = iterations;
    out.transient_discard = transient_discard;
    out.skipped = iterations - used;
    out.lambda = used == 0 ? -std::numeric_limits<double>::infinity() : sum / double(used);
    return out;
}

struct BifurcationSeries {
    std::vector<double> r_grid;
    std::size_t points_per_r = 0;
    double x0 = 0.0;
    std::vector<std::vector<double>> samples;  // samples[i] belongs to r_grid[i]
};

/// `count` evenly spaced values covering [0,1] inclusive.
inline std::vector<double> unit_grid(std::size_t count) {
    if (count == 0) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = 0.0;
        return grid;
    }
    for (std::size_t i = 0; i < count; ++i) grid[i] = double(i) / double(count - 1);
    return grid;
}

/// For every r in the grid, iterate family(r) from x0 and keep the last
/// `keep` states after `discard` transients.
template <class Family>
BifurcationSeries bifurcation_data(Family&& family, std::span<const double> r_grid, double x0,
                                   std::size_t discard, std::size_t keep) {
    if (keep == 0) throw std::invalid_argument("bifurcation keep must be >= 1");
    BifurcationSeries out;
    out.r_grid.assign(r_grid.begin(), r_grid.end());
    out.points_per_r = keep;
    out.x0 = x0;
    out.samples.reserve(r_grid.size());
    for (double r : r_grid) {
        out.samples.push_back(iterate_orbit(family(r), x0, keep, discard).states);
    }
    return out;
}

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Segment {
    Point2 from;
    Point2 to;
};

struct CobwebTrace {
    std::vector<Segment> segments;
    std::size_t steps = 0;
};

/// Vertical (x_i, x_i) -> (x_i, x_{i+1}), then horizontal to (x_{i+1}, x_{i+1}),
/// once per step.
template <UnitMap M>
CobwebTrace cobweb_data(const M& map, double x0, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("cobweb needs at least one step");
    detail::require_unit(x0, "x0");
    CobwebTrace trace;
    trace.steps = steps;
    trace.segments.reserve(2 * steps);
    double x = x0;
    for (std::size_t i = 0; i < steps; ++i) {
        const double next = step(map, x);
        trace.segments.push_back({{x, x}, {x, next}});
        trace.segments.push_back({{x, next}, {next, next}});
        x = next;
    }
    return trace;
}

struct SampleEntropyResult {
    double value = 0.0;
    std::size_t embedding_dim = 2;
    double tolerance = 0.0;
    std::size_t series_len = 0;
    std::uint64_t matches_m = 0;   // B
    std::uint64_t matches_m1 = 0;  // A
    bool undefined = false;        // A == 0; value is +inf
};

/// SampEn = -ln(A/B). Both counts use the same N - m templates so that every
/// length-m template has a length-(m+1) extension; pairs i < j, Chebyshev
/// distance strictly below `tolerance`, self-matches excluded.
inline SampleEntropyResult sample_entropy(std::span<const double> series,
                                          std::size_t embedding_dim, double tolerance) {
    if (series.size() < 100) throw std::invalid_argument("sample_entropy needs >= 100 points");
    if (!(tolerance > 0.0)) throw std::invalid_argument("sample_entropy tolerance must be > 0");
    if (embedding_dim == 0) throw std::invalid_argument("embedding dimension must be >= 1");

    const std::size_t m = embedding_dim;
    const std::size_t templates = series.size() - m;
    std::uint64_t b = 0;
    std::uint64_t a = 0;
    for (std::size_t i = 0; i + 1 < templates; ++i) {
        for (std::size_t j = i + 1; j < templates; ++j) {
            std::size_t k = 0;
            while (k < m && std::abs(series[i + k] - series[j + k]) < tolerance) ++k;
            if (k < m) continue;
            ++b;
            if (std::abs(series[i + m] - series[j + m]) < tolerance) ++a;
        }
    }

    SampleEntropyResult out;
    out.embedding_dim = m;
    out.tolerance = tolerance;
    out.series_len = series.size();
    out.matches_m = b;
    out.matches_m1 = a;
    if (a == 0) {
        out.undefined = true;
        out.value = std::numeric_limits<double>::infinity();
    } else {
        out.value = -std::log(double(a) / double(b)) + 0.0;  // no -0.0
    }
    return out;
}

inline double sample_stddev(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / double(xs.size());
    double acc = 0.0;
    for (double v : xs) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / double(xs.size() - 1));
}

inline constexpr std::size_t kDefaultSeLength = 5000;
inline constexpr std::size_t kDefaultSeDim = 2;
inline constexpr double kDefaultSeTolFactor = 0.2;

/// Sample entropy with tolerance = factor * stddev(series). A series with
/// zero spread is constant, and its entropy is 0.
inline SampleEntropyResult sample_entropy_scaled(std::span<const double> series,
                                                 std::size_t embedding_dim = kDefaultSeDim,
                                                 double tol_factor = kDefaultSeTolFactor) {
    const double sd = sample_stddev(series);
    if (sd == 0.0) {
        if (series.size() < 100) throw std::invalid_argument("sample_entropy needs >= 100 points");
        SampleEntropyResult out;
        out.embedding_dim = embedding_dim;
        out.series_len = series.size();
        return out;
    }
    return sample_entropy(series, embedding_dim, tol_factor * sd);
}

/// Sample entropy of the orbit of `map` from x0 (no transient discard).
template <UnitMap M>
SampleEntropyResult orbit_sample_entropy(const M& map, double x0 = 0.1,
                                         std::size_t length = kDefaultSeLength,
                                         std::size_t embedding_dim = kDefaultSeDim,
                                         double tol_factor = kDefaultSeTolFactor) {
    const Orbit orbit = iterate_orbit(map, x0, length, 0);
    return sample_entropy_scaled(orbit.states, embedding_dim, tol_factor);
}

}  // namespace utccs
