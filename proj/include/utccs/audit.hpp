// Security-analysis battery for the image cipher.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "utccs/cipher.hpp"
#include "utccs/image.hpp"

namespace utccs {

// Critical values for 256 x 256, 8-bit images.
inline constexpr double kChi2Critical255At005 = 293.2478;

struct NpcrUaciCritical {
    double alpha;
    double npcr_min;  // percent
    double uaci_lo;
    double uaci_hi;
};

inline constexpr std::array<NpcrUaciCritical, 3> kNpcrUaciCritical = {{
    {0.05, 99.5693, 33.2824, 33.6447},
    {0.01, 99.5527, 33.2255, 33.7016},
    {0.001, 99.5341, 33.1594, 33.7677},
}};

inline constexpr double kExpectedRandomNpcr = 99.6094;
inline constexpr double kExpectedRandomUaci = 33.4635;

/// MSE at or above this counts as a wrong decryption.
inline constexpr double kKeySensitivityNoiseFloor = 1000.0;

struct Chi2Report {
    double statistic = 0.0;
    int dof = 255;
    double critical_0_05 = kChi2Critical255At005;
    bool pass = false;
    bool low_count = false;  // fewer than 256 pixels; the statistic is unreliable
};

inline std::array<std::uint64_t, 256> histogram(std::span<const std::uint8_t> px) {
    std::array<std::uint64_t, 256> h{};
    for (auto v : px) ++h[v];
    return h;
}

inline Chi2Report chi2_uniformity(std::span<const std::uint8_t> px) {
    if (px.empty()) throw std::invalid_argument("chi-square needs a non-empty image");
    const auto h = histogram(px);
    const double fe = double(px.size()) / 256.0;
    Chi2Report r;
    for (auto f : h) r.statistic += (double(f) - fe) * (double(f) - fe) / fe;
    r.pass = r.statistic < r.critical_0_05;
    r.low_count = px.size() < 256;
    return r;
}

inline Chi2Report chi2_uniformity(const ImageBuffer& img) { return chi2_uniformity(img.pixels()); }

struct DiffReport {
    double npcr = 0.0;  // percent, mean over trials
    double uaci = 0.0;
    std::size_t trials = 0;
    std::vector<double> npcr_per_trial;
    std::vector<double> uaci_per_trial;

    bool npcr_pass(double alpha = 0.05) const {
        for (const auto& c : kNpcrUaciCritical) {
            if (c.alpha == alpha) return npcr > c.npcr_min;
        }
        throw std::invalid_argument("no NPCR critical value for that alpha");
    }
    bool uaci_pass(double alpha = 0.05) const {
        for (const auto& c : kNpcrUaciCritical) {
            if (c.alpha == alpha) return uaci >= c.uaci_lo && uaci <= c.uaci_hi;
        }
        throw std::invalid_argument("no UACI critical value for that alpha");
    }
};

/// NPCR = share of differing pixels; UACI = mean |c1 - c2| / 255. Both in percent.
inline DiffReport npcr_uaci(const ImageBuffer& c1, const ImageBuffer& c2) {
    if (!c1.same_shape(c2)) throw std::invalid_argument("NPCR/UACI needs equal dimensions");
    std::uint64_t differ = 0;
    std::uint64_t abs_sum = 0;
    const auto a = c1.pixels();
    const auto b = c2.pixels();
    for (std::size_t k = 0; k < a.size(); ++k) {
        const int d = int(a[k]) - int(b[k]);
        differ += d != 0;
        abs_sum += static_cast<std::uint64_t>(std::abs(d));
    }
    const double n = double(a.size());
    DiffReport r;
    r.npcr = 100.0 * double(differ) / n;
    r.uaci = 100.0 * double(abs_sum) / (255.0 * n);
    r.trials = 1;
    r.npcr_per_trial = {r.npcr};
    r.uaci_per_trial = {r.uaci};
    return r;
}

/// Each trial flips one random bit of one random pixel, encrypts both
/// plaintexts under `keys` and compares the ciphertexts.
inline DiffReport diff_attack_trial(const ImageBuffer& img, const KeySet& keys, std::size_t trials,
                                    std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    const ImageBuffer base = encrypt(img, keys);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_px(0, img.size() - 1);
    std::uniform_int_distribution<int> pick_bit(0, 7);

    DiffReport out;
    out.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        ImageBuffer changed = img;
        changed.pixels()[pick_px(rng)] ^= static_cast<std::uint8_t>(1u << pick_bit(rng));
        const auto one = npcr_uaci(base, encrypt(changed, keys));
        out.npcr_per_trial.push_back(one.npcr);
        out.uaci_per_trial.push_back(one.uaci);
    }
    out.npcr = std::accumulate(out.npcr_per_trial.begin(), out.npcr_per_trial.end(), 0.0) / double(trials);
    out.uaci = std::accumulate(out.uaci_per_trial.begin(), out.uaci_per_trial.end(), 0.0) / double(trials);
    return out;
}

enum class Direction { Horizontal, Vertical, Diagonal };

inline constexpr Direction kAllDirections[] = {Direction::Horizontal, Direction::Vertical,
                                               Direction::Diagonal};

inline std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Horizontal: return "horizontal";
        case Direction::Vertical: return "vertical";
        case Direction::Diagonal: return "diagonal";
    }
    return "?";
}

struct CorrReport {
    Direction direction = Direction::Horizontal;
    double cc = 0.0;
    std::size_t pairs = 0;
    std::uint64_t seed = 0;
};

struct UndefinedCorrelation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Pearson coefficient of the given pairs.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("pearson needs equal, non-empty inputs");
    const double n = double(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelation("correlation undefined for zero-variance samples");
    return sxy / std::sqrt(sxx * syy);
}

/// Samples `pairs` distinct adjacent-pixel pairs along `dir` (without
/// replacement) and returns their Pearson coefficient.
inline CorrReport correlation(const ImageBuffer& img, Direction dir, std::size_t pairs,
                              std::uint64_t seed) {
    const std::size_t m = img.rows();
    const std::size_t n = img.cols();
    const std::size_t di = dir == Direction::Horizontal ? 0 : 1;
    const std::size_t dj = dir == Direction::Vertical ? 0 : 1;
    if (m <= di || n <= dj) throw std::invalid_argument("image too small for this direction");
    const std::size_t span_rows = m - di;
    const std::size_t span_cols = n - dj;
    const std::size_t available = span_rows * span_cols;
    if (pairs == 0 || pairs > available) throw std::invalid_argument("image cannot supply that many pairs");

    std::vector<std::size_t> all(available);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> chosen;
    chosen.reserve(pairs);
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), pairs, rng);

    std::vector<double> xs, ys;
    xs.reserve(pairs);
    ys.reserve(pairs);
    for (auto idx : chosen) {
        const std::size_t i = idx / span_cols;
        const std::size_t j = idx % span_cols;
        xs.push_back(img(i, j));
        ys.push_back(img(i + di, j + dj));
    }
    return {dir, pearson(xs, ys), pairs, seed};
}

inline double mse(const ImageBuffer& a, const ImageBuffer& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("MSE needs equal dimensions");
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    double acc = 0.0;
    for (std::size_t k = 0; k < pa.size(); ++k) {
        const double d = double(pa[k]) - double(pb[k]);
        acc += d * d;
    }
    return acc / double(pa.size());
}

struct SensitivityPoint {
    int exponent = 0;  // alpha = 2^-exponent
    double alpha = 0.0;
    double mse = 0.0;
    bool skipped = false;  // perturbed key left (0,1)
};

struct SensitivityCurve {
    KeyName key = KeyName::X1;
    std::vector<SensitivityPoint> points;

    /// Largest exponent whose perturbation still breaks decryption.
    std::optional<int> threshold_exponent(double floor = kKeySensitivityNoiseFloor) const {
        std::optional<int> best;
        for (const auto& p : points) {
            if (!p.skipped && p.mse >= floor && (!best || p.exponent > *best)) best = p.exponent;
        }
        return best;
    }
};

/// For each exponent e, decrypts encrypt(img, keys) with `key` raised by 2^-e
/// and records the MSE against img.
inline SensitivityCurve key_sensitivity(const ImageBuffer& img, const KeySet& keys, KeyName key,
                                        int exponent_min, int exponent_max) {
    if (exponent_min > exponent_max) throw std::invalid_argument("empty exponent range");
    const ImageBuffer cipher = encrypt(img, keys);
    SensitivityCurve curve;
    curve.key = key;
    for (int e = exponent_min; e <= exponent_max; ++e) {
        SensitivityPoint p;
        p.exponent = e;
        p.alpha = std::ldexp(1.0, -e);
        KeySet wrong = keys;
        wrong[key] += p.alpha;
        if (!(wrong[key] > 0.0 && wrong[key] < 1.0)) {
            p.skipped = true;
        } else {
            p.mse = mse(decrypt(cipher, wrong), img);
        }
        curve.points.push_back(p);
    }
    return curve;
}

struct LossRegion {
    std::size_t row0 = 0;
    std::size_t col0 = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// A near-square rectangle holding about `fraction` of the pixels, anchored
/// at (row0, col0) and clipped to the image.
inline LossRegion loss_region(std::size_t m, std::size_t n, double fraction, std::size_t row0 = 0,
                              std::size_t col0 = 0) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw std::invalid_argument("loss fraction must lie in (0,1)");
    if (row0 >= m || col0 >= n) throw std::invalid_argument("loss region anchor outside image");
    const double target = fraction * double(m) * double(n);
    std::size_t h = std::clamp<std::size_t>(std::size_t(std::llround(double(m) * std::sqrt(fraction))), 1, m);
    std::size_t w = std::clamp<std::size_t>(std::size_t(std::llround(target / double(h))), 1, n);
    h = std::min(h, m - row0);
    w = std::min(w, n - col0);
    return {row0, col0, h, w};
}

struct DataLossResult {
    LossRegion region;
    ImageBuffer damaged;
    ImageBuffer recovered;
    double mse = 0.0;
};

/// Zeroes a rectangle of the ciphertext, decrypts with the correct keys and
/// compares with the plaintext.
inline DataLossResult data_loss(const ImageBuffer& img, const KeySet& keys, double fraction,
                                std::size_t row0 = 0, std::size_t col0 = 0) {
    DataLossResult out;
    out.region = loss_region(img.rows(), img.cols(), fraction, row0, col0);
    out.damaged = encrypt(img, keys);
    for (std::size_t i = 0; i < out.region.rows; ++i) {
        for (std::size_t j = 0; j < out.region.cols; ++j) {
            out.damaged(out.region.row0 + i, out.region.col0 + j) = 0;
        }
    }
    out.recovered = decrypt(out.damaged, keys);
    out.mse = mse(out.recovered, img);
    return out;
}

}  // namespace utccs
