// Hybrid generator: a type-III coupled map quantized to k bits, XOR'd with a
// linear congruential generator widened to k bits.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "utccs/core_maps.hpp"

namespace utccs {

/// y' = (a y + b) mod 2^31.
struct LcgState {
    static constexpr std::uint64_t a = 1103515245u;
    static constexpr std::uint64_t b = 12345u;
    static constexpr std::uint64_t m = 1u << 31;
    static constexpr int bits = 31;

    std::uint32_t y = 0;
};

/// Advances the state and returns the new value. a < 2^31 and y < 2^31, so
/// a*y + b fits in 64 bits and the only reduction is the mod.
inline std::uint32_t lcg_next(LcgState& s) {
    s.y = static_cast<std::uint32_t>((LcgState::a * s.y + LcgState::b) % LcgState::m);
    return s.y;
}

/// floor(x * 2^k) for x in [0,1), k in [1,64].
inline std::uint64_t chaotic_to_int(double x, int k) {
    if (k < 1 || k > 64) throw std::invalid_argument("word width must be in [1,64]");
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("chaotic_to_int needs x in [0,1)");
    return static_cast<std::uint64_t>(std::ldexp(x, k));
}

/// k-bit LCG word from ceil(k/31) consecutive LCG outputs. The first output
/// fills bits 0..30, the next bits 31..61, and so on; a partial chunk takes
/// the most significant bits of its output.
inline std::uint64_t lcg_widened_word(LcgState& s, int k) {
    std::uint64_t q = 0;
    for (int shift = 0; shift < k; shift += LcgState::bits) {
        const std::uint64_t y = lcg_next(s);
        const int take = std::min(LcgState::bits, k - shift);
        q |= (y >> (LcgState::bits - take)) << shift;
    }
    return q;
}

/// Generator names: each uses the slope-8 transform on its coupling.
enum class CbprngMap { LscmLcg, TlcmLcg, StcmLcg };

inline MapSpec cbprng_map_spec(CbprngMap which, double r) {
    switch (which) {
        case CbprngMap::LscmLcg: return make_coupling(Coupling::LSCM, UtfKind::TentSlope8, r);
        case CbprngMap::TlcmLcg: return make_coupling(Coupling::TLCM, UtfKind::TentSlope8, r);
        case CbprngMap::StcmLcg: return make_coupling(Coupling::STCM, UtfKind::TentSlope8, r);
    }
    throw std::invalid_argument("unknown generator");
}

/// Demo parameters used by the randomness reports, one (x0, r) per map.
struct CbprngDemoParams {
    double x0;
    double r;
};

inline CbprngDemoParams demo_params(CbprngMap which) {
    switch (which) {
        case CbprngMap::LscmLcg: return {0.4584, 0.6541};
        case CbprngMap::TlcmLcg: return {0.4584, 0.0257};
        case CbprngMap::StcmLcg: return {0.4584, 0.9335};
    }
    return {0.4584, 0.5};
}

class Cbprng {
public:
    Cbprng(const MapSpec& map, double x0, int word_bits = 32)
        : map_(map), x_(x0), word_bits_(word_bits) {
        if (!(x0 > 0.0 && x0 < 1.0)) throw std::domain_error("generator x0 must lie in (0,1)");
        if (!(map.r >= 0.0 && map.r <= 1.0)) throw std::domain_error("generator r must lie in [0,1]");
        if (word_bits < 1 || word_bits > 64) throw std::invalid_argument("word width must be in [1,64]");
        lcg_.y = static_cast<std::uint32_t>(std::floor(x0 * double(LcgState::m)));
    }

    Cbprng(CbprngMap which, double x0, double r, int word_bits = 32)
        : Cbprng(cbprng_map_spec(which, r), x0, word_bits) {}

    /// z = floor(x' 2^k) XOR q, after one map step and one widened LCG word.
    std::uint64_t next_word() {
        x_ = couple_step(map_, x_);
        const std::uint64_t p = chaotic_to_int(x_, word_bits_);
        const std::uint64_t q = lcg_widened_word(lcg_, word_bits_);
        return p ^ q;
    }

    int word_bits() const { return word_bits_; }
    double chaotic_state() const { return x_; }
    const LcgState& lcg() const { return lcg_; }
    const MapSpec& map() const { return map_; }

private:
    MapSpec map_;
    double x_;
    LcgState lcg_;
    int word_bits_;
};

/// rows x cols matrix (row-major) of next_word() mod modulus.
inline std::vector<std::uint64_t> fill_matrix(Cbprng& gen, std::size_t rows, std::size_t cols,
                                              std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be >= 1");
    std::vector<std::uint64_t> out(rows * cols);
    for (auto& v : out) v = gen.next_word() % modulus;
    return out;
}

/// Writes n_bits of the word stream, each word most significant bit first.
/// When n_bits is not a multiple of k the last word contributes its top bits.
inline void emit_bitstream(Cbprng& gen, std::uint64_t n_bits, std::ostream& sink) {
    if (n_bits % 8 != 0) throw std::invalid_argument("bit count must be a multiple of 8");
    const int k = gen.word_bits();
    std::vector<char> buf;
    buf.reserve(1 << 16);
    std::uint64_t word = 0;
    int left = 0;  // unread bits of `word`
    auto flush = [&] {
        sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!sink) throw std::runtime_error("bitstream sink write failed");
        buf.clear();
    };
    for (std::uint64_t produced = 0; produced < n_bits; produced += 8) {
        unsigned byte = 0;
        for (int bit = 0; bit < 8; ++bit) {
            if (left == 0) {
                word = gen.next_word();
                left = k;
            }
            --left;
            byte = (byte << 1) | unsigned((word >> left) & 1u);
        }
        buf.push_back(static_cast<char>(byte));
        if (buf.size() == buf.capacity()) flush();
    }
    flush();
}

// Lightweight internal randomness checks. Full batteries (NIST SP800-22,
// TestU01) run externally over emit_bitstream output.

struct MonobitReport {
    std::uint64_t n_bits = 0;
    std::uint64_t ones = 0;
    double z = 0.0;  // (ones - n/2) / sqrt(n/4)
    double p_value = 0.0;
    bool within_3_sigma = false;
};

inline MonobitReport monobit(std::span<const std::uint8_t> bytes) {
    MonobitReport r;
    r.n_bits = 8ull * bytes.size();
    for (auto b : bytes) r.ones += static_cast<std::uint64_t>(std::popcount(b));
    if (r.n_bits == 0) return r;
    const double n = double(r.n_bits);
    r.z = (double(r.ones) - n / 2.0) / std::sqrt(n / 4.0);
    r.p_value = std::erfc(std::abs(r.z) / std::sqrt(2.0));
    r.within_3_sigma = std::abs(r.z) <= 3.0;
    return r;
}

inline constexpr double kChi2Critical255At001 = 310.457388;

struct ByteChi2Report {
    std::uint64_t n_bytes = 0;
    double statistic = 0.0;
    bool pass_0_01 = false;
};

inline ByteChi2Report byte_chi2(std::span<const std::uint8_t> bytes) {
    ByteChi2Report r;
    r.n_bytes = bytes.size();
    if (bytes.empty()) return r;
    std::array<std::uint64_t, 256> hist{};
    for (auto b : bytes) ++hist[b];
    const double expected = double(bytes.size()) / 256.0;
    for (auto h : hist) r.statistic += (double(h) - expected) * (double(h) - expected) / expected;
    r.pass_0_01 = r.statistic < kChi2Critical255At001;
    return r;
}

/// NIST-style runs test over the bit sequence (MSB-first within each byte).
struct RunsReport {
    std::uint64_t n_bits = 0;
    std::uint64_t runs = 0;
    double p_value = 0.0;
    bool pass_0_01 = false;
};

inline RunsReport runs_test(std::span<const std::uint8_t> bytes) {
    RunsReport r;
    r.n_bits = 8ull * bytes.size();
    if (r.n_bits < 2) return r;
    std::uint64_t ones = 0;
    for (auto b : bytes) ones += static_cast<std::uint64_t>(std::popcount(b));
    const double n = double(r.n_bits);
    const double pi = double(ones) / n;
    r.runs = 1;
    int prev = (bytes[0] >> 7) & 1;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        for (int bit = (i == 0 ? 6 : 7); bit >= 0; --bit) {
            const int cur = (bytes[i] >> bit) & 1;
            if (cur != prev) ++r.runs;
            prev = cur;
        }
    }
    if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return r;  // frequency prerequisite failed
    const double num = std::abs(double(r.runs) - 2.0 * n * pi * (1.0 - pi));
    const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
    r.p_value = std::erfc(num / den);
    r.pass_0_01 = r.p_value >= 0.01;
    return r;
}

}  // namespace utccs
