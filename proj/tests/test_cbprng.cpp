#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <sstream>

#include "utccs/cbprng.hpp"

using namespace utccs;

namespace {

// (a*y + b) mod 2^31 via 128-bit arithmetic, no shared code with lcg_next.
std::uint32_t ref_lcg(std::uint32_t y) {
    const unsigned __int128 v = (unsigned __int128)1103515245u * y + 12345u;
    return static_cast<std::uint32_t>(v & 0x7FFFFFFFu);
}

std::string bytes_of(Cbprng g, std::uint64_t bits) {
    std::ostringstream os;
    emit_bitstream(g, bits, os);
    return os.str();
}

}  // namespace

TEST(Lcg, KnownVectors) {
    LcgState s{0};
    EXPECT_EQ(lcg_next(s), 12345u);
    s.y = 1;
    EXPECT_EQ(lcg_next(s), 1103527590u);
    s.y = 1u << 30;
    EXPECT_EQ(lcg_next(s), 1073754169u);
}

TEST(Lcg, MatchesWideOracleAndStaysBelowModulus) {
    LcgState s{987654321u};
    std::uint32_t ref = s.y;
    for (int i = 0; i < 100000; ++i) {
        ref = ref_lcg(ref);
        ASSERT_EQ(lcg_next(s), ref);
        ASSERT_LT(s.y, 1u << 31);
    }
}

TEST(ChaoticToInt, FloorSemantics) {
    EXPECT_EQ(chaotic_to_int(0.5, 32), 2147483648u);
    EXPECT_EQ(chaotic_to_int(0.0, 32), 0u);
    EXPECT_EQ(chaotic_to_int(0.75, 8), 192u);
    EXPECT_EQ(chaotic_to_int(std::nextafter(1.0, 0.0), 64), ~std::uint64_t{0} - 2047);
    EXPECT_THROW(chaotic_to_int(1.0, 32), std::domain_error);
    EXPECT_THROW(chaotic_to_int(0.5, 0), std::invalid_argument);
}

TEST(Widening, ThirtyTwoBitLayout) {
    LcgState s{424242u};
    LcgState t = s;
    const std::uint64_t w = lcg_widened_word(s, 32);
    const std::uint32_t y1 = lcg_next(t);
    const std::uint32_t y2 = lcg_next(t);
    EXPECT_EQ(w & 0x7FFFFFFFu, y1);
    EXPECT_EQ(w >> 31, y2 >> 30);
    EXPECT_EQ(s.y, t.y);
}

TEST(Widening, SixtyFourBitUsesThreeOutputs) {
    LcgState s{7u};
    LcgState t = s;
    const std::uint64_t w = lcg_widened_word(s, 64);
    const std::uint64_t y1 = lcg_next(t), y2 = lcg_next(t), y3 = lcg_next(t);
    EXPECT_EQ(w, y1 | (y2 << 31) | ((y3 >> 29) << 62));
    EXPECT_EQ(s.y, t.y);
}

TEST(Widening, ShortWordTakesTopBits) {
    LcgState s{99u};
    LcgState t = s;
    EXPECT_EQ(lcg_widened_word(s, 8), lcg_next(t) >> 23);
}

TEST(Generator, WordIsChaoticXorLcg) {
    const MapSpec map = cbprng_map_spec(CbprngMap::LscmLcg, 0.6541);
    Cbprng g(map, 0.4584);
    double x = 0.4584;
    LcgState lcg{static_cast<std::uint32_t>(std::floor(0.4584 * 2147483648.0))};
    EXPECT_EQ(g.lcg().y, lcg.y);
    for (int i = 0; i < 1000; ++i) {
        x = couple_step(map, x);
        const std::uint64_t p = chaotic_to_int(x, 32);
        const std::uint64_t q = lcg_widened_word(lcg, 32);
        ASSERT_EQ(g.next_word(), p ^ q);
        // XOR identities.
        ASSERT_EQ(0 ^ q, q);
        ASSERT_EQ(q ^ q, 0u);
    }
}

TEST(Generator, MapNamesUseSlopeEight) {
    EXPECT_EQ(cbprng_map_spec(CbprngMap::TlcmLcg, 0.2), make_coupling(Coupling::TLCM, UtfKind::TentSlope8, 0.2));
    EXPECT_EQ(cbprng_map_spec(CbprngMap::StcmLcg, 0.2), make_coupling(Coupling::STCM, UtfKind::TentSlope8, 0.2));
    EXPECT_EQ(demo_params(CbprngMap::LscmLcg).x0, 0.4584);
    EXPECT_THROW(Cbprng(CbprngMap::LscmLcg, 0.0, 0.5), std::domain_error);
    EXPECT_THROW(Cbprng(CbprngMap::LscmLcg, 0.5, 0.5, 65), std::invalid_argument);
}

TEST(Generator, Determinism) {
    Cbprng a(CbprngMap::StcmLcg, 0.31, 0.77, 64), b(CbprngMap::StcmLcg, 0.31, 0.77, 64);
    for (int i = 0; i < 5000; ++i) ASSERT_EQ(a.next_word(), b.next_word());
}

TEST(Generator, SeedSensitivity) {
    for (auto which : {CbprngMap::LscmLcg, CbprngMap::TlcmLcg, CbprngMap::StcmLcg}) {
        const auto p = demo_params(which);
        Cbprng a(which, p.x0, p.r), b(which, p.x0 + std::ldexp(1.0, -50), p.r);
        for (int i = 0; i < 64; ++i) {
            a.next_word();
            b.next_word();
        }
        std::uint64_t differ = 0;
        const int words = 4096;
        for (int i = 0; i < words; ++i) differ += std::popcount(a.next_word() ^ b.next_word());
        const double frac = double(differ) / (32.0 * words);
        EXPECT_GE(frac, 0.45);
        EXPECT_LE(frac, 0.55);
    }
}

TEST(FillMatrix, Basics) {
    Cbprng a(CbprngMap::LscmLcg, 0.3, 0.6), b(CbprngMap::LscmLcg, 0.3, 0.6), c(CbprngMap::LscmLcg, 0.3, 0.6);
    const auto ones = fill_matrix(a, 4, 5, 1);
    EXPECT_EQ(ones, std::vector<std::uint64_t>(20, 0));
    const auto m = fill_matrix(b, 1, 1, 1000);
    EXPECT_EQ(m[0], c.next_word() % 1000);
    Cbprng d(CbprngMap::LscmLcg, 0.3, 0.6), e(CbprngMap::LscmLcg, 0.3, 0.6);
    const auto x = fill_matrix(d, 7, 3, 17);
    EXPECT_EQ(x, fill_matrix(e, 7, 3, 17));
    for (auto v : x) EXPECT_LT(v, 17u);
    EXPECT_THROW(fill_matrix(d, 1, 1, 0), std::invalid_argument);
}

TEST(Bitstream, PackingAndLength) {
    Cbprng g(CbprngMap::LscmLcg, 0.4584, 0.6541);
    Cbprng ref = g;
    const std::string out = bytes_of(g, 64);
    ASSERT_EQ(out.size(), 8u);
    const std::uint64_t w1 = ref.next_word(), w2 = ref.next_word();
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(static_cast<unsigned char>(out[i]), (w1 >> (24 - 8 * i)) & 0xFF);
        EXPECT_EQ(static_cast<unsigned char>(out[4 + i]), (w2 >> (24 - 8 * i)) & 0xFF);
    }
    EXPECT_TRUE(bytes_of(g, 0).empty());
    EXPECT_EQ(bytes_of(g, 1 << 20).size(), 131072u);
    std::ostringstream os;
    EXPECT_THROW(emit_bitstream(g, 12, os), std::invalid_argument);
}

TEST(Bitstream, MsbFirstForHighBitWord) {
    // A word of 0x80000000 must start with byte 0x80: check the packer on a 1-bit-wide
    // stream, where each word is a single bit.
    Cbprng g(CbprngMap::TlcmLcg, 0.4584, 0.0257, 1);
    Cbprng ref = g;
    const std::string out = bytes_of(g, 8);
    unsigned expect = 0;
    for (int i = 0; i < 8; ++i) expect = (expect << 1) | unsigned(ref.next_word());
    EXPECT_EQ(static_cast<unsigned char>(out[0]), expect);
}

TEST(Bitstream, FailingSinkThrows) {
    Cbprng g(CbprngMap::LscmLcg, 0.4, 0.6);
    std::ostringstream os;
    os.setstate(std::ios::badbit);
    EXPECT_THROW(emit_bitstream(g, 64, os), std::runtime_error);
}

TEST(Checks, MonobitOnMillionBits) {
    for (auto which : {CbprngMap::LscmLcg, CbprngMap::TlcmLcg, CbprngMap::StcmLcg}) {
        const auto p = demo_params(which);
        const std::string s = bytes_of(Cbprng(which, p.x0, p.r), 1 << 20);
        const auto r = monobit({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
        EXPECT_GE(r.ones, 523158u);
        EXPECT_LE(r.ones, 525418u);
        EXPECT_TRUE(r.within_3_sigma);
    }
}

TEST(Checks, MonobitAndRunsOnKnownInput) {
    const std::vector<std::uint8_t> zeros(16, 0);
    EXPECT_EQ(monobit(zeros).ones, 0u);
    EXPECT_FALSE(monobit(zeros).within_3_sigma);
    const std::vector<std::uint8_t> alt(16, 0xAA);
    const auto runs = runs_test(alt);
    EXPECT_EQ(runs.runs, 128u);
    EXPECT_FALSE(runs.pass_0_01);
    // NIST SP800-22 2.3.8 example: 1001101011, n = 10, V = 7, p = 0.147232.
    // Bytes cannot hold 10 bits, so check the closed form directly.
    const double n = 10, pi = 0.6, v = 7;
    const double p = std::erfc(std::abs(v - 2 * n * pi * (1 - pi)) / (2 * std::sqrt(2 * n) * pi * (1 - pi)));
    EXPECT_NEAR(p, 0.147232, 1e-6);
}

TEST(Checks, ByteChi2Uniform) {
    std::vector<std::uint8_t> flat(256 * 40);
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = static_cast<std::uint8_t>(i);
    EXPECT_EQ(byte_chi2(flat).statistic, 0.0);
    for (auto which : {CbprngMap::LscmLcg, CbprngMap::TlcmLcg, CbprngMap::StcmLcg}) {
        const auto p = demo_params(which);
        const std::string s = bytes_of(Cbprng(which, p.x0, p.r), 8ull * 4 * 1000000);
        const auto r = byte_chi2({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
        EXPECT_LT(r.statistic, 330.0);
        const auto runs = runs_test({reinterpret_cast<const std::uint8_t*>(s.data()), 1 << 17});
        EXPECT_TRUE(runs.pass_0_01);
    }
}

TEST(Checks, BitPositionBalance) {
    for (auto which : {CbprngMap::LscmLcg, CbprngMap::TlcmLcg, CbprngMap::StcmLcg}) {
        const auto p = demo_params(which);
        Cbprng g(which, p.x0, p.r);
        std::array<std::uint64_t, 32> ones{};
        const int words = 1000000;
        for (int i = 0; i < words; ++i) {
            const auto w = g.next_word();
            for (int b = 0; b < 32; ++b) ones[b] += (w >> b) & 1u;
        }
        for (int b = 0; b < 32; ++b) {
            const double f = double(ones[b]) / words;
            EXPECT_GE(f, 0.498) << "bit " << b;
            EXPECT_LE(f, 0.502) << "bit " << b;
        }
    }
}
