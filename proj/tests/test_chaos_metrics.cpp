#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "utccs/chaos_metrics.hpp"

using namespace utccs;

namespace {

// Textbook SampEn: build every template as its own vector, compare all pairs.
double brute_sampen(const std::vector<double>& s, std::size_t m, double tol) {
    const std::size_t n = s.size() - m;
    auto count = [&](std::size_t len) {
        std::vector<std::vector<double>> t;
        for (std::size_t i = 0; i < n; ++i) t.emplace_back(s.begin() + long(i), s.begin() + long(i + len));
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                double d = 0.0;
                for (std::size_t k = 0; k < len; ++k) d = std::max(d, std::abs(t[i][k] - t[j][k]));
                c += d < tol;
            }
        }
        return double(c);
    };
    return -std::log(count(m + 1) / count(m));
}

}  // namespace

TEST(Lyapunov, PlainTentIsLn2) {
    const auto r = lyapunov_exponent(SeedMap{SeedMapKind::Tent, 1.0}, 0.1234);
    EXPECT_NEAR(r.lambda, std::numbers::ln2, 0.01);
    EXPECT_EQ(r.iterations, kDefaultLeIterations);
    EXPECT_EQ(r.transient_discard, kDefaultLeDiscard);
}

TEST(Lyapunov, FullLogisticIsLn2) {
    // Fully chaotic logistic map: lambda = ln 2 (conjugate to the tent map).
    const auto r = lyapunov_exponent(SeedMap{SeedMapKind::Logistic, 1.0}, 0.1234, 200000);
    EXPECT_NEAR(r.lambda, std::numbers::ln2, 0.02);
}

TEST(Lyapunov, StableFixedPointIsNegative) {
    // Logistic r = 0.2 (classic 0.8): attracting fixed point 0 with slope 0.8.
    const auto r = lyapunov_exponent(SeedMap{SeedMapKind::Logistic, 0.2}, 0.3);
    EXPECT_NEAR(r.lambda, std::log(0.8), 1e-6);
}

TEST(Lyapunov, RequiresEnoughIterations) {
    EXPECT_THROW(lyapunov_exponent(SeedMap{}, 0.3, 999), std::invalid_argument);
}

TEST(Lyapunov, AllSkippedGivesMinusInfinity) {
    // Tent r = 0.5 fixes x = 0.5, which is its fold.
    const auto r = lyapunov_exponent(SeedMap{SeedMapKind::Tent, 0.5}, 0.5, 1000, 0);
    EXPECT_EQ(r.skipped, 1000u);
    EXPECT_TRUE(std::isinf(r.lambda) && r.lambda < 0);
}

TEST(Lyapunov, SkippedPointsLeaveTheDivisor) {
    // Sum exactly 1.0 at x = 0.5 (skipped), then x = 0 forever with slope 4.
    const MapSpec m{SeedMapKind::Logistic, SeedMapKind::Sine, UtfKind::Identity, 1.0};
    const auto r = lyapunov_exponent(m, 0.5, 1000, 0);
    EXPECT_EQ(r.skipped, 1u);
    EXPECT_NEAR(r.lambda, std::log(4.0), 1e-12);
}

TEST(Lyapunov, TypeOrderingHolds) {
    for (auto c : kAllCouplings) {
        for (double r : {0.1, 0.35, 0.5, 0.8}) {
            const double l1 = lyapunov_exponent(make_coupling(c, UtfKind::TentSlope2, r), 0.1).lambda;
            const double l2 = lyapunov_exponent(make_coupling(c, UtfKind::TentSlope4, r), 0.1).lambda;
            const double l3 = lyapunov_exponent(make_coupling(c, UtfKind::TentSlope8, r), 0.1).lambda;
            EXPECT_GT(l3, l2) << to_string(c) << " r=" << r;
            EXPECT_GT(l2, l1) << to_string(c) << " r=" << r;
            EXPECT_GT(l3, 0.0);
        }
    }
}

TEST(Lyapunov, OffsetIsExactAlongASharedOrbit) {
    // Evaluating the slope-8 and slope-2 derivatives on the same points differs by
    // exactly ln 4 per point, since the inner chain is identical.
    for (auto c : kAllCouplings) {
        const MapSpec type1 = make_coupling(c, UtfKind::TentSlope2, 0.63);
        const MapSpec type2 = make_coupling(c, UtfKind::TentSlope4, 0.63);
        const MapSpec type3 = make_coupling(c, UtfKind::TentSlope8, 0.63);
        const Orbit o = iterate_orbit(type1, 0.21, 5000, 100);
        double s1 = 0.0, s2 = 0.0, s3 = 0.0;
        std::size_t used = 0;
        for (double x : o.states) {
            const auto d1 = slope(type1, x), d2 = slope(type2, x), d3 = slope(type3, x);
            if (!d1 || !d2 || !d3 || *d1 == 0.0) continue;
            s1 += std::log(std::abs(*d1));
            s2 += std::log(std::abs(*d2));
            s3 += std::log(std::abs(*d3));
            ++used;
        }
        ASSERT_GT(used, 4000u);
        EXPECT_NEAR((s3 - s1) / double(used), std::log(4.0), 1e-12) << to_string(c);
        EXPECT_NEAR((s2 - s1) / double(used), std::log(2.0), 1e-12) << to_string(c);
    }
}

TEST(Lyapunov, ConvergesWhenDoublingIterations) {
    for (auto c : kAllCouplings) {
        const MapSpec m = make_coupling(c, UtfKind::TentSlope8, 0.45);
        const double a = lyapunov_exponent(m, 0.1, 100000).lambda;
        const double b = lyapunov_exponent(m, 0.1, 200000).lambda;
        EXPECT_LT(std::abs(a - b) / b, 0.01) << to_string(c);
    }
}

TEST(Bifurcation, LogisticLowRCollapses) {
    const std::vector<double> grid{0.2};
    const auto b = bifurcation_data([](double r) { return SeedMap{SeedMapKind::Logistic, r}; }, grid, 0.1, 500, 200);
    ASSERT_EQ(b.samples.size(), 1u);
    const auto [lo, hi] = std::minmax_element(b.samples[0].begin(), b.samples[0].end());
    EXPECT_LT(*hi - *lo, 1e-6);
}

TEST(Bifurcation, TypeThreeFillsTheInterval) {
    const auto grid = unit_grid(11);
    for (auto c : kAllCouplings) {
        const auto b = bifurcation_data([c](double r) { return make_coupling(c, UtfKind::TentSlope8, r); }, grid,
                                        0.1, 500, 200);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& s = b.samples[i];
            const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
            if (*hi - *lo == 0.0) continue;  // float orbit fell onto 0 at an end point (see SE notes)
            EXPECT_GT(*hi - *lo, 0.9) << to_string(c) << " r=" << grid[i];
            for (double v : s) {
                ASSERT_GE(v, 0.0);
                ASSERT_LT(v, 1.0);
            }
        }
    }
}

TEST(Bifurcation, KeepOneIsLastOrbitState) {
    const std::vector<double> grid{0.3, 0.7};
    auto fam = [](double r) { return make_coupling(Coupling::STCM, UtfKind::TentSlope4, r); };
    const auto b = bifurcation_data(fam, grid, 0.1, 77, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(b.samples[i][0], iterate_orbit(fam(grid[i]), 0.1, 78).states.back());
    }
    const auto again = bifurcation_data(fam, grid, 0.1, 77, 1);
    EXPECT_EQ(again.samples, b.samples);
}

TEST(UnitGrid, EndpointsAndSpacing) {
    const auto g = unit_grid(101);
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_DOUBLE_EQ(g[37], 0.37);
    EXPECT_THROW(unit_grid(0), std::invalid_argument);
}

TEST(Cobweb, SegmentPattern) {
    const MapSpec m = make_coupling(Coupling::LSCM, UtfKind::TentSlope8, 0.3);
    const auto one = cobweb_data(m, 0.2, 1);
    ASSERT_EQ(one.segments.size(), 2u);
    EXPECT_EQ(one.segments[0].from, (Point2{0.2, 0.2}));
    EXPECT_EQ(one.segments[0].to.x, 0.2);

    const auto t = cobweb_data(m, 0.2, 40);
    ASSERT_EQ(t.segments.size(), 80u);
    for (std::size_t i = 0; i < t.segments.size(); ++i) {
        const auto& s = t.segments[i];
        if (i % 2 == 0) {
            EXPECT_EQ(s.from.x, s.to.x);
            EXPECT_EQ(s.from.x, s.from.y);
        } else {
            EXPECT_EQ(s.from.y, s.to.y);
            EXPECT_EQ(s.to.x, s.to.y);
            EXPECT_EQ(s.from, t.segments[i - 1].to);
        }
        for (double v : {s.from.x, s.from.y, s.to.x, s.to.y}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(Cobweb, FixedPointSegmentsAreDegenerate) {
    const auto t = cobweb_data(SeedMap{SeedMapKind::Logistic, 0.5}, 0.5, 5);
    for (const auto& s : t.segments) EXPECT_EQ(s.from, s.to);
}

TEST(SampleEntropy, ConstantSeriesIsZero) {
    const std::vector<double> flat(300, 0.42);
    EXPECT_EQ(sample_entropy(flat, 2, 0.1).value, 0.0);
    EXPECT_EQ(sample_entropy_scaled(flat).value, 0.0);
}

TEST(SampleEntropy, AlternatingSeriesIsZero) {
    std::vector<double> alt(200);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = double(i % 2);
    const auto r = sample_entropy(alt, 2, 0.5);
    EXPECT_EQ(r.value, 0.0);
    EXPECT_FALSE(r.undefined);
}

TEST(SampleEntropy, MatchesBruteForce) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> s(300);
        double v = 0.0;
        for (auto& x : s) x = v = 0.7 * v + g(rng);
        for (std::size_t m : {1u, 2u, 3u}) {
            const double tol = 0.2 * sample_stddev(s);
            EXPECT_NEAR(sample_entropy(s, m, tol).value, brute_sampen(s, m, tol), 1e-12);
        }
    }
}

TEST(SampleEntropy, NoMatchesIsFlaggedInfinite) {
    std::vector<double> ramp(150);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = double(i);
    const auto r = sample_entropy(ramp, 2, 0.5);
    EXPECT_TRUE(r.undefined);
    EXPECT_TRUE(std::isinf(r.value));
}

TEST(SampleEntropy, Preconditions) {
    EXPECT_THROW(sample_entropy(std::vector<double>(99, 0.0), 2, 0.1), std::invalid_argument);
    EXPECT_THROW(sample_entropy(std::vector<double>(200, 0.0), 2, 0.0), std::invalid_argument);
}

TEST(SampleEntropy, TypeThreeAboveIdentityCoupling) {
    for (auto c : kAllCouplings) {
        for (double r : {0.2, 0.5, 0.7}) {
            const double s3 = orbit_sample_entropy(make_coupling(c, UtfKind::TentSlope8, r), 0.1, 2000).value;
            const double s0 = orbit_sample_entropy(make_coupling(c, UtfKind::Identity, r), 0.1, 2000).value;
            EXPECT_GT(s3, s0) << to_string(c) << " r=" << r;
        }
    }
}
