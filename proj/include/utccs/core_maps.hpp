// Seed maps, unit transform functions and the unit-transform coupling rule
//
//   x_{n+1} = f((F1(r, x_n) + F2(1 - r, x_n)) mod 1)
//
// Everything here is a pure function of its arguments.
#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace utccs {

enum class SeedMapKind { Logistic, Tent, Sine };

enum class UtfKind {
    Identity,
    Exp2,        // 2^x - 1
    Log2,        // ln(1 + x) / ln 2
    SinePi,      // sin(pi x)
    ArcsinNorm,  // (2 / pi) asin(x)
    TentSlope2,
    TentSlope4,
    TentSlope8,
};

namespace detail {

inline void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(v));
    }
}

// Fractional part with an exact 1.0 (or 2.0) folded to 0.0.
inline double frac01(double s) {
    const double f = s - std::floor(s);
    return f >= 1.0 ? 0.0 : f;
}

constexpr int tent_slope(UtfKind kind) {
    switch (kind) {
        case UtfKind::TentSlope2: return 2;
        case UtfKind::TentSlope4: return 4;
        case UtfKind::TentSlope8: return 8;
        default: return 0;
    }
}

// Piecewise-linear zig-zag with |slope| = k on [0,1]; each of the k pieces
// covers [0,1]. Piece j is [j/k, (j+1)/k), the last piece closed at 1.
inline double zigzag(int k, double x) {
    int piece = static_cast<int>(x * k);
    if (piece >= k) piece = k - 1;
    const double t = k * x - piece;
    return (piece % 2 == 0) ? t : 1.0 - t;
}

}  // namespace detail

/// Seed map value F(r, x). Logistic 4rx(1-x), Tent 2rx / 2r(1-x) split at
/// 0.5 (0.5 takes the second branch), Sine r sin(pi x).
inline double eval_seed_map(SeedMapKind kind, double r, double x) {
    detail::require_unit(r, "seed map parameter r");
    detail::require_unit(x, "seed map state x");
    switch (kind) {
        case SeedMapKind::Logistic: return 4.0 * r * x * (1.0 - x);
        case SeedMapKind::Tent: return x < 0.5 ? 2.0 * r * x : 2.0 * r * (1.0 - x);
        case SeedMapKind::Sine: return r * std::sin(std::numbers::pi * x);
    }
    throw std::invalid_argument("unknown seed map kind");
}

/// dF/dx, or nullopt at the Tent fold x = 0.5.
inline std::optional<double> seed_map_slope(SeedMapKind kind, double r, double x) {
    switch (kind) {
        case SeedMapKind::Logistic: return 4.0 * r * (1.0 - 2.0 * x);
        case SeedMapKind::Tent:
            if (x == 0.5) return std::nullopt;
            return x < 0.5 ? 2.0 * r : -2.0 * r;
        case SeedMapKind::Sine: return r * std::numbers::pi * std::cos(std::numbers::pi * x);
    }
    return std::nullopt;
}

inline double eval_utf(UtfKind kind, double x) {
    detail::require_unit(x, "UTF argument");
    switch (kind) {
        case UtfKind::Identity: return x;
        case UtfKind::Exp2: return std::min(1.0, std::exp2(x) - 1.0);
        case UtfKind::Log2: return std::min(1.0, std::log1p(x) / std::numbers::ln2);
        case UtfKind::SinePi: return std::max(0.0, std::sin(std::numbers::pi * x));
        case UtfKind::ArcsinNorm: return std::min(1.0, 2.0 / std::numbers::pi * std::asin(x));
        case UtfKind::TentSlope2:
        case UtfKind::TentSlope4:
        case UtfKind::TentSlope8: return detail::zigzag(detail::tent_slope(kind), x);
    }
    throw std::invalid_argument("unknown UTF kind");
}

/// df/dx, or nullopt on a fold of the piecewise-linear transforms.
inline std::optional<double> utf_slope(UtfKind kind, double x) {
    switch (kind) {
        case UtfKind::Identity: return 1.0;
        case UtfKind::Exp2: return std::exp2(x) * std::numbers::ln2;
        case UtfKind::Log2: return 1.0 / ((1.0 + x) * std::numbers::ln2);
        case UtfKind::SinePi: return std::numbers::pi * std::cos(std::numbers::pi * x);
        case UtfKind::ArcsinNorm:
            if (x >= 1.0) return std::nullopt;
            return 2.0 / (std::numbers::pi * std::sqrt(1.0 - x * x));
        case UtfKind::TentSlope2:
        case UtfKind::TentSlope4:
        case UtfKind::TentSlope8: {
            const int k = detail::tent_slope(kind);
            const double scaled = x * k;
            if (scaled > 0.0 && scaled < k && scaled == std::floor(scaled)) return std::nullopt;
            int piece = static_cast<int>(scaled);
            if (piece >= k) piece = k - 1;
            return piece % 2 == 0 ? double(k) : -double(k);
        }
    }
    return std::nullopt;
}

/// A fully parameterized coupled map: seed_a runs at r, seed_b at 1 - r.
struct MapSpec {
    SeedMapKind seed_a = SeedMapKind::Logistic;
    SeedMapKind seed_b = SeedMapKind::Sine;
    UtfKind utf = UtfKind::Identity;
    double r = 0.5;

    friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

/// A seed map iterated on its own, x_{n+1} = F(r, x_n).
struct SeedMap {
    SeedMapKind kind = SeedMapKind::Logistic;
    double r = 1.0;

    friend bool operator==(const SeedMap&, const SeedMap&) = default;
};

enum class Coupling { LSCM, TLCM, STCM };

/// The named couplings: Logistic-Sine, Tent-Logistic, Sine-Tent.
inline MapSpec make_coupling(Coupling c, UtfKind utf, double r) {
    switch (c) {
        case Coupling::LSCM: return {SeedMapKind::Logistic, SeedMapKind::Sine, utf, r};
        case Coupling::TLCM: return {SeedMapKind::Tent, SeedMapKind::Logistic, utf, r};
        case Coupling::STCM: return {SeedMapKind::Sine, SeedMapKind::Tent, utf, r};
    }
    throw std::invalid_argument("unknown coupling");
}

/// Type I/II/III use the zig-zag transforms of slope 2/4/8.
inline UtfKind utf_for_type(int type) {
    switch (type) {
        case 1: return UtfKind::TentSlope2;
        case 2: return UtfKind::TentSlope4;
        case 3: return UtfKind::TentSlope8;
    }
    throw std::invalid_argument("coupling type must be 1, 2 or 3");
}

/// Pre-transform coupled sum reduced mod 1.
inline double coupled_sum(const MapSpec& spec, double x) {
    return detail::frac01(eval_seed_map(spec.seed_a, spec.r, x) +
                          eval_seed_map(spec.seed_b, 1.0 - spec.r, x));
}

/// One step of the coupled map. The result is in [0,1): an exact 1.0 from the
/// transform (SinePi at 0.5, zig-zag folds) is reduced to 0.0 like the sum.
inline double couple_step(const MapSpec& spec, double x) {
    return detail::frac01(eval_utf(spec.utf, coupled_sum(spec, x)));
}

// Uniform step/slope surface used by the chaos metrics.
inline double step(const MapSpec& spec, double x) { return couple_step(spec, x); }
inline double step(const SeedMap& m, double x) { return eval_seed_map(m.kind, m.r, x); }

/// dF/dx along the chain rule through transform, mod-1 (unit slope) and
/// seeds. nullopt where F is not differentiable: Tent fold, exact mod-1
/// wrap, transform folds.
inline std::optional<double> slope(const MapSpec& spec, double x) {
    const double raw = eval_seed_map(spec.seed_a, spec.r, x) +
                       eval_seed_map(spec.seed_b, 1.0 - spec.r, x);
    if (raw == 1.0 || raw == 2.0) return std::nullopt;
    const auto da = seed_map_slope(spec.seed_a, spec.r, x);
    const auto db = seed_map_slope(spec.seed_b, 1.0 - spec.r, x);
    const auto df = utf_slope(spec.utf, detail::frac01(raw));
    if (!da || !db || !df) return std::nullopt;
    return *df * (*da + *db);
}

inline std::optional<double> slope(const SeedMap& m, double x) {
    return seed_map_slope(m.kind, m.r, x);
}

/// Anything that iterates the unit interval and knows its own derivative.
template <class M>
concept UnitMap = requires(const M& m, double x) {
    { step(m, x) } -> std::convertible_to<double>;
    { slope(m, x) } -> std::same_as<std::optional<double>>;
};

struct Orbit {
    double x0 = 0.0;
    std::size_t transient_discard = 0;
    std::vector<double> states;
};

/// Records `length` states after dropping `transient_discard` iterates.
/// states[0] is the first recorded iterate, never x0 itself.
template <UnitMap M>
Orbit iterate_orbit(const M& map, double x0, std::size_t length,
                    std::size_t transient_discard = 0) {
    if (length == 0) throw std::invalid_argument("orbit length must be >= 1");
    if (!(x0 > 0.0 && x0 < 1.0)) throw std::domain_error("orbit x0 must lie in (0,1)");
    Orbit orbit{x0, transient_discard, {}};
    orbit.states.reserve(length);
    double x = x0;
    for (std::size_t i = 0; i < transient_discard; ++i) x = step(map, x);
    for (std::size_t i = 0; i < length; ++i) {
        x = step(map, x);
        orbit.states.push_back(x);
    }
    return orbit;
}

// Names used by the CLI and reports.

inline std::string_view to_string(SeedMapKind k) {
    switch (k) {
        case SeedMapKind::Logistic: return "logistic";
        case SeedMapKind::Tent: return "tent";
        case SeedMapKind::Sine: return "sine";
    }
    return "?";
}

inline std::string_view to_string(UtfKind k) {
    switch (k) {
        case UtfKind::Identity: return "identity";
        case UtfKind::Exp2: return "exp2";
        case UtfKind::Log2: return "log2";
        case UtfKind::SinePi: return "sinepi";
        case UtfKind::ArcsinNorm: return "arcsin";
        case UtfKind::TentSlope2: return "tent2";
        case UtfKind::TentSlope4: return "tent4";
        case UtfKind::TentSlope8: return "tent8";
    }
    return "?";
}

inline std::string_view to_string(Coupling c) {
    switch (c) {
        case Coupling::LSCM: return "lscm";
        case Coupling::TLCM: return "tlcm";
        case Coupling::STCM: return "stcm";
    }
    return "?";
}

inline constexpr UtfKind kAllUtfKinds[] = {
    UtfKind::Identity,   UtfKind::Exp2,       UtfKind::Log2,       UtfKind::SinePi,
    UtfKind::ArcsinNorm, UtfKind::TentSlope2, UtfKind::TentSlope4, UtfKind::TentSlope8,
};

inline constexpr Coupling kAllCouplings[] = {Coupling::LSCM, Coupling::TLCM, Coupling::STCM};

}  // namespace utccs
