#ifndef RAMSEY_DENSITY_HPP
#define RAMSEY_DENSITY_HPP

#include "ramsey/oracles.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ramsey {

// Default horizon schedule: t_j = ceil(1000 * 1.5^j), capped at limit, with
// the limit itself appended. Burn-in for limsup/liminf estimates is 3 samples.
inline constexpr int kBurnIn = 3;
std::vector<BigInt> geometric_schedule(const BigInt& limit, const BigInt& start = 1000);

struct DensityProfile {
    std::vector<BigInt> horizons;
    std::vector<Rat> samples;     // exact prefix densities per horizon
    Rat ud_estimate;              // max over the post-burn-in suffix
    Rat ld_estimate;              // min over the post-burn-in suffix
    bool exact = false;
    Rat exact_value;
    BigInt envelope_constant;     // |sample - exact| <= envelope/t when exact
};

Rat prefix_density(const VertexSetOracle& set, const Vertex& t);
DensityProfile density_profile(const VertexSetOracle& set, const std::vector<BigInt>& schedule);
Rat exact_density(const VertexSetOracle& set);

struct GrowthFn {
    std::string name;
    std::function<BigInt(const BigInt&)> eval;

    static GrowthFn identity();
    static GrowthFn sqrt_ceil();
    static GrowthFn log2_ceil();
    static GrowthFn linear(const BigInt& a, const BigInt& b);  // a*n + b
};

enum class ZfTrend { Vanishing, Bounded, Diverging };

struct ZfProfile {
    std::vector<BigInt> horizons;
    std::vector<Rat> ratios;  // |A ∩ [n]| / f(n)
    ZfTrend trend;
};

// Ratio sequence |A∩[n]|/f(n) with a verdict from post-burn-in suffix
// monotonicity: strictly decreasing (or identically zero) -> Vanishing,
// strictly increasing -> Diverging, otherwise Bounded.
ZfProfile zf_membership_profile(const VertexSetOracle& set, const GrowthFn& f,
                                const std::vector<BigInt>& schedule);

const char* zf_trend_name(ZfTrend t);

} // namespace ramsey

#endif
