#ifndef RAMSEY_NUMBERS_HPP
#define RAMSEY_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace ramsey {

// Vertices of K_N are unbounded positive integers; densities are exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vertex = BigInt;
using Color = int;

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;
inline constexpr Color kGreen = 2;

struct refusal_error : std::runtime_error {
    explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

struct window_exhausted_error : refusal_error {
    explicit window_exhausted_error(const std::string& what) : refusal_error(what) {}
};

inline std::optional<std::uint64_t> as_u64(const BigInt& v)
{
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

inline unsigned bit_length(const BigInt& v)
{
    if (v <= 0)
        return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

// 1-indexed bit of t, counting from the least significant digit.
inline int bit_of(const BigInt& t, const BigInt& s)
{
    if (s < 1)
        throw std::invalid_argument("bit index must be >= 1");
    if (t <= 0)
        return 0;
    if (s > bit_length(t))
        return 0;
    return boost::multiprecision::bit_test(t, static_cast<unsigned>(s - 1)) ? 1 : 0;
}

inline BigInt binomial(const BigInt& n, unsigned k)
{
    if (n < k)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned j = 0; j < k; ++j) {
        num *= n - j;
        den *= j + 1;
    }
    return num / den;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    if (b <= 0)
        throw std::invalid_argument("floor_div needs positive divisor");
    BigInt q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline BigInt mod_pos(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return r;
}

std::string rat_to_string(const Rat& q);
// 12 significant digits, deterministic across platforms.
std::string rat_to_decimal(const Rat& q, int significant = 12);

} // namespace ramsey

#endif
