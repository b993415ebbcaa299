#pragma once

// Overflow-safe integer helpers. All spectral and energy arithmetic runs in
// 128-bit accumulators internally; results are narrowed to int64_t with a
// range check before they cross any public boundary.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icg {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

static_assert(sizeof(int128) == 16, "128-bit integer support required");

inline std::int64_t to_int64(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("multiplication overflow");
    return r;
}

// base^exp with overflow detection; exp >= 0.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    uint128 u = neg ? -static_cast<uint128>(v) : static_cast<uint128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace icg
