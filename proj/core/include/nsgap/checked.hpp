#pragma once

#include <cstdint>
#include <string>

#include "nsgap/errors.hpp"

namespace nsgap {

// Every arithmetic step in the library goes through these. A signed-64
// overflow is reported as errc::overflow, never silent wraparound.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw error(errc::overflow, "addition overflows 64-bit range");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw error(errc::overflow, "subtraction overflows 64-bit range");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw error(errc::overflow, "multiplication overflows 64-bit range");
    return out;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (base < 0 || exp < 0)
        throw error(errc::zero_or_negative_term,
                    "checked_pow expects nonnegative base and exponent");
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

} // namespace nsgap
