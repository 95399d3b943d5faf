// Checked 128-bit integer helpers shared by the lattice arithmetic.
// Every operation either returns the exact value or throws; nothing wraps.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcf {

using i128 = __int128;
using u128 = unsigned __int128;

struct arithmetic_overflow : std::overflow_error {
    arithmetic_overflow() : std::overflow_error("exact integer arithmetic overflow") {}
};

inline i128 checked_add(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow{};
    return r;
}

inline i128 checked_sub(i128 x, i128 y) {
    i128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw arithmetic_overflow{};
    return r;
}

inline i128 checked_mul(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow{};
    return r;
}

inline u128 checked_add(u128 x, u128 y) {
    u128 r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow{};
    return r;
}

inline u128 checked_mul(u128 x, u128 y) {
    u128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow{};
    return r;
}

// |x| as unsigned; exact even for the minimum value.
inline u128 magnitude(i128 x) {
    return x < 0 ? u128(0) - u128(x) : u128(x);
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor square root. The float seed is corrected with overflow-free
// integer comparisons (x <= n/x  <=>  x*x <= n for positive x).
inline u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    if (x > u128(UINT64_MAX)) x = u128(UINT64_MAX);
    if (x == 0) x = 1;
    while (x > 1 && x > n / x) --x;
    while (x + 1 <= n / (x + 1)) ++x;
    return x;
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(magnitude(v));
    return to_string(static_cast<u128>(v));
}

inline int64_t to_int64(i128 v) {
    if (v < INT64_MIN || v > INT64_MAX) throw arithmetic_overflow{};
    return static_cast<int64_t>(v);
}

inline uint64_t to_uint64(u128 v) {
    if (v > UINT64_MAX) throw arithmetic_overflow{};
    return static_cast<uint64_t>(v);
}

}  // namespace gcf
