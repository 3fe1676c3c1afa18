#ifndef IDLAB_CHECKED_HPP
#define IDLAB_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace idlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// All counting and coefficient arithmetic in this library is exact-or-error:
// a result that does not fit in 64 bits throws instead of wrapping.

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

// floor division rounding toward -infinity (a/b in C++ truncates toward zero)
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    i64 r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

// ceiling division for non-negative operands
inline i64 ceil_div_nonneg(i64 a, i64 b) {
    return (a + b - 1) / b;
}

} // namespace idlab

#endif
