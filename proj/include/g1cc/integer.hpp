// Overflow-checked 64-bit integer. Every arithmetic operation that would
// wrap throws std::overflow_error instead; family parameters are
// user-supplied, so silent wraparound is never acceptable.
#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace g1cc {

class Integer {
  public:
    constexpr Integer() = default;
    constexpr Integer(long long v) : v_(v) {}

    constexpr long long value() const { return v_; }

    friend Integer operator+(Integer a, Integer b) {
        long long r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in addition");
        return r;
    }

    friend Integer operator-(Integer a, Integer b) {
        long long r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in subtraction");
        return r;
    }

    friend Integer operator*(Integer a, Integer b) {
        long long r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in multiplication");
        return r;
    }

    Integer operator-() const { return Integer(0) - *this; }

    // Truncating division, checked for zero divisor and LLONG_MIN / -1.
    friend Integer operator/(Integer a, Integer b) {
        if (b.v_ == 0) throw std::domain_error("integer division by zero");
        if (a.v_ == INT64_MIN && b.v_ == -1)
            throw std::overflow_error("integer overflow in division");
        return a.v_ / b.v_;
    }

    friend Integer operator%(Integer a, Integer b) {
        if (b.v_ == 0) throw std::domain_error("integer remainder by zero");
        if (a.v_ == INT64_MIN && b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }

    Integer& operator+=(Integer b) { return *this = *this + b; }
    Integer& operator-=(Integer b) { return *this = *this - b; }
    Integer& operator*=(Integer b) { return *this = *this * b; }
    Integer& operator/=(Integer b) { return *this = *this / b; }

    friend constexpr bool operator==(Integer, Integer) = default;
    friend constexpr auto operator<=>(Integer, Integer) = default;

    friend std::ostream& operator<<(std::ostream& os, Integer a) { return os << a.v_; }

  private:
    long long v_ = 0;
};

inline std::string to_string(Integer a) { return std::to_string(a.value()); }

inline Integer abs(Integer a) { return a < 0 ? -a : a; }

inline int sign(Integer a) { return a.value() < 0 ? -1 : (a.value() > 0 ? 1 : 0); }

inline bool is_even(Integer a) { return a.value() % 2 == 0; }
inline bool is_odd(Integer a) { return !is_even(a); }

// gcd(0, 0) = 0; result is always nonnegative.
inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor of the square root; rejects negative input. Comparisons go through
// division so the correction loops cannot themselves overflow near INT64_MAX.
inline Integer isqrt(Integer n) {
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    const long long nv = n.value();
    long long r = static_cast<long long>(__builtin_sqrtl(static_cast<long double>(nv)));
    if (r < 0) r = 0;
    while (r > 0 && r > nv / r) --r;
    while (r + 1 <= nv / (r + 1)) ++r;
    return r;
}

inline bool is_perfect_square(Integer n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

}  // namespace g1cc
