#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latkit {

// All lattice arithmetic in this library is exact. Entries live in checked
// 64-bit integers: any operation that would wrap throws overflow_error
// instead of returning a wrong answer.
using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = checked_neg(a);
    if (b < 0) b = checked_neg(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Largest t >= 0 with t*t <= n; exact.
inline Int isqrt_floor(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    if (n == 0) return 0;
    Int t = static_cast<Int>(__builtin_sqrtl(static_cast<long double>(n)));
    while (t > 0 && t > n / t) --t;
    while ((t + 1) <= n / (t + 1)) ++t;
    return t;
}

// Exact rational number, always normalized: den > 0, gcd(num, den) = 1.
struct Rat {
    Int num = 0;
    Int den = 1;

    Rat() = default;
    Rat(Int n) : num(n), den(1) {}
    Rat(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        Int g = gcd_int(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    // Largest integer <= value.
    Int floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    Rat operator-() const {
        Rat r;
        r.num = checked_neg(num);
        r.den = den;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace latkit
