#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sdcap {

// Exact rational on 64-bit terms. Bit-level geometry has rational segment
// boundaries whenever the channel gains are integers, and branch membership
// at those boundaries must not depend on float rounding.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n) : num(n) {}
    Fraction(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Fraction: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                             static_cast<__int128>(a.den) * b.den));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                             static_cast<__int128>(a.den) * b.den));
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num == 0) throw std::domain_error("Fraction: division by zero");
        return Fraction(make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num));
    }
    Fraction operator-() const { return Fraction(-num, den); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        const __int128 lhs = static_cast<__int128>(a.num) * b.den;
        const __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    struct Raw {
        long long n, d;
    };
    Fraction(Raw r) : num(r.n), den(r.d) { reduce(); }

    static Raw make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Fraction: 64-bit overflow");
        return Raw{static_cast<long long>(n), static_cast<long long>(d)};
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
};

// ---- scalar adaptors shared by the double / Fraction instantiations ----

inline double to_double(double x) { return x; }
inline double to_double(const Fraction& x) { return x.value(); }

template <typename T>
inline T scalar_from_int(long long n);
template <>
inline double scalar_from_int<double>(long long n) { return static_cast<double>(n); }
template <>
inline Fraction scalar_from_int<Fraction>(long long n) { return Fraction(n); }

// Smallest integer K with K*x >= 1, for x in (0, 1].
inline long long ceil_recip(double x) {
    return static_cast<long long>(std::ceil(1.0 / x));
}
inline long long ceil_recip(const Fraction& x) {
    if (x.num <= 0) throw std::domain_error("ceil_recip: nonpositive argument");
    return (x.den + x.num - 1) / x.num;
}

// Comparison slack: float endpoints are equal up to rounding noise, exact
// rationals are equal exactly.
template <typename T>
inline T default_tol();
template <>
inline double default_tol<double>() { return 1e-12; }
template <>
inline Fraction default_tol<Fraction>() { return Fraction(0); }

inline double abs_val(double x) { return std::fabs(x); }
inline Fraction abs_val(const Fraction& x) { return x.num < 0 ? -x : x; }

} // namespace sdcap
