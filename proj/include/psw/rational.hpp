#ifndef PSW_RATIONAL_HPP
#define PSW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "psw/errors.hpp"

namespace psw {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational p/q with q > 0, always kept in lowest terms. Certificates
// never touch floating point, so every bound comparison goes through this.
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(BigInt n) : num(std::move(n)), den(1) {}
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        require(den != 0, "PreconditionFailed", "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num != 0, "PreconditionFailed", "rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    BigInt floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }
    BigInt ceil() const {
        if (num >= 0) return (num + den - 1) / den;
        return -((-num) / den);
    }

    std::string str() const {
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
};

// smallest k >= 0 with 2^k >= x, for x >= 1
inline long long ceil_log2(const BigInt& x) {
    require(x >= 1, "PreconditionFailed", "ceil_log2 of non-positive value");
    long long k = 0;
    BigInt p = 1;
    while (p < x) { p <<= 1; ++k; }
    return k;
}

// largest k >= 0 with 2^k <= x, for x >= 1
inline long long floor_log2(const BigInt& x) {
    require(x >= 1, "PreconditionFailed", "floor_log2 of non-positive value");
    long long k = 0;
    BigInt p = 2;
    while (p <= x) { p <<= 1; ++k; }
    return k;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

} // namespace psw

#endif
