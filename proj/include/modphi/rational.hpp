#ifndef MODPHI_RATIONAL_HPP
#define MODPHI_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "modphi/errors.hpp"

namespace modphi {

using int128 = __int128;

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

// Exact rational on checked 128-bit integers. Throws on overflow instead of
// silently wrapping; the exact-arithmetic test paths all fit well under the cap.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 n) : num_(n), den_(1) {}
    Rational(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

    static Rational of(long long n, long long d) { return Rational(int128(n), int128(d)); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const { return (double)num_ / (double)den_; }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // a.n/a.d + b.n/b.d with gcd trick to keep intermediates small
        int128 g = gcd128(a.den_, b.den_);
        int128 da = a.den_ / g;
        int128 db = b.den_ / g;
        int128 n = add_checked(mul_checked(a.num_, db), mul_checked(b.num_, da));
        int128 d = mul_checked(a.den_, db);
        return Rational(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = gcd128(a.num_, b.den_);
        int128 g2 = gcd128(b.num_, a.den_);
        return raw(mul_checked(a.num_ / g1, b.num_ / g2),
                   mul_checked(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw domain_error("rational division by zero");
        Rational inv = raw(b.den_, b.num_);
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return (a - b).sign() <= 0;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational pow(int e) const {
        if (e < 0) return Rational(1) / pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e > 1) ? b * b : b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (den_ == 1) return int128_to_string(num_);
        return int128_to_string(num_) + "/" + int128_to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    static int128 mul_checked(int128 a, int128 b) {
        int128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw numeric_error("rational overflow (mul)");
        return r;
    }
    static int128 add_checked(int128 a, int128 b) {
        int128 r;
        if (__builtin_add_overflow(a, b, &r)) throw numeric_error("rational overflow (add)");
        return r;
    }
    static int128 gcd128(int128 a, int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

  private:
    static Rational raw(int128 n, int128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }
    void normalize() {
        if (den_ == 0) throw domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_;
    int128 den_;
};

} // namespace modphi

#endif
