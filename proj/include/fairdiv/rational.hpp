#ifndef FAIRDIV_RATIONAL_HPP
#define FAIRDIV_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {

using BigInt = mpz_class;

/// Exact fraction with arbitrary-precision integer parts.
/// Invariant: den > 0 and gcd(|num|, den) == 1 at all times.
/// No floating point is used anywhere in the solver; every share,
/// bound and LP coefficient goes through this type.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "p/q", "p", optional leading '-'. Rejects everything else.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

    /// Largest integer <= value / smallest integer >= value.
    BigInt floor() const;
    BigInt ceil() const;

    std::string str() const;

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw_tag{}); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct raw_tag {};
    Rational(BigInt num, BigInt den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

/// ceil(x) / floor(x) as plain machine integers; used for b-matching bounds,
/// which are at most m in every construction here.
long ceil_long(const Rational& x);
long floor_long(const Rational& x);

} // namespace fairdiv

#endif
