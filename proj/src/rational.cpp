#include "fairdiv/rational.hpp"

#include <ostream>

namespace fairdiv {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        fail(Errc::InvalidRational, "zero denominator");
    normalize();
}

void Rational::normalize() {
    if (mpz_sgn(den_.get_mpz_t()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](const std::string& s, bool allow_sign) -> BigInt {
        if (s.empty())
            fail(Errc::InvalidRational, "empty integer in '" + text + "'");
        std::size_t start = (allow_sign && s[0] == '-') ? 1 : 0;
        if (start == s.size())
            fail(Errc::InvalidRational, "bad integer in '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                fail(Errc::InvalidRational, "bad integer in '" + text + "'");
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text, true));
    // the sign belongs to the numerator; denominators are bare digits
    return Rational(parse_int(text.substr(0, slash), true),
                    parse_int(text.substr(slash + 1), false));
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1)
        s += "/" + den_.get_str();
    return s;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
        fail(Errc::InvalidRational, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long ceil_long(const Rational& x) {
    BigInt c = x.ceil();
    if (!c.fits_slong_p())
        fail(Errc::InvalidParams, "ceil out of range");
    return c.get_si();
}

long floor_long(const Rational& x) {
    BigInt f = x.floor();
    if (!f.fits_slong_p())
        fail(Errc::InvalidParams, "floor out of range");
    return f.get_si();
}

} // namespace fairdiv
