#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "azeta/types.hpp"

namespace azeta {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision signed rational, always stored in lowest terms with a
// positive denominator, so equality of representations is value equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

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

    double to_double() const {
        if (num_ == 0) return 0.0;
        if (msb_of(num_) < 1000 && msb_of(den_) < 1000)
            return num_.convert_to<double>() / den_.convert_to<double>();
        double lg = log_abs();
        return sign() * std::exp(lg);
    }

    // Natural log of |value|; exact-integer bit arithmetic keeps this accurate
    // even when numerator or denominator overflow binary64.
    double log_abs() const {
        if (num_ == 0) throw domain_error("Rational: log of zero");
        return log_big(boost::multiprecision::abs(num_)) - log_big(den_);
    }

    // "num/den", or just "num" for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    static unsigned msb_of(const BigInt& v) {
        return boost::multiprecision::msb(boost::multiprecision::abs(v));
    }

    static double log_big(const BigInt& v) {
        unsigned bits = boost::multiprecision::msb(v);  // v > 0
        if (bits <= 52) return std::log(v.convert_to<double>());
        BigInt top = v >> (bits - 52);
        return std::log(top.convert_to<double>()) +
               static_cast<double>(bits - 52) * 0.69314718055994530941723212145818;
    }

    void normalize() {
        if (den_ == 0) throw domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace azeta
