#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ew {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers. Canonical form
// is maintained after every operation: denominator > 0 and
// gcd(|numerator|, denominator) = 1, so equality is plain fieldwise
// comparison and zero is always 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
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
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const {
        return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.str();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);  // gcd(0, d) = d
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

}  // namespace ew
