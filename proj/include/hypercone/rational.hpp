#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace hypercone {

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. All arithmetic is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: integers embed
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { mpq_canonicalize(v_.get_mpq_t()); }

    /// Accepts "n", "n/d", or a plain decimal such as "-3.25".
    static Rational from_string(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, unsigned long e);

/// Fixed-point decimal with exactly `digits` places after the point,
/// rounded half-even. digits >= 0.
std::string decimal_string(const Rational& x, int digits);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace hypercone
