#pragma once

#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hypercone/rational.hpp"

namespace hypercone {

/// Dense univariate polynomial over Rational. Coefficients ascend by degree;
/// the leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector, degree -1).
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(Rational c);
    static Poly monomial(int degree, Rational c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Poly derivative() const;

    /// q with q(x) = p(x + c), exact (iterated synthetic division).
    Poly taylor_shift(const Rational& c) const;

    /// p(-x).
    Poly mirror() const;

    /// Strips the x^k factor at the origin; returns k (0 if p(0) != 0).
    int deflate_origin();

    /// Exact division by (x - r); remainder must vanish.
    Poly divide_by_linear(const Rational& r) const;

    /// (quotient, remainder) of *this by d, exact over the rationals.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Positive rational c such that p/c has coprime integer coefficients.
    Rational content() const;
    /// p / content(); sign pattern unchanged.
    Poly primitive_part() const;

    /// 1 + max|a_i|/|a_n|; every real root lies strictly inside (-B, B).
    Rational cauchy_root_bound() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
    friend Poly operator/(const Poly& p, const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Sign changes in the coefficient sequence, zeros skipped. p must be nonzero.
int descartes_sign_changes(const Poly& p);

/// Exact polynomial gcd (monic representative).
Poly poly_gcd(Poly a, Poly b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hypercone
