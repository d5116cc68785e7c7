#include "hypercone/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace hypercone {

namespace {
const Rational kZero{};
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(int degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational());
        p.c_.back() = std::move(c);
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d;
    d.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(d));
}

Poly Poly::taylor_shift(const Rational& c) const {
    if (c.is_zero() || is_zero()) return *this;
    // Horner-style synthetic division by (x - (-c)), repeated: after pass k,
    // a[k] holds the coefficient of x^k of p(x + c).
    std::vector<Rational> a = c_;
    const size_t n = a.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t j = n - 1; j > k; --j) a[j - 1] += c * a[j];
    return Poly(std::move(a));
}

Poly Poly::mirror() const {
    std::vector<Rational> m = c_;
    for (size_t i = 1; i < m.size(); i += 2) m[i] = -m[i];
    return Poly(std::move(m));
}

int Poly::deflate_origin() {
    if (c_.empty()) return 0;
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    return static_cast<int>(k);
}

Poly Poly::divide_by_linear(const Rational& r) const {
    if (is_zero()) return {};
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i > 0; --i) {
        q[i - 1] = carry;
        carry = carry * r + c_[i - 1];
    }
    if (!carry.is_zero())
        throw std::logic_error("Poly::divide_by_linear: nonzero remainder");
    return Poly(std::move(q));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    if (degree() < d.degree()) return {Poly{}, *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(static_cast<size_t>(degree() - d.degree()) + 1);
    const Rational& lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rational f = rem[static_cast<size_t>(k + d.degree())] / lead;
        quot[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Rational Poly::content() const {
    if (is_zero()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(::abs(a.num())).get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
    }
    return Rational(std::move(g), std::move(l));
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    return *this / content();
}

Rational Poly::cauchy_root_bound() const {
    if (is_zero()) throw std::logic_error("cauchy_root_bound: zero polynomial");
    Rational m;
    const Rational lead = abs(leading());
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        Rational r = abs(c_[i]) / lead;
        if (r > m) m = r;
    }
    return m + Rational(1);
}

Poly Poly::operator-() const {
    std::vector<Rational> n = c_;
    for (auto& a : n) a = -a;
    return Poly(std::move(n));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> h(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) h[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(h));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return {};
    std::vector<Rational> h = p.c_;
    for (auto& a : h) a *= s;
    return Poly(std::move(h));
}

Poly operator/(const Poly& p, const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("Poly: division by zero scalar");
    std::vector<Rational> h = p.c_;
    for (auto& a : h) a /= s;
    return Poly(std::move(h));
}

int descartes_sign_changes(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("descartes_sign_changes: zero polynomial");
    int changes = 0, prev = 0;
    for (const auto& a : p.coefficients()) {
        const int s = a.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a / a.leading();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.coeff(i);
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        const Rational mag = abs(a);
        if (i == 0 || mag != Rational(1)) os << mag.str();
        if (i > 0) {
            if (mag != Rational(1)) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

}  // namespace hypercone
