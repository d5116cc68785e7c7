#include "hypercone/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hypercone {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_canonicalize(v_.get_mpq_t());
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
    if (sgn(v_.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_canonicalize(v_.get_mpq_t());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        mpq_canonicalize(v.get_mpq_t());
        return Rational(std::move(v));
    }
    // Decimal form: a.b == (a concat b) / 10^len(b).
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    bool negative = !head.empty() && head[0] == '-';
    if (negative || (!head.empty() && head[0] == '+')) head.erase(0, 1);
    if (head.empty()) head = "0";
    mpz_class scaled;
    if (scaled.set_str(head + tail, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, tail.size());
    Rational r(negative ? mpz_class(-scaled) : scaled, ten_pow);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
    return Rational(std::move(n), std::move(d));
}

std::string decimal_string(const Rational& x, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    const bool negative = x.sign() < 0;
    const Rational mag = negative ? -x : x;

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // mag * 10^digits = q + rem/den; round half-even on (q, rem/den).
    mpz_class t = mag.num() * scale;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), mag.den().get_mpz_t());
    const mpz_class twice = 2 * rem;
    const int c = cmp(twice, mag.den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    mpz_class ipart, fpart;
    mpz_fdiv_qr(ipart.get_mpz_t(), fpart.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
    std::string out = ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    if (negative && q != 0) out.insert(0, 1, '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace hypercone
