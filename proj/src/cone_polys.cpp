#include "hypercone/cone_polys.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hypercone {

namespace {

Rational Z(mpz_class v) { return Rational(std::move(v), mpz_class(1)); }

}  // namespace

ConeParams::ConeParams(int m_, Rational alpha_) : m(m_), alpha(std::move(alpha_)) {
    if (m < 2) throw std::invalid_argument("ConeParams: m must be >= 2");
    if (alpha.sign() <= 0) throw std::invalid_argument("ConeParams: alpha must be positive");
}

Poly divergence_cubic(const ConeParams& cp) {
    const Rational M1(cp.m - 1);
    const Rational& a = cp.alpha;
    return Poly{pow(a, 4), Rational(-3) * M1 * a * a, Rational(-3) * M1 * M1 * a,
                pow(M1, 4)};
}

Poly discriminant_quadratic(int m) {
    if (m < 2) throw std::invalid_argument("discriminant_quadratic: m must be >= 2");
    const long ml = m;
    return Poly{Rational(1 - 4 * ml), Rational(-(6 * ml - 2)), Rational((ml - 1) * (ml - 1))};
}

Rational divergence_cubic_discriminant(const ConeParams& cp) {
    const Rational M1(cp.m - 1);
    return Rational(-27) * pow(M1, 6) * pow(cp.alpha, 6) *
           discriminant_quadratic(cp.m).eval(cp.alpha);
}

bool subcalibration_bound_holds(const ConeParams& cp) {
    // The quadratic opens upward with negative value at 0, so for alpha > 0
    // its sign decides the comparison with its sole positive root exactly.
    return discriminant_quadratic(cp.m).eval(cp.alpha).sign() >= 0;
}

Poly lower_solution_quartic(const ConeParams& cp) {
    const Rational m(cp.m);
    const Rational& a = cp.alpha;
    const Rational s = m + a;
    const Rational a4 = pow(s, 3);
    const Rational a3 = -s * s * (s + Rational(1));
    const Rational a2 = s * (Rational(2) * m + Rational(6) * a - Rational(4) * m * a - Rational(1));
    const Rational a1 = Rational(4) * m * m * a + Rational(4) * a * a * m - Rational(4) * a * a -
                        Rational(5) * a - m + Rational(1);
    const Rational a0 = Rational(-8) * (m - Rational(1)) * a;
    return Poly{a0, a1, a2, a3, a4};
}

DepressedQuartic depressed_lower_quartic(const ConeParams& cp) {
    const Poly P = lower_solution_quartic(cp);
    const Rational s = Rational(cp.m) + cp.alpha;
    const Rational shift = (s + Rational(1)) / (Rational(4) * s);
    const Poly monic = P.taylor_shift(shift) / P.leading();
    if (!monic.coeff(3).is_zero())
        throw std::logic_error("depressed_lower_quartic: cubic term did not vanish");
    return DepressedQuartic{monic.coeff(2), monic.coeff(1), monic.coeff(0)};
}

Poly resolvent_cubic(const DepressedQuartic& d) {
    return Poly{-d.q * d.q, d.p * d.p - Rational(4) * d.r, Rational(2) * d.p, Rational(1)};
}

Rational resolvent_discriminant(const ConeParams& cp) {
    const DepressedQuartic d = depressed_lower_quartic(cp);
    const Rational& p = d.p;
    const Rational& q = d.q;
    const Rational e = p * p - Rational(4) * d.r;
    const Rational q2 = q * q;
    return Rational(4) * p * p * e * e - Rational(4) * pow(e, 3) -
           Rational(36) * p * e * q2 + Rational(32) * pow(p, 3) * q2 -
           Rational(27) * q2 * q2;
}

Poly critical_polynomial(int m) {
    if (m < 2) throw std::invalid_argument("critical_polynomial: m must be >= 2");
    const mpz_class M(m);
    const mpz_class M2 = M * M, M3 = M2 * M, M4 = M3 * M, M5 = M4 * M, M6 = M5 * M,
                    M7 = M6 * M, M8 = M7 * M;
    std::vector<Rational> c(9);
    c[8] = Z(16 * (M - 1) * (M - 1));
    c[7] = Z(-4 * (M - 1) * (8 * M2 + 3));
    c[6] = Z(-(16 * M4 - 256 * M3 + 584 * M2 - 496 * M + 153));
    c[5] = Z(2 * (32 * M5 - 224 * M4 + 1238 * M3 - 2738 * M2 + 2545 * M - 852));
    c[4] = Z(-(M - 1) * (16 * M5 + 48 * M4 - 1712 * M3 + 6672 * M2 - 4321 * M - 641));
    c[3] = Z(-2 * (16 * M7 - 208 * M6 + 250 * M5 + 2302 * M4 - 3214 * M3 - 588 * M2 +
                   1566 * M - 123));
    c[2] = Z(16 * M8 - 192 * M7 + 984 * M6 - 2864 * M5 + 1001 * M4 + 4184 * M3 -
             3870 * M2 + 794 * M - 52);
    c[1] = Z(-2 * (M - 1) *
             (22 * M6 - 148 * M5 + 363 * M4 - 381 * M3 + 185 * M2 - 60 * M + 2));
    c[0] = Z(-(M - 2) * (M - 2) * (M - 2) * (M - 1) * (M - 1) * M);
    return Poly(std::move(c));
}

bool discriminant_identity_holds(const ConeParams& cp) {
    const Rational lhs = pow(Rational(cp.m) + cp.alpha, 12) * resolvent_discriminant(cp);
    const Rational rhs = Rational(16) * cp.alpha * Rational(cp.m - 1) *
                         critical_polynomial(cp.m).eval(cp.alpha);
    return lhs == rhs;
}

}  // namespace hypercone
