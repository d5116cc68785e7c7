#include "hypercone/alpha.hpp"

#include <stdexcept>
#include <utility>

#include "hypercone/errors.hpp"

namespace hypercone {

int positive_root_count(int m) {
    if (m < 2) throw std::invalid_argument("positive_root_count: m must be >= 2");
    Poly p = critical_polynomial(m);
    p.deflate_origin();
    return SturmChain(p).count_roots_positive();
}

CriticalExponent critical_exponent(int m, int digits) {
    if (m < 2) throw std::invalid_argument("critical_exponent: m must be >= 2");
    if (digits < 1) throw std::invalid_argument("critical_exponent: digits must be >= 1");

    Poly p = critical_polynomial(m);
    p.deflate_origin();
    const SturmChain chain(p);
    if (chain.count_roots_positive() != 1)
        throw RootCountNotOne("critical_exponent: positive root count != 1 for m = " +
                              std::to_string(m));

    Rational lo(0);
    Rational hi = p.cauchy_root_bound();
    int slo = p.eval(lo).sign();
    const int shi = p.eval(hi).sign();
    if (slo >= 0 || shi <= 0)
        throw std::logic_error("critical_exponent: unexpected bracket signs");

    const Rational target =
        Rational(1) / pow(Rational(10), static_cast<unsigned long>(digits) + 2);

    // Bisect until the endpoints agree on the rounded decimal (half-even).
    // alpha_m is irrational for every m exercised, so agreement is reached; a
    // rational root hit exactly by a midpoint is returned directly.
    std::string dec_lo, dec_hi;
    const Rational root_width = hi - lo;
    long max_iter = 64 + 8 * (digits + 2);
    {
        // log2 of the starting width, roughly.
        mpz_class w = root_width.num() / root_width.den() + 1;
        max_iter += static_cast<long>(mpz_sizeinbase(w.get_mpz_t(), 2));
    }
    for (long iter = 0;; ++iter) {
        if (hi - lo < target && lo.sign() > 0) {
            dec_lo = decimal_string(lo, digits);
            dec_hi = decimal_string(hi, digits);
            if (dec_lo == dec_hi) break;
            if (iter >= max_iter) {
                // Rounding boundary inside the bracket; fall back to the
                // midpoint rounding.
                dec_lo = dec_hi = decimal_string(Interval(lo, hi).midpoint(), digits);
                break;
            }
        }
        const Rational mid = (lo + hi) / Rational(2);
        const int sm = p.eval(mid).sign();
        if (sm == 0) {
            // Exact rational root.
            Rational d = target / Rational(4);
            while (p.eval(mid - d).sign() == 0 || p.eval(mid + d).sign() == 0)
                d /= Rational(2);
            CriticalExponent out;
            out.m = m;
            out.isolator = Interval(mid - d, mid + d);
            out.decimal = decimal_string(mid, digits);
            out.digits = digits;
            return out;
        }
        if (sm == slo) {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }

    CriticalExponent out;
    out.m = m;
    out.isolator = Interval(std::move(lo), std::move(hi));
    out.decimal = std::move(dec_lo);
    out.digits = digits;
    return out;
}

bool critical_bracket_holds(int m) {
    if (m < 2) throw std::invalid_argument("critical_bracket_holds: m must be >= 2");
    const Poly p = critical_polynomial(m);
    return p.eval(Rational(2, m)).sign() < 0 && p.eval(Rational(12, m)).sign() > 0;
}

SturmSignTable sturm_sign_table(int m) {
    if (m < 2) throw std::invalid_argument("sturm_sign_table: m must be >= 2");
    const Poly p = critical_polynomial(m);
    const SturmChain chain(p);
    if (static_cast<int>(chain.polys().size()) != p.degree() + 1)
        throw ChainTooShort("sturm_sign_table: chain degenerated for m = " +
                            std::to_string(m));
    SturmSignTable t;
    t.m = m;
    int prev0 = 0, previ = 0;
    for (const auto& q : chain.polys()) {
        const int s0 = q.eval(Rational(0)).sign();
        const int si = q.leading().sign();
        t.sign_at_zero.push_back(s0);
        t.sign_at_inf.push_back(si);
        if (s0 != 0) {
            if (prev0 != 0 && s0 != prev0) ++t.changes_at_zero;
            prev0 = s0;
        }
        if (si != 0) {
            if (previ != 0 && si != previ) ++t.changes_at_inf;
            previ = si;
        }
    }
    return t;
}

std::optional<LowerSolutionWindow> lower_solution_window(const ConeParams& cp) {
    if (cp.alpha * Rational(cp.m) <= Rational(2))
        throw std::invalid_argument("lower_solution_window: requires alpha > 2/m");

    const Rational theta = resolvent_discriminant(cp);
    if (theta.sign() < 0) return std::nullopt;

    const Poly P = lower_solution_quartic(cp);
    const Rational upper = Rational(1) - Rational(1) / (Rational(cp.m) + cp.alpha);

    if (theta.is_zero()) {
        // Double root: the gcd with the derivative is linear and rational.
        const Poly g = poly_gcd(P, P.derivative());
        if (g.degree() != 1)
            throw std::logic_error("lower_solution_window: unexpected gcd degree at theta = 0");
        const Rational r = -g.coeff(0) / g.coeff(1);
        if (r <= Rational(0) || r >= upper)
            throw std::logic_error("lower_solution_window: double root outside the window");
        return LowerSolutionWindow{Interval(r, r), r};
    }

    auto isolators = isolate_roots(P, Interval(Rational(0), upper));
    if (isolators.size() != 2)
        throw std::logic_error("lower_solution_window: expected two window roots");

    int digits = 4;
    Interval left = refine_root(P, isolators[0], digits);
    Interval right = refine_root(P, isolators[1], digits);
    while (left.hi >= right.lo && left.lo < left.hi && right.lo < right.hi) {
        digits += 2;
        left = refine_root(P, left, digits);
        right = refine_root(P, right, digits);
    }
    if (left.hi >= right.lo)
        throw std::logic_error("lower_solution_window: could not separate the roots");

    // P > 0 strictly between the two roots; nudge the endpoints inward until
    // the exact positivity certificate holds (handles exact rational roots).
    Rational wlo = left.hi, whi = right.lo;
    while (P.eval(wlo).sign() <= 0) wlo += (whi - wlo) / Rational(4);
    while (P.eval(whi).sign() <= 0) whi -= (whi - wlo) / Rational(4);
    const Interval window(wlo, whi);

    // Interior maximizer of P for the largest margin; the window midpoint is
    // a valid fallback since P > 0 on the whole window.
    Rational gamma = window.midpoint();
    const Poly dP = P.derivative();
    auto crit = isolate_roots(dP, window);
    if (crit.size() == 1) {
        const int sl = dP.eval(crit[0].lo).sign();
        const int sr = dP.eval(crit[0].hi).sign();
        if (sl > 0 && sr < 0) gamma = refine_root(dP, crit[0], 6).midpoint();
    }
    if (P.eval(gamma).sign() <= 0) gamma = window.midpoint();
    if (P.eval(gamma).sign() <= 0)
        throw std::logic_error("lower_solution_window: no certified interior point");
    return LowerSolutionWindow{window, std::move(gamma)};
}

bool lawson_cone_minimizing(int k, int h) {
    if (k < 2 || h < 2)
        throw std::invalid_argument("lawson_cone_minimizing: requires k, h >= 2");
    return critical_polynomial(k).eval(Rational(h - 1)).sign() >= 0;
}

bool stability_floor_holds(int m, int digits) {
    const CriticalExponent ce = critical_exponent(m, digits);
    const Rational s = Rational(m) + ce.isolator.lo - Rational(4);
    bool ok = s.sign() >= 0 && s * s >= Rational(8);
    if (m == 4) {
        const Rational t = ce.isolator.hi - Rational(1, 1000);
        ok = ok && t.sign() > 0 && t * t < Rational(8);
    }
    return ok;
}

}  // namespace hypercone
