#pragma once

#include "hypercone/poly.hpp"
#include "hypercone/rational.hpp"

namespace hypercone {

/// Parameters (m, alpha) of the weighted cone: dimension m >= 2 of the
/// rotationally symmetric block and weight exponent alpha > 0.
struct ConeParams {
    int m;
    Rational alpha;

    ConeParams(int m_, Rational alpha_);
};

/// Depressed quartic u^4 + p u^2 + q u + r (exact coefficients).
struct DepressedQuartic {
    Rational p;
    Rational q;
    Rational r;
};

/// Cubic in t = y^2/|x|^2 whose nonnegativity on t >= 0 makes the weighted
/// normal field divergence-nonpositive below the cone.
Poly divergence_cubic(const ConeParams& cp);

/// Quadratic in alpha carrying the sign of minus the cubic's discriminant;
/// its sole positive root is the closed-form sub-calibration bound.
Poly discriminant_quadratic(int m);

/// Discriminant of divergence_cubic, factored through the quadratic.
Rational divergence_cubic_discriminant(const ConeParams& cp);

/// True iff alpha >= (2 m^(3/2) + 3m - 1)/(m-1)^2, decided exactly through
/// the sign of the quadratic (never through a decimal approximation).
bool subcalibration_bound_holds(const ConeParams& cp);

/// Quartic in gamma whose nonnegativity somewhere in (0, 1 - 1/(m+alpha))
/// produces a lower solution gamma*g of the branch ODE.
Poly lower_solution_quartic(const ConeParams& cp);

/// Depression of the quartic by the exact shift (m+alpha+1)/(4(m+alpha)) and
/// normalization by the leading coefficient.
DepressedQuartic depressed_lower_quartic(const ConeParams& cp);

/// zeta^3 + 2p zeta^2 + (p^2 - 4r) zeta - q^2.
Poly resolvent_cubic(const DepressedQuartic& d);

/// Discriminant of the resolvent cubic; its sign decides whether the quartic
/// has two, one double, or no roots in the admissible gamma window.
Rational resolvent_discriminant(const ConeParams& cp);

/// Degree-8 polynomial in alpha whose unique positive root is the critical
/// exponent for dimension m.
Poly critical_polynomial(int m);

/// Exact cross-check tying the resolvent discriminant to the critical
/// polynomial: (m+alpha)^12 * theta == 16 alpha (m-1) * p_m(alpha).
bool discriminant_identity_holds(const ConeParams& cp);

}  // namespace hypercone
