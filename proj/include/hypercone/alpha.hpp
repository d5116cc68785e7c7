#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercone/cone_polys.hpp"
#include "hypercone/sturm.hpp"

namespace hypercone {

/// Certified enclosure of the critical exponent for dimension m: the
/// polynomial is negative at isolator.lo, positive at isolator.hi, and the
/// decimal string is the half-even rounding shared by both endpoints.
struct CriticalExponent {
    int m = 0;
    Interval isolator;
    std::string decimal;
    int digits = 0;
};

/// Sturm count of distinct roots of the critical polynomial in (0, +inf).
/// The origin root at m = 2 is deflated away exactly before counting.
int positive_root_count(int m);

/// Isolates and refines the unique positive root of the critical polynomial.
/// Throws RootCountNotOne if the Sturm count is not exactly one.
CriticalExponent critical_exponent(int m, int digits);

/// Exact check of p_m(2/m) < 0 < p_m(12/m).
bool critical_bracket_holds(int m);

/// Signs (-1, 0, +1) of every canonical Sturm-chain element of the critical
/// polynomial at alpha = 0 and alpha -> +inf, plus the two change counts.
struct SturmSignTable {
    int m = 0;
    std::vector<int> sign_at_zero;
    std::vector<int> sign_at_inf;
    int changes_at_zero = 0;
    int changes_at_inf = 0;
};

/// Throws ChainTooShort when the chain has fewer elements than the
/// polynomial degree + 1.
SturmSignTable sturm_sign_table(int m);

/// Certified sub-window of (0, 1 - 1/(m+alpha)) on which the lower-solution
/// quartic is nonnegative, plus an interior point with an exact P >= 0
/// certificate. Empty when the resolvent discriminant is negative.
struct LowerSolutionWindow {
    Interval window;
    Rational gamma;
};

std::optional<LowerSolutionWindow> lower_solution_window(const ConeParams& cp);

/// Lawson-cone classifier: true iff h - 1 >= alpha_k, decided exactly as
/// p_k(h-1) >= 0.
bool lawson_cone_minimizing(int k, int h);

/// m + alpha_m >= 4 + sqrt(8) via exact squaring of the isolator endpoints;
/// for m = 4 additionally alpha_4 - sqrt(8) < 1/1000.
bool stability_floor_holds(int m, int digits = 9);

}  // namespace hypercone
