#pragma once

#include <vector>

#include "hypercone/poly.hpp"

namespace hypercone {

/// Closed rational interval, lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Canonical signed-remainder sequence of p and p'. Each element beyond the
/// first two is content-normalized (scaled by a positive rational into a
/// primitive integer polynomial), which preserves every sign the counting
/// relies on.
class SturmChain {
  public:
    explicit SturmChain(const Poly& p);

    const std::vector<Poly>& polys() const { return chain_; }
    const Poly& primal() const { return chain_.front(); }

    int sign_changes_at(const Rational& x) const;
    int sign_changes_at_pos_inf() const;
    int sign_changes_at_neg_inf() const;

    /// Distinct roots in the open interval (iv.lo, iv.hi). Throws
    /// EndpointIsRoot when either endpoint is a root of the primal.
    int count_roots(const Interval& iv) const;

    /// Distinct roots in (0, +inf). Throws EndpointIsRoot when p(0) = 0.
    int count_roots_positive() const;

    /// Distinct real roots on the whole line.
    int count_roots_all() const;

  private:
    std::vector<Poly> chain_;
};

/// Pairwise-disjoint intervals, each isolating exactly one distinct root of
/// p inside the open interval iv; their union covers every root in iv.
/// A rational root hit exactly comes back as a degenerate [r, r].
std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv);

/// Isolation over (-B, B) with B the Cauchy root bound.
std::vector<Interval> isolate_roots(const Poly& p);

/// Isolation over (0, B); roots at the origin are deflated away first.
std::vector<Interval> isolate_positive_roots(const Poly& p);

/// Shrinks a sign-change bracket of a simple root below 10^-digits width by
/// rational bisection. Throws NoSignChange when the bracket precondition
/// fails.
Interval refine_root(const Poly& p, Interval iv, int digits);

}  // namespace hypercone
