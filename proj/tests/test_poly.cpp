#include <doctest.h>

#include <random>
#include <vector>

#include "hypercone/cone_polys.hpp"
#include "hypercone/poly.hpp"

using hypercone::ConeParams;
using hypercone::Poly;
using hypercone::Rational;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& a : c) a = Rational(coef(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("eval") {
    const Poly p{-2, 0, 1};  // x^2 - 2
    CHECK(p.eval(Rational(2)) == Rational(2));
    CHECK(Poly{}.eval(Rational(5)) == Rational(0));
    // p_2 is positive at 6: the critical exponent for m = 2 sits below 6.
    const Poly p2 = hypercone::critical_polynomial(2);
    CHECK(p2.eval(Rational(6)).sign() > 0);
    CHECK(p2.eval(Rational(6)) == Rational(610200));
}

TEST_CASE("eval horner equals term-wise sum") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pts(-12, 12);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(rng, 8);
        const Rational x(pts(rng), 1 + static_cast<long>(i % 5));
        Rational sum;
        for (int k = 0; k <= p.degree(); ++k) sum += p.coeff(k) * pow(x, static_cast<unsigned long>(k));
        CHECK(p.eval(x) == sum);
    }
}

TEST_CASE("derivative") {
    CHECK(Poly{-2, 0, 1}.derivative() == Poly{0, 2});
    CHECK(Poly{5}.derivative().is_zero());
    // degree-8 critical polynomial: derivative leads with 8 * 16 (m-1)^2
    for (int m : {2, 3, 7}) {
        const Poly d = hypercone::critical_polynomial(m).derivative();
        CHECK(d.degree() == 7);
        CHECK(d.leading() == Rational(8L * 16 * (m - 1) * (m - 1)));
    }
}

TEST_CASE("taylor_shift") {
    CHECK(Poly{0, 0, 1}.taylor_shift(Rational(1)) == Poly{1, 2, 1});
    const Poly p{3, -1, 4, 1};
    CHECK(p.taylor_shift(Rational(0)) == p);
    // Shift of the lower-solution quartic by 1 - 1/(m+alpha) at (2, 6): the
    // constant term collapses to -8(m-1) alpha/(m+alpha) = -6.
    const Poly P = hypercone::lower_solution_quartic(ConeParams(2, Rational(6)));
    CHECK(P.taylor_shift(Rational(7, 8)).coeff(0) == Rational(-6));
}

TEST_CASE("taylor_shift round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> cs(-6, 6);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 8);
        const Rational c(cs(rng), 1 + static_cast<long>(i % 4));
        CHECK(p.taylor_shift(c).taylor_shift(-c) == p);
    }
}

TEST_CASE("descartes sign changes") {
    CHECK(hypercone::descartes_sign_changes(Poly{-2, 0, 1}) == 1);
    CHECK(hypercone::descartes_sign_changes(Poly{1, 2, 3}) == 0);
    // Q_{3,1}(-t) has exactly one coefficient sign change.
    const Poly Q = hypercone::divergence_cubic(ConeParams(3, Rational(1)));
    CHECK(hypercone::descartes_sign_changes(Q.mirror()) == 1);
    CHECK_THROWS_AS(hypercone::descartes_sign_changes(Poly{}), std::invalid_argument);
}

TEST_CASE("divmod and gcd") {
    const Poly a{-2, 0, 1}, b{1, 1};
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());

    const Poly s{1, 2, 1};  // (x+1)^2
    CHECK(hypercone::poly_gcd(s, s.derivative()) == Poly{1, 1});
}

TEST_CASE("content and primitive part") {
    const Poly p{Rational(2, 3), Rational(4, 3), Rational(-2)};
    const Poly prim = p.primitive_part();
    CHECK(prim == Poly{1, 2, -3});
    CHECK(p.content() * prim.coeff(0) == p.coeff(0));
}

TEST_CASE("deflate origin and linear division") {
    Poly p{0, 0, -2, 1};  // x^2 (x - 2)
    CHECK(p.deflate_origin() == 2);
    CHECK(p == Poly{-2, 1});
    CHECK(Poly{-4, 0, 1}.divide_by_linear(Rational(2)) == Poly{2, 1});
}

TEST_CASE("cauchy bound dominates all real roots") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly(rng, 6);
        if (p.is_zero() || p.degree() == 0) continue;
        const Rational b = p.cauchy_root_bound();
        // No sign changes can happen beyond the bound: p(b) and the leading
        // coefficient agree in sign.
        CHECK(p.eval(b).sign() == p.leading().sign());
        CHECK(p.eval(-b).sign() == p.mirror().leading().sign());
    }
}
