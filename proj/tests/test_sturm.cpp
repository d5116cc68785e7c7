#include <doctest.h>

#include <random>
#include <vector>

#include "hypercone/cone_polys.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/sturm.hpp"

using hypercone::ConeParams;
using hypercone::Interval;
using hypercone::Poly;
using hypercone::Rational;
using hypercone::SturmChain;

namespace {

// Oracle: unnormalized textbook chain p, p', -rem(...), computed directly.
std::vector<Poly> naive_chain(const Poly& p) {
    std::vector<Poly> out{p};
    Poly d = p.derivative();
    if (d.is_zero()) return out;
    out.push_back(d);
    for (;;) {
        const Poly r = out[out.size() - 2].divmod(out.back()).second;
        if (r.is_zero()) break;
        out.push_back(-r);
    }
    return out;
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& a : c) a = Rational(coef(rng));
    Poly p(std::move(c));
    return p;
}

// Oracle: roots by scanning sign changes of the squarefree part on a fine
// rational grid inside the Cauchy bound (fine enough for small integer
// coefficients is not guaranteed, so only used for counting comparisons via
// isolate_roots itself in the property below).
int distinct_real_roots_by_isolation(const Poly& p) {
    return static_cast<int>(isolate_roots(p).size());
}

}  // namespace

TEST_CASE("interval invariant") {
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), std::invalid_argument);
    const Interval point(Rational(3), Rational(3));
    CHECK(point.width() == Rational(0));
    CHECK(Interval(Rational(1), Rational(2)).midpoint() == Rational(3, 2));
}

TEST_CASE("textbook chain") {
    const Poly p{-2, 0, 1};
    const SturmChain chain(p);
    const auto oracle = naive_chain(p);
    REQUIRE(chain.polys().size() == oracle.size());
    REQUIRE(chain.polys().size() == 3);
    // Library elements match the canonical ones up to a positive scaling.
    for (size_t i = 0; i < oracle.size(); ++i) {
        CHECK(chain.polys()[i].degree() == oracle[i].degree());
        const Rational ratio = oracle[i].leading() / chain.polys()[i].leading();
        CHECK(ratio.sign() > 0);
        CHECK(ratio * chain.polys()[i] == oracle[i]);
    }
    CHECK(chain.polys()[2].degree() == 0);
    CHECK(chain.polys()[2].leading().sign() > 0);
}

TEST_CASE("chain of the critical polynomial has full length") {
    const Poly p2 = hypercone::critical_polynomial(2);
    CHECK(SturmChain(p2).polys().size() == 9);
    const Poly lin{3, 1};
    CHECK(SturmChain(lin).polys().size() == 2);
}

TEST_CASE("chain elements proportional to canonical for random polys") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const Poly p = random_poly(rng, 7);
        const SturmChain chain(p);
        const auto oracle = naive_chain(p);
        REQUIRE(chain.polys().size() == oracle.size());
        for (size_t k = 0; k < oracle.size(); ++k) {
            const Rational ratio = oracle[k].leading() / chain.polys()[k].leading();
            CHECK(ratio.sign() > 0);
            CHECK(ratio * chain.polys()[k] == oracle[k]);
        }
    }
}

TEST_CASE("sign changes at points and infinities") {
    const SturmChain chain(Poly{-2, 0, 1});
    CHECK(chain.sign_changes_at(Rational(0)) == 1);
    CHECK(chain.sign_changes_at_pos_inf() == 0);
    CHECK(chain.sign_changes_at_neg_inf() == 2);
}

TEST_CASE("count_roots") {
    const SturmChain chain(Poly{-2, 0, 1});
    CHECK(chain.count_roots(Interval(Rational(0), Rational(2))) == 1);
    CHECK(chain.count_roots(Interval(Rational(2), Rational(3))) == 0);
    CHECK(chain.count_roots_all() == 2);

    const SturmChain unit(Poly{-1, 0, 1});
    CHECK_THROWS_AS(unit.count_roots(Interval(Rational(1), Rational(3))),
                    hypercone::EndpointIsRoot);

    // One positive root of the critical polynomial for several m.
    for (int m : {2, 5, 29}) {
        Poly pm = hypercone::critical_polynomial(m);
        pm.deflate_origin();
        CHECK(SturmChain(pm).count_roots_positive() == 1);
    }
}

TEST_CASE("isolate_roots basics") {
    const Poly p{-2, 0, 1};
    const auto ivs = isolate_roots(p, Interval(Rational(0), Rational(10)));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo >= Rational(0));
    CHECK(ivs[0].hi <= Rational(10));
    // The isolator brackets sqrt(2).
    CHECK(p.eval(ivs[0].lo).sign() * p.eval(ivs[0].hi).sign() < 0);
}

TEST_CASE("isolate_roots of the lower-solution quartic") {
    // Above the critical exponent: two window roots; below: none.
    const Poly high = hypercone::lower_solution_quartic(ConeParams(2, Rational(6)));
    CHECK(isolate_roots(high, Interval(Rational(0), Rational(7, 8))).size() == 2);
    const Poly low = hypercone::lower_solution_quartic(ConeParams(2, Rational(5)));
    CHECK(isolate_roots(low, Interval(Rational(0), Rational(6, 7))).empty());
}

TEST_CASE("refine_root") {
    const Poly p{-2, 0, 1};
    const Interval iv = refine_root(p, Interval(Rational(1), Rational(2)), 9);
    CHECK(iv.width() < Rational(1, 1000000000L));
    CHECK(p.eval(iv.lo).sign() * p.eval(iv.hi).sign() < 0);
    // 1.414213562... lies inside.
    CHECK(iv.lo < Rational(1414213563L, 1000000000L));
    CHECK(iv.hi > Rational(1414213562L, 1000000000L));

    // Narrow bracket comes back unchanged.
    const Interval tight(Rational(141421356237L, 100000000000L),
                         Rational(141421356238L, 100000000000L));
    const Interval same = refine_root(p, tight, 9);
    CHECK(same.lo == tight.lo);
    CHECK(same.hi == tight.hi);

    CHECK_THROWS_AS(refine_root(p, Interval(Rational(2), Rational(3)), 6),
                    hypercone::NoSignChange);
}

TEST_CASE("refine_root pins the critical exponent for m = 2") {
    Poly p2 = hypercone::critical_polynomial(2);
    p2.deflate_origin();
    auto isolators = isolate_positive_roots(p2);
    REQUIRE(isolators.size() == 1);
    const Interval iv = refine_root(p2, isolators[0], 9);
    CHECK(iv.width() < Rational(1, 1000000000L));
    CHECK(iv.lo > Rational(5881525128L, 1000000000L));
    CHECK(iv.hi < Rational(5881525130L, 1000000000L));
}

TEST_CASE("property: total count equals isolation count") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(rng, 8);
        if (p.degree() < 1) continue;
        const SturmChain chain(p);
        CHECK(chain.count_roots_all() == distinct_real_roots_by_isolation(p));
    }
}

TEST_CASE("property: descartes bounds positive roots with matching parity") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Poly p = random_poly(rng, 8);
        if (p.degree() < 1) continue;
        p.deflate_origin();
        if (p.degree() < 1) continue;
        const int desc = hypercone::descartes_sign_changes(p);
        const int pos = static_cast<int>(isolate_positive_roots(p).size());
        // The bound counts roots with multiplicity; distinct-root isolation
        // can only sit below it.
        CHECK(desc >= pos);
        if (!hypercone::poly_gcd(p, p.derivative()).degree()) {
            // squarefree: parity claim applies to the distinct count
            CHECK((desc - pos) % 2 == 0);
        }
    }
}

TEST_CASE("property: refine_root keeps the sign bracket") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 7);
        if (p.degree() < 1) continue;
        for (const Interval& iv : isolate_roots(p)) {
            if (iv.lo == iv.hi) continue;  // exact rational root
            const int sl = p.eval(iv.lo).sign(), sh = p.eval(iv.hi).sign();
            if (sl * sh >= 0) continue;  // even-multiplicity root
            const Interval r = refine_root(p, iv, 6);
            CHECK(p.eval(r.lo).sign() * p.eval(r.hi).sign() < 0);
            CHECK(r.width() < Rational(1, 1000000L));
        }
    }
}
