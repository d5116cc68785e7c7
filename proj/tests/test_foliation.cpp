#include <doctest.h>

#include <cmath>
#include <random>

#include "hypercone/alpha.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/foliation.hpp"

using hypercone::Branch;
using hypercone::ConeParams;
using hypercone::FoliationConfig;
using hypercone::FoliationSolution;
using hypercone::Rational;

namespace {

constexpr double kPi = 3.14159265358979323846;

FoliationConfig config_for(int m, long alpha_num, long alpha_den = 1) {
    const ConeParams cp(m, Rational(alpha_num, alpha_den));
    const auto window = hypercone::lower_solution_window(cp);
    REQUIRE(window.has_value());
    FoliationConfig cfg;
    cfg.m = m;
    cfg.alpha = Rational(alpha_num, alpha_den).to_double();
    cfg.gamma = window->gamma.to_double();
    cfg.eps = 1e-3;
    cfg.tol = 1e-8;
    return cfg;
}

}  // namespace

TEST_CASE("cone angle closed forms") {
    CHECK(hypercone::cone_angle(2, 1.0) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(hypercone::cone_angle(5, 4.0) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(hypercone::cone_angle(3, 4.0) == doctest::Approx(0.95531661812450928).epsilon(1e-12));

    // Both printed forms agree on a 20 x 20 parameter grid.
    for (int m = 2; m <= 21; ++m) {
        for (int k = 1; k <= 20; ++k) {
            const double alpha = 0.5 * k;
            const double a = hypercone::cone_angle(m, alpha);
            const double b = 0.5 * std::acos((m - alpha - 1.0) / (m + alpha - 1.0));
            CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
        }
    }
}

TEST_CASE("upper solution zeroes the right-hand side") {
    std::mt19937_64 rng(101);
    for (const auto& [m, alpha] : {std::pair<int, double>{3, 4.0}, {2, 6.0}, {7, 2.0}}) {
        const double th = hypercone::cone_angle(m, alpha);
        std::uniform_real_distribution<double> below(1e-3, th - 1e-3);
        std::uniform_real_distribution<double> above(th + 1e-3, kPi / 2 - 1e-3);
        for (int i = 0; i < 20; ++i) {
            const double tb = below(rng);
            const double ta = above(rng);
            const double gb = hypercone::upper_solution(m, alpha, tb);
            const double ga = hypercone::upper_solution(m, alpha, ta);
            CHECK(gb > 0);
            CHECK(ga < 0);
            CHECK(std::abs(hypercone::ode_rhs(m, alpha, tb, gb)) < 1e-12 * (1 + gb * gb));
            CHECK(std::abs(hypercone::ode_rhs(m, alpha, ta, ga)) < 1e-12 * (1 + ga * ga));
        }
    }
}

TEST_CASE("upper solution endpoint limit and slope") {
    const int m = 3;
    const double alpha = 4.0;
    // g -> 0 as t -> 0+ (denominator tends to 2 alpha).
    CHECK(std::abs(hypercone::upper_solution(m, alpha, 1e-8)) < 1e-6);
    // Analytic slope matches central differences and stays nonnegative.
    const double th = hypercone::cone_angle(m, alpha);
    for (double t : {0.1, 0.4, th - 0.05, th + 0.05, 1.3, kPi / 2 - 0.05}) {
        const double h = 1e-6;
        const double fd = (hypercone::upper_solution(m, alpha, t + h) -
                           hypercone::upper_solution(m, alpha, t - h)) /
                          (2 * h);
        const double an = hypercone::upper_solution_slope(m, alpha, t);
        CHECK(an >= 0);
        CHECK(std::abs(fd - an) < 1e-4 * (1 + std::abs(an)));
    }
    CHECK_THROWS_AS(hypercone::upper_solution(m, alpha, th, 1e-6), hypercone::AtPole);
}

TEST_CASE("ode right-hand side point values") {
    CHECK(hypercone::ode_rhs(3, 4.0, 0.7, 0.0) == doctest::Approx(7.0).epsilon(1e-15));
    const double th = hypercone::cone_angle(3, 4.0);
    CHECK(hypercone::ode_rhs(3, 4.0, th, 0.0) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("margin coefficients and admissibility") {
    CHECK_THROWS_AS(hypercone::lower_solution_margin(2, 6.0, 0.93), hypercone::NotBelowOne);
    CHECK_THROWS_AS(hypercone::lower_solution_margin(2, 6.0, -0.1), hypercone::NotBelowOne);
    // a -> 0+ as gamma approaches 1 - 1/(m+alpha) from below.
    const double edge = 1.0 - 1.0 / 8.0;
    const double a1 = hypercone::lower_solution_margin(2, 6.0, edge - 1e-4).a;
    const double a2 = hypercone::lower_solution_margin(2, 6.0, edge - 1e-6).a;
    CHECK(a1 > a2);
    CHECK(a2 > 0);
    CHECK(a2 < 1e-4);
}

TEST_CASE("margin sign matches the quartic sign exactly") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> ms(2, 12);
    std::uniform_int_distribution<long> num(1, 60), den(1, 8);
    std::uniform_int_distribution<long> gn(1, 99);
    int tested = 0;
    while (tested < 50) {
        const int m = ms(rng);
        const Rational a(num(rng), den(rng));
        if (a * Rational(m) <= Rational(2)) continue;
        const Rational s = Rational(m) + a;
        const Rational upper = Rational(1) - Rational(1) / s;
        const Rational g(gn(rng), 100);
        if (g >= upper) continue;
        ++tested;
        // Exact coefficients of the quadratic-in-cos inequality.
        const Rational one(1);
        const Rational d = Rational(m) - a - one;
        const Rational A = (one - g) * ((s - one) * (s - one) - g * g * s * s);
        const Rational B = d * (s - one - g * s);
        const Rational C = (one - g) * g * g * s * s - Rational(2) * g * (s - one) +
                           (one - g) * d * d;
        REQUIRE(A.sign() > 0);
        const int margin_sign = (A * C - B * B).sign();
        const int quartic_sign =
            hypercone::lower_solution_quartic(ConeParams(m, a)).eval(g).sign();
        CHECK(margin_sign == quartic_sign);

        // The floating version agrees when safely away from zero.
        const auto qm = hypercone::lower_solution_margin(m, a.to_double(), g.to_double());
        const double exact = (A * C - B * B).to_double() / A.to_double();
        if (std::abs(exact) > 1e-9 * (1 + std::abs(qm.c)))
            CHECK(qm.margin == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("equality case of the angle-limit inequality") {
    // At m + alpha = 4 + sqrt(8) the limit inequality (1-g) g >= 2(m+alpha-1)
    // / (m+alpha)^2 is tight exactly at g = 1/2.
    const double s = 4.0 + std::sqrt(8.0);
    const double lhs = 0.25;  // max of (1-g) g, attained at 1/2
    const double rhs = 2.0 * (s - 1.0) / (s * s);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
}

TEST_CASE("lower-solution inequality along both branches") {
    std::mt19937_64 rng(107);
    for (const auto& [m, an, ad] : {std::tuple<int, long, long>{3, 4, 1}, {2, 6, 1}, {5, 2, 1}}) {
        const FoliationConfig cfg = config_for(m, an, ad);
        const double th = hypercone::cone_angle(cfg.m, cfg.alpha);
        std::uniform_real_distribution<double> below(1e-3, th - 1e-3);
        std::uniform_real_distribution<double> above(th + 1e-3, kPi / 2 - 1e-3);
        for (int i = 0; i < 100; ++i) {
            for (double t : {below(rng), above(rng)}) {
                const double g = hypercone::upper_solution(cfg.m, cfg.alpha, t);
                const double lhs = cfg.gamma * hypercone::upper_solution_slope(cfg.m, cfg.alpha, t);
                const double rhs = hypercone::ode_rhs(cfg.m, cfg.alpha, t, cfg.gamma * g);
                CHECK(lhs <= rhs + 1e-9 * (1 + std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("integration certificate on the below-cone branch") {
    const FoliationConfig cfg = config_for(3, 4);
    FoliationSolution sol = integrate_branch(cfg, Branch::BelowCone);
    REQUIRE(!sol.t.empty());
    CHECK(sol.t.front() == doctest::Approx(cfg.eps));
    CHECK(sol.t.back() == doctest::Approx(sol.t_hat - cfg.eps));
    CHECK(hypercone::barrier_contained(sol));
    CHECK(hypercone::max_ode_residual(sol) < cfg.tol);
    CHECK(std::abs(sol.pole_crossing - sol.t_hat) < cfg.eps);
    // w grows toward the pole and leaves the launch barrier.
    CHECK(sol.w.front() > 0);
    CHECK(sol.w.back() > 10 * sol.w.front());
}

TEST_CASE("integration certificate on the above-cone branch") {
    const FoliationConfig cfg = config_for(3, 4);
    FoliationSolution sol = integrate_branch(cfg, Branch::AboveCone);
    REQUIRE(!sol.t.empty());
    CHECK(sol.t.front() == doctest::Approx(sol.t_hat + cfg.eps));
    CHECK(sol.t.back() == doctest::Approx(kPi / 2 - cfg.eps));
    CHECK(hypercone::barrier_contained(sol));
    CHECK(hypercone::max_ode_residual(sol) < cfg.tol);
    CHECK(std::abs(sol.pole_crossing - sol.t_hat) < cfg.eps);
    for (double w : sol.w) CHECK(w < 0);
}

TEST_CASE("outer endpoint limit scaling") {
    // |w(eps)| stays within a factor of the lower barrier as eps shrinks.
    for (double eps : {1e-3, 1e-4}) {
        FoliationConfig cfg = config_for(5, 2);
        cfg.eps = eps;
        const FoliationSolution sol = integrate_branch(cfg, Branch::BelowCone);
        const double barrier =
            cfg.gamma * hypercone::upper_solution(cfg.m, cfg.alpha, eps);
        CHECK(std::abs(sol.w.front()) < 10 * barrier);
        CHECK(std::abs(sol.w.front()) < 10 * eps * (cfg.m + cfg.alpha));
    }
}

TEST_CASE("antiderivative and second-order residual") {
    const FoliationConfig cfg = config_for(3, 4);
    for (Branch branch : {Branch::BelowCone, Branch::AboveCone}) {
        FoliationSolution sol = integrate_branch(cfg, branch);
        build_antiderivative(sol);
        REQUIRE(sol.v.size() == sol.t.size());
        CHECK(sol.v_quadrature_error < 1e-6);
        // sign(v') == sign(w) sample-to-sample.
        for (size_t i = 1; i < sol.t.size(); ++i) {
            const double dv = sol.v[i] - sol.v[i - 1];
            if (sol.w[i] > 0) CHECK(dv > 0);
            if (sol.w[i] < 0) CHECK(dv < 0);
        }
        CHECK(hypercone::max_euler_lagrange_residual(sol) < 100 * cfg.tol);
    }
}

TEST_CASE("level curves") {
    const FoliationConfig cfg = config_for(3, 4);
    FoliationSolution sol = integrate_branch(cfg, Branch::BelowCone);
    build_antiderivative(sol);
    const auto base = level_curve(sol, 1.0);
    const auto doubled = level_curve(sol, 2.0);
    REQUIRE(base.size() == sol.t.size());
    const double slope = std::tan(sol.t_hat);
    for (size_t i = 0; i < base.size(); i += 97) {
        CHECK(base[i].radial > 0);
        CHECK(base[i].height > 0);
        // Homogeneity in lambda.
        CHECK(std::abs(doubled[i].radial - 2 * base[i].radial) <= 1e-14 * doubled[i].radial);
        CHECK(std::abs(doubled[i].height - 2 * base[i].height) <= 1e-14 * doubled[i].height);
        // Below-cone curves stay inside the cone.
        CHECK(base[i].height / base[i].radial < slope);
    }
    CHECK_THROWS_AS(level_curve(sol, 0.0), std::invalid_argument);
}

TEST_CASE("auxiliary function from the level curves") {
    const FoliationConfig cfg = config_for(3, 4);
    FoliationSolution below = integrate_branch(cfg, Branch::BelowCone);
    FoliationSolution above = integrate_branch(cfg, Branch::AboveCone);
    build_antiderivative(below);
    build_antiderivative(above);

    // Constant along a level curve, value lambda.
    for (double lambda : {0.5, 1.0, 2.0}) {
        const auto pts = level_curve(below, lambda);
        for (size_t i = 0; i < pts.size(); i += 211) {
            const double f = hypercone::auxiliary_value(below, above, pts[i].radial,
                                                        pts[i].height);
            CHECK(f == doctest::Approx(lambda).epsilon(1e-9));
        }
    }

    // Sign split across the cone and 1-homogeneity.
    const double th = below.t_hat;
    const double inner = hypercone::auxiliary_value(below, above, std::cos(th - 0.1),
                                                    std::sin(th - 0.1));
    const double outer = hypercone::auxiliary_value(below, above, std::cos(th + 0.1),
                                                    std::sin(th + 0.1));
    CHECK(inner > 0);
    CHECK(outer < 0);
    const double f1 = hypercone::auxiliary_value(below, above, 0.4, 0.2);
    const double f2 = hypercone::auxiliary_value(below, above, 0.8, 0.4);
    CHECK(f2 == doctest::Approx(2 * f1).epsilon(1e-12));

    CHECK_THROWS_AS(
        hypercone::auxiliary_value(below, above, std::cos(th), std::sin(th)),
        hypercone::AngleNearCone);
}

TEST_CASE("reciprocal switch inside the stored domain") {
    // Small eps pushes |w| past the 1e3 switch before the cutoff, so stored
    // samples pass through the reciprocal representation.
    FoliationConfig cfg = config_for(3, 4);
    cfg.eps = 2e-4;
    for (Branch branch : {Branch::BelowCone, Branch::AboveCone}) {
        FoliationSolution sol = integrate_branch(cfg, branch);
        build_antiderivative(sol);
        double wmax = 0;
        for (double w : sol.w) wmax = std::max(wmax, std::abs(w));
        CHECK(wmax > 1e3);
        CHECK(hypercone::barrier_contained(sol));
        CHECK(hypercone::max_ode_residual(sol) < cfg.tol);
        CHECK(hypercone::max_euler_lagrange_residual(sol) < 1e-5);
        CHECK(std::abs(sol.pole_crossing - sol.t_hat) < cfg.eps);
    }
}

TEST_CASE("config validation") {
    FoliationConfig cfg = config_for(3, 4);
    cfg.gamma = 0.99;
    CHECK_THROWS_AS(integrate_branch(cfg, Branch::BelowCone), hypercone::NotBelowOne);
    cfg = config_for(3, 4);
    cfg.eps = 0.5;  // above t_hat / 4
    CHECK_THROWS_AS(integrate_branch(cfg, Branch::BelowCone), std::invalid_argument);
}
