#pragma once

#include <limits>
#include <vector>

#include "hypercone/errors.hpp"

namespace hypercone {

enum class Branch { BelowCone, AboveCone };

struct FoliationConfig {
    int m = 2;
    double alpha = 6.0;
    double gamma = 0.5;    // lower-solution factor, in (0, 1 - 1/(m+alpha))
    double eps = 1e-3;     // offset from the singular angles 0, t_hat, pi/2
    double tol = 1e-8;     // finite-difference residual target
    int n = 512;           // minimum stored samples per branch
};

/// Sampled branch solution of the first-order ODE together with its
/// antiderivative. Samples ascend in t and stay inside the barrier funnel.
struct FoliationSolution {
    Branch branch = Branch::BelowCone;
    int m = 2;
    double alpha = 0;
    double gamma = 0;
    double eps = 0;
    double tol = 1e-8;
    double t_hat = 0;

    std::vector<double> t;
    std::vector<double> w;
    std::vector<double> v;  // normalized by build_antiderivative
    bool v_built = false;

    /// Angle where the reciprocal variable 1/w crossed zero (the pole).
    double pole_crossing = std::numeric_limits<double>::quiet_NaN();

    /// Reciprocal-variable samples from the continuation toward the pole,
    /// ascending in t.
    std::vector<double> t_recip;
    std::vector<double> u_recip;

    /// Trapezoid cross-check of v, filled by build_antiderivative.
    double v_quadrature_error = 0;
};

/// Cone angle in the (|x|, y) half-plane: arctan sqrt(alpha/(m-1)).
double cone_angle(int m, double alpha);

/// Upper solution g of the branch ODE; positive left of the cone angle,
/// negative right of it. Throws AtPole within pole_eps of the cone angle.
double upper_solution(int m, double alpha, double t, double pole_eps = 1e-12);

/// dg/dt, nonnegative on both branches.
double upper_solution_slope(int m, double alpha, double t, double pole_eps = 1e-12);

/// Right-hand side H(t, w) of the first-order ODE dw/dt = H.
double ode_rhs(int m, double alpha, double t, double w);

/// Coefficients of the quadratic-in-cos(2t) lower-solution inequality and
/// the global margin c - b^2/a. Throws NotBelowOne when gamma leaves
/// (0, 1 - 1/(m+alpha)).
struct QuadMargin {
    double a, b, c, margin;
};
QuadMargin lower_solution_margin(int m, double alpha, double gamma);

/// Integrates the branch between its truncated endpoints, launching from the
/// lower barrier at the outer endpoint and enforcing barrier containment at
/// every accepted step, then continues in the reciprocal variable to locate
/// the pole crossing. Throws BarrierEscape / StepUnderflow.
FoliationSolution integrate_branch(const FoliationConfig& cfg, Branch branch);

/// Fills v (antiderivative of w, boundary-normalized so v -> 0 at the outer
/// singular angle) and the trapezoid cross-check error.
void build_antiderivative(FoliationSolution& sol);

struct CurvePoint {
    double radial;
    double height;
};

/// Level curve (lambda e^v cos t, lambda e^v sin t) at the solution samples.
std::vector<CurvePoint> level_curve(const FoliationSolution& sol, double lambda);

/// Signed auxiliary function: +radius * e^{-v(angle)} below the cone,
/// -radius * e^{-v(angle)} above it. Throws AngleNearCone within eps of the
/// cone angle.
double auxiliary_value(const FoliationSolution& below, const FoliationSolution& above,
                       double radial, double height);

/// Largest finite-difference residual of the ODE over the stored samples:
/// |w'_fd - H| below the reciprocal switch, |u'_fd + u^2 H(t, 1/u)| beyond.
double max_ode_residual(const FoliationSolution& sol);

/// Largest normalized second-order residual of v against the second-order
/// equation, via 5-point finite differences on the (t, v) samples.
double max_euler_lagrange_residual(const FoliationSolution& sol);

/// True iff every stored sample lies inside [gamma*g, g] (below-cone) or
/// [g, gamma*g] (above-cone) up to the relative slack.
bool barrier_contained(const FoliationSolution& sol, double slack = 1e-9);

}  // namespace hypercone
