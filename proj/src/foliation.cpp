#include "hypercone/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypercone {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kReciprocalSwitch = 1e3;  // |w| beyond which u = 1/w is integrated
constexpr double kPoleGuard = 1e-6;        // containment enforced while |t_hat - t| exceeds this

// Finite-difference residuals are measured in w up to this magnitude and in
// the reciprocal variable beyond it. The w-form floor is sample jitter over
// step size, ~60 eps |w| / (kappa tau), which passes tol only for small |w|;
// the u-form floor ~60 eps / (kappa A) is uniform in w.
constexpr double kResidualWindow = 10.0;

double phi_coeff(int m, double alpha, double t) {
    return (m - alpha - 1.0 - (m + alpha - 1.0) * std::cos(2.0 * t)) / std::sin(2.0 * t);
}

}  // namespace

double cone_angle(int m, double alpha) {
    if (m < 2 || !(alpha > 0))
        throw std::invalid_argument("cone_angle: requires m >= 2, alpha > 0");
    return std::atan(std::sqrt(alpha / (m - 1.0)));
}

double upper_solution(int m, double alpha, double t, double pole_eps) {
    const double th = cone_angle(m, alpha);
    if (std::abs(t - th) < pole_eps)
        throw AtPole("upper_solution: t within pole_eps of the cone angle");
    const double den = (m + alpha - 1.0) * std::cos(2.0 * t) - (m - alpha - 1.0);
    return (m + alpha) * std::sin(2.0 * t) / den;
}

double upper_solution_slope(int m, double alpha, double t, double pole_eps) {
    const double th = cone_angle(m, alpha);
    if (std::abs(t - th) < pole_eps)
        throw AtPole("upper_solution_slope: t within pole_eps of the cone angle");
    const double den = (m + alpha - 1.0) * std::cos(2.0 * t) - (m - alpha - 1.0);
    const double num = (m + alpha - 1.0) - (m - alpha - 1.0) * std::cos(2.0 * t);
    return 2.0 * (m + alpha) * num / (den * den);
}

double ode_rhs(int m, double alpha, double t, double w) {
    return (1.0 + w * w) * (m + alpha + phi_coeff(m, alpha, t) * w);
}

QuadMargin lower_solution_margin(int m, double alpha, double gamma) {
    const double s = m + alpha;
    if (!(gamma > 0.0) || !(gamma < 1.0 - 1.0 / s))
        throw NotBelowOne("lower_solution_margin: gamma outside (0, 1 - 1/(m+alpha))");
    const double sm1 = s - 1.0;
    const double d = m - alpha - 1.0;
    QuadMargin qm;
    qm.a = (1.0 - gamma) * (sm1 * sm1 - gamma * gamma * s * s);
    qm.b = d * (sm1 - gamma * s);
    qm.c = (1.0 - gamma) * gamma * gamma * s * s - 2.0 * gamma * sm1 + (1.0 - gamma) * d * d;
    qm.margin = qm.c - qm.b * qm.b / qm.a;
    return qm;
}

namespace {

struct State {
    double y;  // w, or u = 1/w in reciprocal mode
    double v;
};

struct Deriv {
    double dy;
    double dv;
};

// du/dt for u = 1/w: -(u^2+1)(m+alpha) - (u^2+1) phi / u. The phi/u ratio
// stays finite through the pole (both vanish there linearly).
double recip_rhs(int m, double alpha, double t, double u) {
    const double phi = phi_coeff(m, alpha, t);
    const double uu = u == 0.0 ? 5e-324 : u;
    return -(u * u + 1.0) * (m + alpha) - (u * u + 1.0) * (phi / uu);
}

Deriv eval_rhs(int m, double alpha, double t, const State& s, bool recip, bool carry_v) {
    if (!recip) return {ode_rhs(m, alpha, t, s.y), carry_v ? s.y : 0.0};
    return {recip_rhs(m, alpha, t, s.y), carry_v ? 1.0 / s.y : 0.0};
}

// Dormand-Prince 5(4).
struct StepResult {
    State y5;
    double err;  // scaled error estimate
};

StepResult dp45_step(int m, double alpha, double t, const State& y, double h, bool recip,
                     bool carry_v, double rtol, double atol) {
    static const double A[7][6] = {
        {0, 0, 0, 0, 0, 0},
        {1.0 / 5, 0, 0, 0, 0, 0},
        {3.0 / 40, 9.0 / 40, 0, 0, 0, 0},
        {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double C[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double B5[7] = {35.0 / 384,       0, 500.0 / 1113, 125.0 / 192,
                                 -2187.0 / 6784,   11.0 / 84, 0};
    static const double B4[7] = {5179.0 / 57600,   0, 7571.0 / 16695, 393.0 / 640,
                                 -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

    Deriv k[7];
    for (int i = 0; i < 7; ++i) {
        State si = y;
        for (int j = 0; j < i; ++j) {
            si.y += h * A[i][j] * k[j].dy;
            si.v += h * A[i][j] * k[j].dv;
        }
        k[i] = eval_rhs(m, alpha, t + C[i] * h, si, recip, carry_v);
    }
    State y5 = y, y4 = y;
    for (int i = 0; i < 7; ++i) {
        y5.y += h * B5[i] * k[i].dy;
        y5.v += h * B5[i] * k[i].dv;
        y4.y += h * B4[i] * k[i].dy;
        y4.v += h * B4[i] * k[i].dv;
    }
    const double sc_y = atol + rtol * std::max(std::abs(y.y), std::abs(y5.y));
    const double sc_v = atol + rtol * std::max(std::abs(y.v), std::abs(y5.v));
    double err = std::abs(y5.y - y4.y) / sc_y;
    if (carry_v) err = std::max(err, std::abs(y5.v - y4.v) / sc_v);
    return {y5, err};
}

struct BranchFrame {
    int m;
    double alpha;
    double gamma;
    double t_hat;
    double outer;    // singular angle at the launch side (0 or pi/2)
    double t_start;  // outer +- eps
    double t_cut;    // t_hat -+ eps
    int dir;         // +1 below the cone, -1 above
};

double barrier_g(const BranchFrame& f, double t) {
    const double den = (f.m + f.alpha - 1.0) * std::cos(2.0 * t) - (f.m - f.alpha - 1.0);
    return (f.m + f.alpha) * std::sin(2.0 * t) / den;
}

void check_containment_w(const BranchFrame& f, double t, double w, double slack) {
    const double g = barrier_g(f, t);
    const double lo = f.dir > 0 ? f.gamma * g : g;
    const double hi = f.dir > 0 ? g : f.gamma * g;
    const double pad = slack * (1.0 + std::abs(g));
    if (w < lo - pad || w > hi + pad)
        throw BarrierEscape("integrate_branch: sample left the barrier funnel");
}

void check_containment_u(const BranchFrame& f, double t, double u, double slack) {
    if (std::abs(f.t_hat - t) <= kPoleGuard) return;
    const double g = barrier_g(f, t);
    double lo = 1.0 / g, hi = 1.0 / (f.gamma * g);
    if (lo > hi) std::swap(lo, hi);
    const double pad = slack * (std::abs(lo) + std::abs(hi)) + 1e-12;
    if (u < lo - pad || u > hi + pad)
        throw BarrierEscape("integrate_branch: reciprocal sample left the funnel");
}

FoliationSolution integrate_once(const FoliationConfig& cfg, Branch branch,
                                 double launch_factor) {
    const double th = cone_angle(cfg.m, cfg.alpha);
    if (!(cfg.eps > 0.0) || !(cfg.eps < th / 4.0))
        throw std::invalid_argument("integrate_branch: eps must lie in (0, t_hat/4)");

    BranchFrame f;
    f.m = cfg.m;
    f.alpha = cfg.alpha;
    f.gamma = cfg.gamma;
    f.t_hat = th;
    if (branch == Branch::BelowCone) {
        f.outer = 0.0;
        f.t_start = cfg.eps;
        f.t_cut = th - cfg.eps;
        f.dir = +1;
    } else {
        f.outer = kPi / 2.0;
        f.t_start = kPi / 2.0 - cfg.eps;
        f.t_cut = th + cfg.eps;
        f.dir = -1;
    }

    // Step ceiling kappa keeps the 5-point stencil truncation below tol over
    // the w-measurement window; the pole amplitude is bounded below through
    // gamma and the upper solution's residue (m+alpha)/(2(m+alpha-1)).
    const double amp_floor =
        0.5 * cfg.gamma * (cfg.m + cfg.alpha) / (2.0 * (cfg.m + cfg.alpha - 1.0));
    const double kappa = std::pow(
        cfg.tol * amp_floor / (104.0 * kResidualWindow * kResidualWindow), 0.25);
    const double span = std::abs(f.t_cut - f.t_start);
    const double h_global = span / std::max(cfg.n, 64);
    const double slack = 1e-9;
    const double rtol = 1e-13, atol = 1e-15;

    FoliationSolution sol;
    sol.branch = branch;
    sol.m = cfg.m;
    sol.alpha = cfg.alpha;
    sol.gamma = cfg.gamma;
    sol.eps = cfg.eps;
    sol.tol = cfg.tol;
    sol.t_hat = th;

    double t = f.t_start;
    State y{launch_factor * barrier_g(f, t), 0.0};
    bool recip = false;
    double recip_floor = 0.0;

    sol.t.push_back(t);
    sol.w.push_back(y.y);
    sol.v.push_back(y.v);
    check_containment_w(f, t, y.y, slack);

    auto ceiling = [&](double at, bool carry_v) {
        const double d = std::min(std::abs(f.t_hat - at), std::abs(at - f.outer));
        double h = kappa * d;
        if (recip) h = std::max(h, recip_floor);
        if (carry_v) h = std::min(h, h_global);
        return h;
    };

    auto advance = [&](double target, bool carry_v) {
        // Returns true when the target angle was reached; in reciprocal mode
        // stops early at the zero crossing of u (returns false with
        // pole_crossing set).
        double h_try = ceiling(t, carry_v);
        while (f.dir * (target - t) > 4.0 * std::numeric_limits<double>::epsilon()) {
            double h = std::min(h_try, ceiling(t, carry_v));
            if (h < 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
                throw StepUnderflow("integrate_branch: step size below the machine floor");
            h = std::min(h, std::abs(target - t));
            const StepResult st = dp45_step(f.m, f.alpha, t, y, f.dir * h, recip, carry_v,
                                            rtol, atol);
            if (!(st.err <= 1.0)) {  // rejects NaN as well
                const double shrink =
                    std::isfinite(st.err) ? std::max(0.2, 0.9 * std::pow(st.err, -0.2)) : 0.2;
                h_try = h * shrink;
                continue;
            }
            const double t_new = t + f.dir * h;
            if (recip && (st.y5.y == 0.0 || st.y5.y * y.y < 0.0)) {
                const double frac = y.y == st.y5.y ? 0.5 : y.y / (y.y - st.y5.y);
                sol.pole_crossing = t + f.dir * h * frac;
                return false;
            }
            t = t_new;
            y = st.y5;
            h_try = h * std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(st.err, 1e-10), -0.2)));

            if (!recip) {
                if (std::abs(y.y) >= kReciprocalSwitch) {
                    recip = true;
                    y.y = 1.0 / y.y;
                    recip_floor = std::abs(f.t_hat - t) / 8.0;
                    h_try = recip_floor;
                }
            }
            if (recip) {
                check_containment_u(f, t, y.y, slack);
                sol.t_recip.push_back(t);
                sol.u_recip.push_back(y.y);
                if (carry_v) {
                    sol.t.push_back(t);
                    sol.w.push_back(1.0 / y.y);
                    sol.v.push_back(y.v);
                }
            } else {
                check_containment_w(f, t, y.y, slack);
                if (carry_v) {
                    sol.t.push_back(t);
                    sol.w.push_back(y.y);
                    sol.v.push_back(y.v);
                }
            }
        }
        return true;
    };

    // Phase A: launch -> truncated inner endpoint, storing samples.
    if (!advance(f.t_cut, true))
        throw BarrierEscape("integrate_branch: pole crossing before the truncated endpoint");

    // Phase B: continuation toward the pole in search of the 1/w crossing.
    const double overshoot = f.t_hat + f.dir * cfg.eps;
    const bool reached_overshoot = advance(overshoot, false);
    if (reached_overshoot && std::isnan(sol.pole_crossing))
        throw BarrierEscape("integrate_branch: no reciprocal zero crossing within eps of the pole");

    if (branch == Branch::AboveCone) {
        std::reverse(sol.t.begin(), sol.t.end());
        std::reverse(sol.w.begin(), sol.w.end());
        std::reverse(sol.v.begin(), sol.v.end());
        std::reverse(sol.t_recip.begin(), sol.t_recip.end());
        std::reverse(sol.u_recip.begin(), sol.u_recip.end());
    }
    return sol;
}

}  // namespace

FoliationSolution integrate_branch(const FoliationConfig& cfg, Branch branch) {
    if (cfg.m < 2 || !(cfg.alpha > 0))
        throw std::invalid_argument("integrate_branch: requires m >= 2, alpha > 0");
    const double s = cfg.m + cfg.alpha;
    if (!(cfg.gamma > 0.0) || !(cfg.gamma < 1.0 - 1.0 / s))
        throw NotBelowOne("integrate_branch: gamma outside (0, 1 - 1/(m+alpha))");
    try {
        return integrate_once(cfg, branch, cfg.gamma);
    } catch (const BarrierEscape&) {
        // Relaunch from the funnel midpoint; any trajectory in the funnel
        // witnesses the certificate.
        return integrate_once(cfg, branch, 0.5 * (cfg.gamma + 1.0));
    }
}

void build_antiderivative(FoliationSolution& sol) {
    if (sol.w.empty()) throw std::logic_error("build_antiderivative: no samples");
    if (sol.v_built) return;
    const size_t n = sol.t.size();

    // Boundary term: w vanishes at the outer singular angle, so the missing
    // stub integrates to eps * w(outer sample) / 2 at trapezoid accuracy.
    double offset;
    size_t launch;
    if (sol.branch == Branch::BelowCone) {
        launch = 0;
        offset = 0.5 * sol.t[0] * sol.w[0];
    } else {
        launch = n - 1;
        offset = -0.5 * (kPi / 2.0 - sol.t[n - 1]) * sol.w[n - 1];
    }
    const double anchor = sol.v[launch];
    for (auto& x : sol.v) x += offset - anchor;

    // Independent composite-trapezoid cross-check on the same grid.
    double vt = sol.v[0];
    double worst = 0.0;
    for (size_t i = 1; i < n; ++i) {
        vt += 0.5 * (sol.t[i] - sol.t[i - 1]) * (sol.w[i] + sol.w[i - 1]);
        worst = std::max(worst, std::abs(vt - sol.v[i]));
    }
    sol.v_quadrature_error = worst;
    sol.v_built = true;
}

std::vector<CurvePoint> level_curve(const FoliationSolution& sol, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("level_curve: lambda must be positive");
    if (!sol.v_built || sol.t.empty())
        throw std::logic_error("level_curve: antiderivative not built");
    std::vector<CurvePoint> pts;
    pts.reserve(sol.t.size());
    for (size_t i = 0; i < sol.t.size(); ++i) {
        const double r = lambda * std::exp(sol.v[i]) * std::cos(sol.t[i]);
        const double h = lambda * std::exp(sol.v[i]) * std::sin(sol.t[i]);
        pts.push_back({r, h});
    }
    return pts;
}

namespace {

double interpolate_v(const FoliationSolution& s, double theta) {
    const auto& T = s.t;
    const auto& V = s.v;
    if (theta <= T.front()) {
        if (s.branch == Branch::BelowCone) {
            // v ~ c t^2 near the axis; taper quadratically to the limit 0.
            const double r = theta / T.front();
            return V.front() * r * r;
        }
        return V.front();
    }
    if (theta >= T.back()) {
        if (s.branch == Branch::AboveCone) {
            const double span = kPi / 2.0 - T.back();
            const double r = span > 0 ? (kPi / 2.0 - theta) / span : 0.0;
            return V.back() * r * r;
        }
        return V.back();
    }
    const auto it = std::upper_bound(T.begin(), T.end(), theta);
    const size_t i = static_cast<size_t>(it - T.begin());
    const double f = (theta - T[i - 1]) / (T[i] - T[i - 1]);
    return V[i - 1] + f * (V[i] - V[i - 1]);
}

}  // namespace

double auxiliary_value(const FoliationSolution& below, const FoliationSolution& above,
                       double radial, double height) {
    if (!(radial > 0) || !(height > 0))
        throw std::invalid_argument("auxiliary_value: requires radial > 0, height > 0");
    if (!below.v_built || !above.v_built)
        throw std::logic_error("auxiliary_value: antiderivative not built");
    const double theta = std::atan2(height, radial);
    const double th = below.t_hat;
    const double eps = std::max(below.eps, above.eps);
    if (std::abs(theta - th) < eps)
        throw AngleNearCone("auxiliary_value: angle within eps of the cone");
    const FoliationSolution& s = theta < th ? below : above;
    const double radius = std::hypot(radial, height);
    const double value = radius * std::exp(-interpolate_v(s, theta));
    return theta < th ? value : -value;
}

namespace {

// Fornberg finite-difference weights for derivative orders 0..order at x0.
void fornberg(double x0, const double* x, int n, int order, std::vector<double>& out) {
    out.assign(static_cast<size_t>(n) * (order + 1), 0.0);
    auto c = [&](int j, int k) -> double& { return out[static_cast<size_t>(j) * (order + 1) + k]; };
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
                c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k) c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
            c(j, 0) = c4 * c(j, 0) / c3;
        }
        c1 = c2;
    }
}

}  // namespace

double max_ode_residual(const FoliationSolution& sol) {
    double worst = 0.0;
    std::vector<double> wts;

    // Collar at the pole: the reciprocal equation's u-sensitivity grows like
    // |phi|/u^2, so accumulated integration error in u of order 1e-13 swamps
    // the tolerance once |u| drops below this.
    const double u_collar = (sol.m + sol.alpha) * 1e-12 / sol.tol;

    const auto& T = sol.t;
    const auto& W = sol.w;
    for (size_t i = 2; i + 2 < T.size(); ++i) {
        bool w_form = true, u_form = true;
        for (size_t j = i - 2; j <= i + 2; ++j) {
            const double a = std::abs(W[j]);
            if (a > kResidualWindow * 1.1) w_form = false;
            if (a < kResidualWindow * 0.9) u_form = false;
        }
        if (w_form) {
            fornberg(T[i], &T[i - 2], 5, 1, wts);
            double d = 0.0;
            for (int j = 0; j < 5; ++j) d += wts[static_cast<size_t>(j) * 2 + 1] * W[i - 2 + j];
            worst = std::max(worst, std::abs(d - ode_rhs(sol.m, sol.alpha, T[i], W[i])));
        } else if (u_form) {
            double u[5];
            for (int j = 0; j < 5; ++j) u[j] = 1.0 / W[i - 2 + j];
            fornberg(T[i], &T[i - 2], 5, 1, wts);
            double d = 0.0;
            for (int j = 0; j < 5; ++j) d += wts[static_cast<size_t>(j) * 2 + 1] * u[j];
            worst = std::max(worst, std::abs(d - recip_rhs(sol.m, sol.alpha, T[i], u[2])));
        }
    }

    const auto& Tu = sol.t_recip;
    const auto& U = sol.u_recip;
    for (size_t i = 2; i + 2 < Tu.size(); ++i) {
        if (std::abs(U[i]) < u_collar) continue;
        fornberg(Tu[i], &Tu[i - 2], 5, 1, wts);
        double d = 0.0;
        for (int j = 0; j < 5; ++j) d += wts[static_cast<size_t>(j) * 2 + 1] * U[i - 2 + j];
        worst = std::max(worst, std::abs(d - recip_rhs(sol.m, sol.alpha, Tu[i], U[i])));
    }
    return worst;
}

double max_euler_lagrange_residual(const FoliationSolution& sol) {
    if (!sol.v_built)
        throw std::logic_error("max_euler_lagrange_residual: antiderivative not built");
    const auto& T = sol.t;
    const auto& V = sol.v;
    double worst = 0.0;
    std::vector<double> wts;
    for (size_t i = 2; i + 2 < T.size(); ++i) {
        bool in_window = true;
        for (size_t j = i - 2; j <= i + 2; ++j)
            if (std::abs(sol.w[j]) > kResidualWindow * 1.1) in_window = false;
        if (!in_window) continue;
        fornberg(T[i], &T[i - 2], 5, 2, wts);
        double vd = 0.0, vdd = 0.0;
        for (int j = 0; j < 5; ++j) {
            vd += wts[static_cast<size_t>(j) * 3 + 1] * V[i - 2 + j];
            vdd += wts[static_cast<size_t>(j) * 3 + 2] * V[i - 2 + j];
        }
        const double rhs =
            (1.0 + vd * vd) * (sol.m + sol.alpha + phi_coeff(sol.m, sol.alpha, T[i]) * vd);
        worst = std::max(worst, std::abs(vdd - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

bool barrier_contained(const FoliationSolution& sol, double slack) {
    for (size_t i = 0; i < sol.t.size(); ++i) {
        const double den = (sol.m + sol.alpha - 1.0) * std::cos(2.0 * sol.t[i]) -
                           (sol.m - sol.alpha - 1.0);
        const double g = (sol.m + sol.alpha) * std::sin(2.0 * sol.t[i]) / den;
        const double lo = sol.branch == Branch::BelowCone ? sol.gamma * g : g;
        const double hi = sol.branch == Branch::BelowCone ? g : sol.gamma * g;
        const double pad = slack * (1.0 + std::abs(g));
        if (sol.w[i] < lo - pad || sol.w[i] > hi + pad) return false;
    }
    return true;
}

}  // namespace hypercone
