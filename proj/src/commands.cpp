#include "hypercone/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hypercone/alpha.hpp"
#include "hypercone/cone_polys.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/foliation.hpp"

namespace hypercone {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

std::string fmt(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string fmt_sign(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::vector<int> parse_int_range(const std::string& spec) {
    std::vector<int> out;
    for (const auto& token : split(spec, ',')) {
        if (token.empty()) throw std::invalid_argument("empty range token");
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(token));
            continue;
        }
        const int a = std::stoi(token.substr(0, dots));
        const int b = std::stoi(token.substr(dots + 2));
        if (b < a) throw std::invalid_argument("descending range '" + token + "'");
        for (int v = a; v <= b; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty range '" + spec + "'");
    return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
    std::vector<double> out;
    for (const auto& token : split(spec, ',')) {
        if (token.empty()) throw std::invalid_argument("empty list token");
        out.push_back(std::stod(token));
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + spec + "'");
    return out;
}

OutputRecord cmd_alpha_table(const AlphaTableArgs& args) {
    if (args.digits < 1) throw std::invalid_argument("alpha-table: digits must be >= 1");
    for (int m : args.m_list)
        if (m < 2) throw std::invalid_argument("alpha-table: every m must be >= 2");

    OutputRecord rec;
    rec.subcommand = "alpha-table";
    rec.params = {{"m", join_ints(args.m_list)}, {"digits", std::to_string(args.digits)}};
    rec.columns = {"m", "alpha_m", "isolator_lo", "isolator_hi"};
    for (int m : args.m_list) {
        const CriticalExponent ce = critical_exponent(m, args.digits);
        rec.rows.push_back({std::to_string(m), ce.decimal, ce.isolator.lo.str(),
                            ce.isolator.hi.str()});
    }
    return rec;
}

namespace {

// Regime entries of the canonical chain sign table: expected sign of element
// k at alpha = 0 and alpha -> infinity as a function of m.
int expected_sign_zero(int k, int m) {
    switch (k) {
        case 0: return m == 2 ? 0 : -1;
        case 1: return -1;
        case 2: return +1;
        case 3: return +1;
        case 4: return m == 2 ? -1 : +1;
        case 5: return m <= 3 ? -1 : (m <= 5 ? +1 : -1);
        case 6: return m == 2 ? +1 : -1;
        case 7: return m <= 6 ? +1 : -1;
        default: return +1;
    }
}

int expected_sign_inf(int k, int m) {
    switch (k) {
        case 3: return m <= 28 ? -1 : +1;
        case 4: return -1;
        case 5: return m <= 4 ? -1 : (m <= 10 ? +1 : -1);
        case 6: return m <= 22 ? +1 : -1;
        default: return +1;
    }
}

void verify_q(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "alpha", "descartes_neg", "theta_sign", "quadratic_sign",
                   "bound_holds", "cubic_positive_roots", "ok"};
    const std::vector<Rational> alphas = {Rational(1, 4), Rational(1), Rational(3), Rational(7),
                                          Rational(12)};
    for (int m : args.m_list) {
        const Poly qm = discriminant_quadratic(m);
        const bool qm_one_root = SturmChain(qm).count_roots_positive() == 1;
        for (const Rational& a : alphas) {
            const ConeParams cp(m, a);
            const Poly Q = divergence_cubic(cp);
            const int desc = descartes_sign_changes(Q.mirror());
            const Rational vt = divergence_cubic_discriminant(cp);
            const int qs = qm.eval(a).sign();
            const bool bound = subcalibration_bound_holds(cp);
            int pos_roots = -1;
            bool sign_ok = vt.sign() == -qs;
            bool positivity_ok = true;
            if (bound) {
                pos_roots = SturmChain(Q).count_roots_positive();
                positivity_ok = qs > 0 ? pos_roots == 0 : pos_roots <= 1;
            }
            const bool ok = desc == 1 && sign_ok && qm_one_root && positivity_ok;
            rec.rows.push_back({std::to_string(m), a.str(), std::to_string(desc),
                                fmt_sign(vt.sign()), fmt_sign(qs), bound ? "true" : "false",
                                pos_roots < 0 ? "-" : std::to_string(pos_roots),
                                ok ? "true" : "false"});
            if (!ok) rec.pass = false;
        }
    }
}

void verify_quartic(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "alpha", "ok"};
    for (int m : args.m_list) {
        const std::vector<Rational> alphas = {Rational(3, m), Rational(1) + Rational(2, m),
                                              Rational(5), Rational(25, 2)};
        for (const Rational& a : alphas) {
            const ConeParams cp(m, a);
            const Poly P = lower_solution_quartic(cp);
            const Rational s = Rational(m) + a;
            bool ok = P.coeff(4).sign() > 0 && P.coeff(3).sign() < 0 && P.coeff(1).sign() > 0 &&
                      P.coeff(0).sign() < 0;
            ok = ok && P.eval(Rational(0)) == Rational(-8) * Rational(m - 1) * a;
            const Rational edge = Rational(1) - Rational(1) / s;
            ok = ok && P.eval(edge) == Rational(-8) * Rational(m - 1) * a / s;
            const Poly shifted = P.taylor_shift(edge);
            ok = ok && shifted.coeff(4).sign() > 0 && shifted.coeff(3).sign() > 0 &&
                 shifted.coeff(2).sign() > 0 && shifted.coeff(0).sign() < 0;
            const DepressedQuartic d = depressed_lower_quartic(cp);
            ok = ok && d.p.sign() < 0 && (d.p * d.p - Rational(4) * d.r).sign() > 0;
            ok = ok && descartes_sign_changes(resolvent_cubic(d).mirror()) == 0;
            rec.rows.push_back({std::to_string(m), a.str(), ok ? "true" : "false"});
            if (!ok) rec.pass = false;
        }
    }
}

void verify_sturm(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "k", "sign_at_zero", "sign_at_inf", "ok"};
    for (int m : args.m_list) {
        const SturmSignTable t = sturm_sign_table(m);
        bool all_ok = t.changes_at_zero == 3 && t.changes_at_inf == 2;
        for (size_t k = 0; k < t.sign_at_zero.size(); ++k) {
            const bool ok = t.sign_at_zero[k] == expected_sign_zero(static_cast<int>(k), m) &&
                            t.sign_at_inf[k] == expected_sign_inf(static_cast<int>(k), m);
            all_ok = all_ok && ok;
            rec.rows.push_back({std::to_string(m), std::to_string(k),
                                fmt_sign(t.sign_at_zero[k]), fmt_sign(t.sign_at_inf[k]),
                                ok ? "true" : "false"});
        }
        rec.rows.push_back({std::to_string(m), "changes",
                            std::to_string(t.changes_at_zero), std::to_string(t.changes_at_inf),
                            all_ok ? "true" : "false"});
        if (!all_ok) rec.pass = false;
    }
}

void verify_identity(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "alpha", "ok"};
    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<int> m_dist(2, 30);
    std::uniform_int_distribution<long> num_dist(1, 400), den_dist(1, 40);
    for (int i = 0; i < args.samples; ++i) {
        const int m = m_dist(rng);
        const Rational a(num_dist(rng), den_dist(rng));
        const bool ok = discriminant_identity_holds(ConeParams(m, a));
        rec.rows.push_back({std::to_string(m), a.str(), ok ? "true" : "false"});
        if (!ok) rec.pass = false;
    }
}

void verify_bracket(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "ok"};
    for (int m : args.m_list) {
        const bool ok = critical_bracket_holds(m);
        rec.rows.push_back({std::to_string(m), ok ? "true" : "false"});
        if (!ok) rec.pass = false;
    }
}

void verify_lawson(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"k", "h", "minimizing", "expected", "ok"};
    for (int k = 2; k + 2 <= args.sum_max; ++k) {
        for (int h = 2; k + h <= args.sum_max; ++h) {
            const bool got = lawson_cone_minimizing(k, h);
            const bool expected = (k + h >= 9) || (k == 3 && h == 5) || (k == 5 && h == 3) ||
                                  (k == 4 && h == 4);
            const bool ok = got == expected;
            rec.rows.push_back({std::to_string(k), std::to_string(h), got ? "true" : "false",
                                expected ? "true" : "false", ok ? "true" : "false"});
            if (!ok) rec.pass = false;
        }
    }
}

void verify_stability(const VerifyArgs& args, OutputRecord& rec) {
    rec.columns = {"m", "ok"};
    for (int m : args.m_list) {
        const bool ok = stability_floor_holds(m);
        rec.rows.push_back({std::to_string(m), ok ? "true" : "false"});
        if (!ok) rec.pass = false;
    }
}

}  // namespace

OutputRecord cmd_verify(const VerifyArgs& args) {
    for (int m : args.m_list)
        if (m < 2) throw std::invalid_argument("verify: every m must be >= 2");

    OutputRecord rec;
    rec.subcommand = "verify";
    rec.params = {{"which", args.which}};
    if (args.which == "lawson") {
        rec.params.emplace_back("sum_max", std::to_string(args.sum_max));
    } else if (args.which == "identity") {
        rec.params.emplace_back("seed", std::to_string(args.seed));
        rec.params.emplace_back("samples", std::to_string(args.samples));
    } else {
        rec.params.emplace_back("m", join_ints(args.m_list));
    }

    if (args.which == "q") verify_q(args, rec);
    else if (args.which == "quartic") verify_quartic(args, rec);
    else if (args.which == "sturm") verify_sturm(args, rec);
    else if (args.which == "identity") verify_identity(args, rec);
    else if (args.which == "bracket") verify_bracket(args, rec);
    else if (args.which == "lawson") verify_lawson(args, rec);
    else if (args.which == "stability") verify_stability(args, rec);
    else throw std::invalid_argument("verify: unknown check '" + args.which + "'");
    return rec;
}

OutputRecord cmd_foliate(const FoliateArgs& args) {
    if (args.m < 2) throw std::invalid_argument("foliate: m must be >= 2");
    const Rational alpha_exact = Rational::from_string(args.alpha);
    if (alpha_exact.sign() <= 0) throw std::invalid_argument("foliate: alpha must be positive");
    for (double l : args.lambdas)
        if (!(l > 0)) throw std::invalid_argument("foliate: lambdas must be positive");

    OutputRecord rec;
    rec.subcommand = "foliate";
    rec.params = {{"m", std::to_string(args.m)},
                  {"alpha", alpha_exact.str()},
                  {"eps", fmt(args.eps)},
                  {"tol", fmt(args.tol)},
                  {"force", args.force ? "true" : "false"}};
    rec.columns = {"branch", "metric", "value"};

    const bool certified =
        critical_polynomial(args.m).eval(alpha_exact).sign() >= 0;
    rec.params.emplace_back("alpha_above_critical", certified ? "true" : "false");
    if (!certified && !args.force) {
        rec.rows.push_back({"-", "error", "alpha below the certified critical exponent"});
        rec.pass = false;
        return rec;
    }

    if (alpha_exact * Rational(args.m) <= Rational(2)) {
        rec.rows.push_back({"-", "error", "alpha <= 2/m admits no lower solution"});
        rec.pass = false;
        return rec;
    }
    const auto window = lower_solution_window(ConeParams(args.m, alpha_exact));
    if (!window) {
        rec.rows.push_back({"-", "margin", "negative (no admissible gamma)"});
        rec.pass = false;
        return rec;
    }

    FoliationConfig cfg;
    cfg.m = args.m;
    cfg.alpha = alpha_exact.to_double();
    cfg.eps = args.eps;
    cfg.tol = args.tol;
    double g = window->gamma.to_double();
    const double wlo = window->window.lo.to_double(), whi = window->window.hi.to_double();
    g = std::min(std::max(g, wlo), whi);
    cfg.gamma = g;
    rec.params.emplace_back("gamma", decimal_string(window->gamma, args.digits));

    const QuadMargin qm = lower_solution_margin(cfg.m, cfg.alpha, cfg.gamma);
    rec.params.emplace_back("margin", fmt(qm.margin));

    std::ofstream curves(args.out_path);
    if (!curves) throw std::runtime_error("foliate: cannot open '" + args.out_path + "'");
    curves << "branch,lambda,t,radial,height,w,v\n";

    for (Branch branch : {Branch::BelowCone, Branch::AboveCone}) {
        const char* name = branch == Branch::BelowCone ? "below" : "above";
        FoliationSolution sol;
        try {
            sol = integrate_branch(cfg, branch);
        } catch (const BarrierEscape& e) {
            rec.rows.push_back({name, "error", e.what()});
            rec.pass = false;
            continue;
        }
        build_antiderivative(sol);

        const double ode_res = max_ode_residual(sol);
        const double el_res = max_euler_lagrange_residual(sol);
        const bool contained = barrier_contained(sol);
        const double offset = std::abs(sol.pole_crossing - sol.t_hat);
        const bool ok = contained && ode_res < cfg.tol && el_res < 100.0 * cfg.tol &&
                        offset < cfg.eps;

        rec.rows.push_back({name, "samples", std::to_string(sol.t.size())});
        rec.rows.push_back({name, "max_ode_residual", fmt(ode_res)});
        rec.rows.push_back({name, "max_euler_lagrange_residual", fmt(el_res)});
        rec.rows.push_back({name, "containment", contained ? "true" : "false"});
        rec.rows.push_back({name, "pole_crossing_offset", fmt(offset)});
        rec.rows.push_back({name, "v_quadrature_error", fmt(sol.v_quadrature_error)});
        rec.rows.push_back({name, "ok", ok ? "true" : "false"});
        if (!ok) rec.pass = false;

        // Thinned level curves; every lambda shares the (t, w, v) samples.
        const size_t stride = std::max<size_t>(1, sol.t.size() / 2048);
        for (double lambda : args.lambdas) {
            const auto pts = level_curve(sol, lambda);
            for (size_t i = 0; i < pts.size(); i += stride) {
                curves << name << "," << fmt(lambda) << "," << fmt(sol.t[i]) << ","
                       << fmt(pts[i].radial) << "," << fmt(pts[i].height) << ","
                       << fmt(sol.w[i]) << "," << fmt(sol.v[i]) << "\n";
            }
        }
    }
    rec.params.emplace_back("curves", args.out_path);
    return rec;
}

OutputRecord cmd_subcalib(const SubcalibArgs& args) {
    if (args.m < 2) throw std::invalid_argument("subcalib: m must be >= 2");
    const Rational alpha_exact = Rational::from_string(args.alpha);
    if (alpha_exact.sign() <= 0) throw std::invalid_argument("subcalib: alpha must be positive");

    const bool bound = subcalibration_bound_holds(ConeParams(args.m, alpha_exact));
    const SubcalibrationReport rep =
        subcalibration_report(args.m, alpha_exact.to_double(), args.grid);

    OutputRecord rec;
    rec.subcommand = "subcalib";
    rec.params = {{"m", std::to_string(args.m)},
                  {"alpha", alpha_exact.str()},
                  {"bound_holds", bound ? "true" : "false"},
                  {"r_range", fmt(args.grid.r_min) + ".." + fmt(args.grid.r_max)},
                  {"y_range", fmt(args.grid.y_min) + ".." + fmt(args.grid.y_max)},
                  {"nr", std::to_string(args.grid.nr)},
                  {"ny", std::to_string(args.grid.ny)},
                  {"cone_band", fmt(args.grid.cone_band)}};
    rec.columns = {"metric", "value"};
    rec.rows = {
        {"max_div_inside", fmt(rep.max_div_inside)},
        {"argmax_inside", fmt(rep.argmax_inside.radial) + ";" + fmt(rep.argmax_inside.height)},
        {"min_div_outside", fmt(rep.min_div_outside)},
        {"argmin_outside", fmt(rep.argmin_outside.radial) + ";" + fmt(rep.argmin_outside.height)},
        {"norm_deviation", fmt(rep.norm_deviation)},
        {"norm_bound_ok", rep.norm_bound_ok ? "true" : "false"},
        {"boundary_alignment_err", fmt(rep.boundary_alignment_err)},
        {"inside_count", std::to_string(rep.inside_count)},
        {"outside_count", std::to_string(rep.outside_count)},
        {"tolerance", fmt(rep.tolerance)},
    };
    rec.pass = rep.pass;
    return rec;
}

}  // namespace hypercone
