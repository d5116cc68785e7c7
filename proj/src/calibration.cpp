#include "hypercone/calibration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypercone {

namespace {

double cubic_factor(int m, double alpha, double s) {
    // (m-1)^4 s^3 - 3 (m-1)^2 alpha s^2 - 3 (m-1) alpha^2 s + alpha^4
    const double m1 = m - 1.0;
    return ((m1 * m1 * m1 * m1 * s - 3.0 * m1 * m1 * alpha) * s - 3.0 * m1 * alpha * alpha) * s +
           alpha * alpha * alpha * alpha;
}

void validate(int m, double alpha, const ReducedPoint& pt) {
    if (m < 2 || !(alpha > 0))
        throw std::invalid_argument("calibration: requires m >= 2, alpha > 0");
    if (!(pt.radial > 0) || !(pt.height > 0))
        throw std::invalid_argument("calibration: point must have positive coordinates");
}

}  // namespace

double explicit_auxiliary(int m, double alpha, const ReducedPoint& pt) {
    if (m < 2 || !(alpha > 0))
        throw std::invalid_argument("calibration: requires m >= 2, alpha > 0");
    const double r2 = pt.radial * pt.radial, y2 = pt.height * pt.height;
    const double m1 = m - 1.0;
    return 0.25 * (alpha * alpha * r2 * r2 - m1 * m1 * y2 * y2);
}

double gradient_norm(int m, double alpha, const ReducedPoint& pt) {
    validate(m, alpha, pt);
    const double m1 = m - 1.0;
    const double r3 = pt.radial * pt.radial * pt.radial;
    const double y3 = pt.height * pt.height * pt.height;
    return std::hypot(alpha * alpha * r3, m1 * m1 * y3);
}

double divergence_closed(int m, double alpha, const ReducedPoint& pt) {
    validate(m, alpha, pt);
    const double m1 = m - 1.0;
    const double r = pt.radial, y = pt.height;
    const double n = gradient_norm(m, alpha, pt);
    const double s = (y * y) / (r * r);
    const double last = alpha * r * r - m1 * y * y;
    const double r6 = r * r * r * r * r * r;
    return -m1 * alpha * std::pow(y, alpha) * r6 * cubic_factor(m, alpha, s) * last / (n * n * n);
}

namespace {

double xi_radial(int m, double alpha, double r, double y) {
    const double n = gradient_norm(m, alpha, {r, y});
    return -std::pow(y, alpha) * alpha * alpha * r * r * r / n;
}

double xi_height(int m, double alpha, double r, double y) {
    const double m1 = m - 1.0;
    const double n = gradient_norm(m, alpha, {r, y});
    return std::pow(y, alpha) * m1 * m1 * y * y * y / n;
}

}  // namespace

double divergence_numeric(int m, double alpha, const ReducedPoint& pt, double h) {
    validate(m, alpha, pt);
    if (!(h > 0)) throw std::invalid_argument("divergence_numeric: h must be positive");
    const double r = pt.radial, y = pt.height;
    const double dr = (xi_radial(m, alpha, r + h, y) - xi_radial(m, alpha, r - h, y)) / (2.0 * h);
    const double dy = (xi_height(m, alpha, r, y + h) - xi_height(m, alpha, r, y - h)) / (2.0 * h);
    return dr + (m - 1.0) * xi_radial(m, alpha, r, y) / r + dy;
}

SubcalibrationReport subcalibration_report(int m, double alpha, const GridSpec& grid) {
    if (m < 2 || !(alpha > 0))
        throw std::invalid_argument("subcalibration_report: requires m >= 2, alpha > 0");
    if (grid.nr < 2 || grid.ny < 2 || !(grid.r_min > 0) || !(grid.y_min > 0) ||
        !(grid.r_max > grid.r_min) || !(grid.y_max > grid.y_min) || grid.cone_band < 0)
        throw std::invalid_argument("subcalibration_report: malformed grid");

    const double t_hat = std::atan(std::sqrt(alpha / (m - 1.0)));
    const double tol = 1e-10;

    SubcalibrationReport rep{};
    rep.max_div_inside = -std::numeric_limits<double>::infinity();
    rep.min_div_outside = std::numeric_limits<double>::infinity();
    rep.tolerance = tol;

    const double dr = (grid.r_max - grid.r_min) / grid.nr;
    const double dy = (grid.y_max - grid.y_min) / grid.ny;
    for (int i = 0; i < grid.nr; ++i) {
        const double r = grid.r_min + (i + 0.5) * dr;
        for (int j = 0; j < grid.ny; ++j) {
            const double y = grid.y_min + (j + 0.5) * dy;
            const double theta = std::atan2(y, r);
            if (std::abs(theta - t_hat) <= grid.cone_band) continue;

            const ReducedPoint pt{r, y};
            const double d = divergence_closed(m, alpha, pt);
            const double xr = xi_radial(m, alpha, r, y);
            const double xy = xi_height(m, alpha, r, y);
            const double dev = std::abs(std::hypot(xr, xy) / std::pow(y, alpha) - 1.0);
            if (dev > rep.norm_deviation) rep.norm_deviation = dev;

            if (theta < t_hat) {
                ++rep.inside_count;
                if (d > rep.max_div_inside) {
                    rep.max_div_inside = d;
                    rep.argmax_inside = pt;
                }
            } else {
                ++rep.outside_count;
                if (d < rep.min_div_outside) {
                    rep.min_div_outside = d;
                    rep.argmin_outside = pt;
                }
            }
        }
    }

    // Alignment of xi+ with the exterior cone normal, sampled on the cone.
    const double slope = std::tan(t_hat);
    const double nrm = std::sqrt(m - 1.0 + alpha);
    const double nu_r = -std::sqrt(alpha) / nrm;
    const double nu_y = std::sqrt(m - 1.0) / nrm;
    for (int i = 0; i < grid.nr; ++i) {
        const double r = grid.r_min + (i + 0.5) * dr;
        const double y = slope * r;
        if (y <= grid.y_min || y >= grid.y_max) continue;
        const double xr = xi_radial(m, alpha, r, y);
        const double xy = xi_height(m, alpha, r, y);
        const double len = std::hypot(xr, xy);
        const double cross = std::abs(xr * nu_y - xy * nu_r) / len;
        const double dot = (xr * nu_r + xy * nu_y) / len;
        const double angle = std::atan2(cross, dot);
        if (angle > rep.boundary_alignment_err) rep.boundary_alignment_err = angle;
    }

    rep.norm_bound_ok = rep.norm_deviation <= 1e-14;
    rep.pass = rep.max_div_inside <= tol && rep.min_div_outside >= -tol && rep.norm_bound_ok &&
               rep.boundary_alignment_err < 1e-6;
    return rep;
}

}  // namespace hypercone
