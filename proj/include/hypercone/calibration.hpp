#pragma once

#include <cstddef>

namespace hypercone {

/// Point in the rotationally reduced half-plane (|x|, y), both coordinates
/// strictly positive.
struct ReducedPoint {
    double radial = 0;
    double height = 0;
};

/// Rectangular evaluation grid in reduced coordinates with an angular
/// exclusion band around the cone.
struct GridSpec {
    double r_min = 0.1;
    double r_max = 2.0;
    double y_min = 0.1;
    double y_max = 2.0;
    int nr = 50;
    int ny = 50;
    double cone_band = 0.05;  // angular half-width excluded around the cone
};

/// Explicit auxiliary function (alpha^2 |x|^4 - (m-1)^2 y^4)/4; vanishes
/// exactly on the cone.
double explicit_auxiliary(int m, double alpha, const ReducedPoint& pt);

/// |grad F| = sqrt(alpha^4 r^6 + (m-1)^4 y^6).
double gradient_norm(int m, double alpha, const ReducedPoint& pt);

/// Closed-form divergence of the weighted unit normal field
/// xi = -y^alpha grad F / |grad F|, off the cone and the axes.
double divergence_closed(int m, double alpha, const ReducedPoint& pt);

/// Same divergence recomputed independently with central differences of step
/// h in cylindrical coordinates (radial derivative + (m-1)/r curvature term
/// + height derivative).
double divergence_numeric(int m, double alpha, const ReducedPoint& pt, double h);

struct SubcalibrationReport {
    double max_div_inside;    // worst div xi+ below the cone (pass: <= tolerance)
    double min_div_outside;   // worst-signed div xi+ above (pass: >= -tolerance,
                              // equivalent to div xi- <= tolerance there)
    ReducedPoint argmax_inside;
    ReducedPoint argmin_outside;
    double norm_deviation;    // max | |xi|/y^alpha - 1 |
    bool norm_bound_ok;
    double boundary_alignment_err;  // radians, against the exact cone normal
    std::size_t inside_count;
    std::size_t outside_count;
    double tolerance;
    bool pass;
};

SubcalibrationReport subcalibration_report(int m, double alpha, const GridSpec& grid);

}  // namespace hypercone
