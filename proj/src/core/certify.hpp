// Grid certification of curvature lower bounds, bisection searches for the
// largest admissible taper and collar width, power-law fits of curvature
// blow-up, cone ratio scans, and the sup-norm profile distance.
#pragma once

#include "core/metric.hpp"

#include <string>
#include <vector>

namespace warpgeom {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Evidence that the smallest curvature-operator eigenvalue stays above a
// bound on a region: the minimum sampled margin over a Chebyshev grid with
// seam points forced in and geometric ladders toward open endpoints.
struct Certificate {
    Interval region;
    double bound = 0.0;
    int grid_points = 0;     // samples actually evaluated
    double min_margin = 0.0; // min over samples of (smallest eigenvalue - bound)
    double argmin = 0.0;     // radius attaining min_margin
    double tolerance = 0.0;
    bool pass = false;       // min_margin >= -tolerance
    ProfileDescriptor profile;
    int m = 0;
    std::string cutoff_tag;
    std::string note;        // failure reason when evaluation itself failed
};

// Samples both eigenvalues on at least `grid` points distributed over the
// sub-intervals cut by the profile seams (proportionally to width, floor 64
// per unit length). Region endpoints equal to 0 or length() are treated as
// open and probed by a dyadic ladder instead of an endpoint sample.
Certificate certify_rm_lower(const WarpedSphereMetric& metric, double bound,
                             Interval region, int grid, double tol);

// Largest taper eps for which the tapered sine of frequency k is strictly
// increasing and strictly concave on a grid over (0, pi/(4k)). Bisection to
// relative width tol.
double find_eps_max(double k, int grid = 512, double tol = 1e-6);

// Largest taper eps for which the blend_limit(k, eps) metric keeps all
// curvature eigenvalues >= k^2/(1+sigma) on (0, pi/(4k)]. Bisection to
// relative width tol.
double find_eps_plateau(double k, double sigma, int grid = 512, double tol = 1e-6);

// Largest collar width delta (up to the family cap pi/(8k)) for which the
// transition arc gamma stays inside the comparison envelope:
//   gamma <= sin(r)            on [0, 2*delta],
//   gamma >= tapered sine      on [0, 2*delta], and
//   tapered sine <= gamma <= (1+sigma) sin(kr)/k on [2*delta, pi/(4k)].
// Requires eps below the analytic taper bound 4k/(4+pi).
double find_delta_max(double k, double sigma, double eps, int grid = 512,
                      double tol = 1e-6);

// Least-squares fit of the smallest curvature eigenvalue against
// C * r^(-exponent) + offset on a log-spaced grid in [r_min, r_max],
// weighted relatively. Degenerate when the sampled values vary by less
// than a decade (bounded curvature), in which case offset carries the mean.
struct PowerFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    double offset = 0.0;
    double rms_residual = 0.0; // relative units
    bool degenerate = false;
};

PowerFit blowup_rate(const WarpedSphereMetric& metric, double r_min, double r_max,
                     int samples = 64);

// Scale-invariant cone ratios r^2 * lambda_max(Rm) and r^2 * scal at cone
// radius r = 1, sampled log-uniformly along the link coordinate s.
struct ConeScanRow {
    double s = 0.0;
    double r2_lambda_max = 0.0;
    double r2_scal = 0.0;
};

std::vector<ConeScanRow> cone_ratio_scan(const ConeMetric& cone, double s_min,
                                         double s_max, int count = 64);

// Max over a uniform grid of |p1 - p2|. When allow_reparam is set, p2 is
// pulled back by the affine map matching the two domains; otherwise lengths
// must agree to within 1e-9 relative.
double sup_distance(const WarpProfile& p1, const WarpProfile& p2, int grid = 1024,
                    bool allow_reparam = false);

} // namespace warpgeom
