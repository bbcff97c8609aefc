/*
 * warpgeom: numerical toolkit for rotationally symmetric metrics.
 *
 * Warped sphere metrics dr^2 + a(r)^2 g_{S^(m-1)} from a small set of named
 * profile families, curvature-operator eigenvalues, grid certification of
 * lower curvature bounds, cones over such metrics, and a shooting solver for
 * rotationally symmetric expanding gradient Ricci solitons.
 *
 * Conventions:
 *  - Every function returns a wg_status; results come back through out
 *    pointers. WG_OK is 0.
 *  - On failure, wg_last_error() returns a thread-local description of the
 *    most recent error in the calling thread.
 *  - Handles are created by wg_*_create/wg_metric_* constructors and must be
 *    released with the matching wg_*_free. Freeing NULL is a no-op.
 *  - String getters use a query protocol: call with buf = NULL to receive
 *    the required size (including the terminating NUL) in *len, then call
 *    again with a buffer at least that large.
 */
#ifndef WARPGEOM_H
#define WARPGEOM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wg_status {
    WG_OK = 0,
    WG_ERR_INVALID_ARG = 1,   /* precondition violated */
    WG_ERR_DOMAIN = 2,        /* evaluation outside the valid domain */
    WG_ERR_NO_CONVERGENCE = 3, /* iteration failed to converge */
    WG_ERR_IO = 4,            /* serialization failure */
    WG_ERR_BUFFER_TOO_SMALL = 5,
    WG_ERR_INTERNAL = 6
} wg_status;

const char* wg_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* wg_last_error(void);

/* ------------------------------------------------------------------ */
/* Warped sphere metrics                                               */
/* ------------------------------------------------------------------ */

typedef struct wg_metric wg_metric;

/* Constant curvature k^2: a(r) = sin(kr)/k on [0, pi/k]; k >= 1, m >= 2. */
wg_status wg_metric_round(double k, int m, wg_metric** out);

/* Spherical cap, tapered collar of width delta, shallow arc sin(kr)/k.
 * k >= 2, 0 < delta <= pi/(8k), 0 <= eps < 4k/pi. */
wg_status wg_metric_blend(double k, double delta, double eps, int m, wg_metric** out);

/* Collar width -> 0 limit of the blend; curvature unbounded at r = 0 when
 * eps > 0. */
wg_status wg_metric_blend_limit(double k, double eps, int m, wg_metric** out);

/* Round caps of radius delta joined to the shallow arc sin(r)/k on [0, pi];
 * 0 < delta < pi/4. */
wg_status wg_metric_cone_point(double k, double delta, int m, wg_metric** out);

/* cone_point scaled by 1/k so its curvature floor is 1. */
wg_status wg_metric_cone_point_scaled(double k, double delta, int m, wg_metric** out);

/* delta -> 0 limit of cone_point_scaled; cone angles at both poles. */
wg_status wg_metric_cone_point_limit(double k, int m, wg_metric** out);

/* The metric scaled by c > 0 (curvature divides by c). */
wg_status wg_metric_scale(const wg_metric* metric, double c, wg_metric** out);

void wg_metric_free(wg_metric* metric);

wg_status wg_metric_length(const wg_metric* metric, double* out);
wg_status wg_metric_dim(const wg_metric* metric, int* out);

/* a^(order)(r) for order in [0, 3]. */
wg_status wg_profile_eval(const wg_metric* metric, double r, int order, double* out);

/* Curvature-operator eigenvalues at interior r; *has_sph is 0 when m = 2
 * (no purely spherical planes). */
wg_status wg_curvature(const wg_metric* metric, double r, double* sec_rad,
                       double* sec_sph, int* has_sph);

/* Endpoint smoothness: 1 iff the profile closes smoothly at both poles. */
wg_status wg_smoothness_pass(const wg_metric* metric, int* out);

/* JSON document: family descriptor + smoothness report. */
wg_status wg_metric_json(const wg_metric* metric, char* buf, size_t* len);

/* CSV r,a,a_prime,a_second,a_third over `samples` uniform points. */
wg_status wg_profile_csv(const wg_metric* metric, int samples, char* buf, size_t* len);

/* CSV r,sec_rad,sec_sph over `samples` uniform interior points. */
wg_status wg_curvature_csv(const wg_metric* metric, int samples, char* buf,
                           size_t* len);

/* ------------------------------------------------------------------ */
/* Cones dr^2 + r^2 g_link                                             */
/* ------------------------------------------------------------------ */

/* Curvature eigenvalue extremes of the cone over `link` at cone radius r,
 * link position s: (n-1) zeros plus (lambda_link - 1)/r^2. */
wg_status wg_cone_eigen_range(const wg_metric* link, double r, double s,
                              double* lambda_min, double* lambda_max);

wg_status wg_cone_scal(const wg_metric* link, double r, double s, double* out);

/* Scale-invariant ratios r^2 lambda_max and r^2 scal at r = 1, sampled
 * log-uniformly at `count` link positions in [s_min, s_max]; also reports
 * the maxima over the scan. CSV columns: s,r2_lambda_max,r2_scal. */
wg_status wg_cone_scan_csv(const wg_metric* link, double s_min, double s_max,
                           int count, char* buf, size_t* len);
wg_status wg_cone_scan_max(const wg_metric* link, double s_min, double s_max,
                           int count, double* max_r2_lambda, double* max_r2_scal);

/* ------------------------------------------------------------------ */
/* Certification and parameter searches                                */
/* ------------------------------------------------------------------ */

typedef struct wg_certificate wg_certificate;

/* Samples the smallest curvature eigenvalue minus `bound` on at least `grid`
 * points over [lo, hi] (endpoints at the poles are treated as open). */
wg_status wg_certify(const wg_metric* metric, double bound, double lo, double hi,
                     int grid, double tol, wg_certificate** out);

void wg_certificate_free(wg_certificate* cert);

wg_status wg_certificate_pass(const wg_certificate* cert, int* out);
wg_status wg_certificate_margin(const wg_certificate* cert, double* min_margin,
                                double* argmin);
wg_status wg_certificate_points(const wg_certificate* cert, int* out);
wg_status wg_certificate_json(const wg_certificate* cert, char* buf, size_t* len);

/* Largest taper eps keeping the tapered sine of frequency k increasing and
 * concave on (0, pi/(4k)); bisection on a `grid`-point sign check. */
wg_status wg_find_eps_max(double k, int grid, double tol, double* out);

/* Largest taper eps keeping blend_limit(k, eps) curvature >= k^2/(1+sigma)
 * on (0, pi/(4k)]. */
wg_status wg_find_eps_plateau(double k, double sigma, int grid, double tol,
                              double* out);

/* Largest collar width delta keeping the transition arc inside its
 * comparison envelope (see library docs); eps must be < 4k/(4+pi). */
wg_status wg_find_delta_max(double k, double sigma, double eps, int grid,
                            double tol, double* out);

/* Fit of the smallest curvature eigenvalue to C r^-exponent + offset over a
 * log grid in [r_min, r_max]. degenerate = 1 when curvature is bounded on
 * the window. */
wg_status wg_blowup_rate(const wg_metric* metric, double r_min, double r_max,
                         int samples, double* exponent, double* coefficient,
                         double* offset, int* degenerate);

/* Max |a1 - a2| over a uniform grid; allow_reparam = 1 matches domains by
 * the affine map, otherwise differing lengths are rejected. */
wg_status wg_sup_distance(const wg_metric* m1, const wg_metric* m2, int grid,
                          int allow_reparam, double* out);

/* ------------------------------------------------------------------ */
/* Expanding soliton shooting                                          */
/* ------------------------------------------------------------------ */

typedef struct wg_soliton wg_soliton;

/* Integrate the reduced soliton system from tip data (scalar curvature s0
 * at the tip) up to time T with per-step tolerance tol. Outcomes other than
 * "completed" are reported by wg_soliton_outcome, not as errors. */
wg_status wg_soliton_integrate(int n, double s0, double t0, double T, double tol,
                               wg_soliton** out);

/* Bisection on s0 until |b'(T) - c_target| <= shoot_tol. */
wg_status wg_soliton_shoot(int n, double c_target, double shoot_tol, double t0,
                           double T, double tol, wg_soliton** out);

void wg_soliton_free(wg_soliton* sol);

wg_status wg_soliton_s0(const wg_soliton* sol, double* out);

/* 0 = completed, 1 = slope exceeded 1 + tol, 2 = collapsed (b -> 0). */
wg_status wg_soliton_outcome(const wg_soliton* sol, int* out);

wg_status wg_soliton_drift(const wg_soliton* sol, double* out);
wg_status wg_soliton_residual(const wg_soliton* sol, double* out);
wg_status wg_soliton_points(const wg_soliton* sol, size_t* out);
wg_status wg_soliton_sample(const wg_soliton* sol, size_t index, double* t,
                            double* b, double* b_prime, double* f, double* f_prime);

/* Tail diagnostics: ascr = max of t^2 scal over [T/2, T]; potential_ratio =
 * f(T)/T^2; exp_rate/exp_rate_r2 only meaningful when *has_exp_rate is 1
 * (n = 2); settled reports |b'(T) - b'(T/2)| < 1e-6. */
wg_status wg_soliton_decay(const wg_soliton* sol, double* ascr,
                           double* potential_ratio, double* exp_rate,
                           double* exp_rate_r2, int* has_exp_rate, int* settled);

/* JSON run summary (parameters, diagnostics, decay metrics). */
wg_status wg_soliton_json(const wg_soliton* sol, char* buf, size_t* len);

/* CSV t,b,b_prime,f,f_prime,scal,sec_rad,sec_sph, at most max_rows rows. */
wg_status wg_trajectory_csv(const wg_soliton* sol, int max_rows, char* buf,
                            size_t* len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WARPGEOM_H */
