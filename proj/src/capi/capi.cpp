// C ABI over the core library: opaque handles, status codes, thread-local
// error text, and a size-query protocol for string artifacts.
#include "warpgeom/warpgeom.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/certify.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/io.hpp"
#include "core/metric.hpp"
#include "core/soliton.hpp"

using namespace warpgeom;

struct wg_metric {
    WarpedSphereMetric metric;
};

struct wg_certificate {
    Certificate cert;
};

struct wg_soliton {
    SolitonSolution sol;
    SolitonRunInfo info;
    DecayMetrics decay;
    bool decay_cached = false;
};

namespace {

thread_local std::string g_last_error;

wg_status fail(wg_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename F>
wg_status guarded(F&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(WG_ERR_INVALID_ARG, e.what());
    } catch (const EvalError& e) {
        return fail(WG_ERR_DOMAIN, e.what());
    } catch (const NoConvergence& e) {
        return fail(WG_ERR_NO_CONVERGENCE, e.what());
    } catch (const IoError& e) {
        return fail(WG_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WG_ERR_INTERNAL, e.what());
    }
}

wg_status copy_string(const std::string& s, char* buf, size_t* len) {
    if (!len) return fail(WG_ERR_INVALID_ARG, "length pointer is NULL");
    const size_t needed = s.size() + 1;
    if (!buf) {
        *len = needed;
        return WG_OK;
    }
    if (*len < needed) {
        *len = needed;
        return fail(WG_ERR_BUFFER_TOO_SMALL, "buffer too small for artifact");
    }
    std::memcpy(buf, s.c_str(), needed);
    *len = needed;
    return WG_OK;
}

wg_status make_metric(FamilyParams params, wg_metric** out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "output pointer is NULL");
    return guarded([&] {
        *out = new wg_metric{make_family_metric(params)};
        return WG_OK;
    });
}

const DecayMetrics& cached_decay(wg_soliton* sol) {
    if (!sol->decay_cached) {
        sol->decay = decay_metrics(sol->sol);
        sol->decay_cached = true;
    }
    return sol->decay;
}

} // namespace

extern "C" {

const char* wg_version(void) { return "1.0.0"; }

const char* wg_last_error(void) { return g_last_error.c_str(); }

wg_status wg_metric_round(double k, int m, wg_metric** out) {
    return make_metric({FamilyId::round, k, 0.0, 0.0, m}, out);
}

wg_status wg_metric_blend(double k, double delta, double eps, int m, wg_metric** out) {
    return make_metric({FamilyId::blend, k, delta, eps, m}, out);
}

wg_status wg_metric_blend_limit(double k, double eps, int m, wg_metric** out) {
    return make_metric({FamilyId::blend_limit, k, 0.0, eps, m}, out);
}

wg_status wg_metric_cone_point(double k, double delta, int m, wg_metric** out) {
    return make_metric({FamilyId::cone_point, k, delta, 0.0, m}, out);
}

wg_status wg_metric_cone_point_scaled(double k, double delta, int m, wg_metric** out) {
    return make_metric({FamilyId::cone_point_scaled, k, delta, 0.0, m}, out);
}

wg_status wg_metric_cone_point_limit(double k, int m, wg_metric** out) {
    return make_metric({FamilyId::cone_point_limit, k, 0.0, 0.0, m}, out);
}

wg_status wg_metric_scale(const wg_metric* metric, double c, wg_metric** out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    if (!(c > 0.0)) return fail(WG_ERR_INVALID_ARG, "scale factor must be > 0");
    return guarded([&] {
        *out = new wg_metric{metric->metric.scaled(c)};
        return WG_OK;
    });
}

void wg_metric_free(wg_metric* metric) { delete metric; }

wg_status wg_metric_length(const wg_metric* metric, double* out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = metric->metric.length();
    return WG_OK;
}

wg_status wg_metric_dim(const wg_metric* metric, int* out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = metric->metric.dim();
    return WG_OK;
}

wg_status wg_profile_eval(const wg_metric* metric, double r, int order, double* out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = metric->metric.profile().eval(r, order);
        return WG_OK;
    });
}

wg_status wg_curvature(const wg_metric* metric, double r, double* sec_rad,
                       double* sec_sph, int* has_sph) {
    if (!metric || !sec_rad) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const SphereCurvature c = metric->metric.curvature(r);
        *sec_rad = c.sec_rad;
        if (sec_sph) *sec_sph = c.has_sph ? c.sec_sph : 0.0;
        if (has_sph) *has_sph = c.has_sph ? 1 : 0;
        return WG_OK;
    });
}

wg_status wg_smoothness_pass(const wg_metric* metric, int* out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = metric->metric.smoothness_check().pass ? 1 : 0;
        return WG_OK;
    });
}

wg_status wg_metric_json(const wg_metric* metric, char* buf, size_t* len) {
    if (!metric) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] { return copy_string(metric_json(metric->metric), buf, len); });
}

wg_status wg_profile_csv(const wg_metric* metric, int samples, char* buf, size_t* len) {
    if (!metric) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded(
        [&] { return copy_string(profile_csv(metric->metric, samples), buf, len); });
}

wg_status wg_curvature_csv(const wg_metric* metric, int samples, char* buf,
                           size_t* len) {
    if (!metric) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded(
        [&] { return copy_string(curvature_csv(metric->metric, samples), buf, len); });
}

wg_status wg_cone_eigen_range(const wg_metric* link, double r, double s,
                              double* lambda_min, double* lambda_max) {
    if (!link || !lambda_min || !lambda_max)
        return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const ConeMetric cone(link->metric);
        const CurvatureSpectrum spec = cone.spectrum(r, s);
        *lambda_min = spec.min();
        *lambda_max = spec.max();
        return WG_OK;
    });
}

wg_status wg_cone_scal(const wg_metric* link, double r, double s, double* out) {
    if (!link || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = ConeMetric(link->metric).scal(r, s);
        return WG_OK;
    });
}

wg_status wg_cone_scan_csv(const wg_metric* link, double s_min, double s_max,
                           int count, char* buf, size_t* len) {
    if (!link) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const ConeMetric cone(link->metric);
        return copy_string(cone_scan_csv(cone_ratio_scan(cone, s_min, s_max, count)),
                           buf, len);
    });
}

wg_status wg_cone_scan_max(const wg_metric* link, double s_min, double s_max,
                           int count, double* max_r2_lambda, double* max_r2_scal) {
    if (!link || !max_r2_lambda || !max_r2_scal)
        return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const ConeMetric cone(link->metric);
        double lam = 0.0, sc = 0.0;
        bool first = true;
        for (const ConeScanRow& row : cone_ratio_scan(cone, s_min, s_max, count)) {
            if (first || row.r2_lambda_max > lam) lam = row.r2_lambda_max;
            if (first || row.r2_scal > sc) sc = row.r2_scal;
            first = false;
        }
        *max_r2_lambda = lam;
        *max_r2_scal = sc;
        return WG_OK;
    });
}

wg_status wg_certify(const wg_metric* metric, double bound, double lo, double hi,
                     int grid, double tol, wg_certificate** out) {
    if (!metric || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = new wg_certificate{
            certify_rm_lower(metric->metric, bound, {lo, hi}, grid, tol)};
        return WG_OK;
    });
}

void wg_certificate_free(wg_certificate* cert) { delete cert; }

wg_status wg_certificate_pass(const wg_certificate* cert, int* out) {
    if (!cert || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = cert->cert.pass ? 1 : 0;
    return WG_OK;
}

wg_status wg_certificate_margin(const wg_certificate* cert, double* min_margin,
                                double* argmin) {
    if (!cert || !min_margin) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *min_margin = cert->cert.min_margin;
    if (argmin) *argmin = cert->cert.argmin;
    return WG_OK;
}

wg_status wg_certificate_points(const wg_certificate* cert, int* out) {
    if (!cert || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = cert->cert.grid_points;
    return WG_OK;
}

wg_status wg_certificate_json(const wg_certificate* cert, char* buf, size_t* len) {
    if (!cert) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] { return copy_string(certificate_json(cert->cert), buf, len); });
}

wg_status wg_find_eps_max(double k, int grid, double tol, double* out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = find_eps_max(k, grid, tol);
        return WG_OK;
    });
}

wg_status wg_find_eps_plateau(double k, double sigma, int grid, double tol,
                              double* out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = find_eps_plateau(k, sigma, grid, tol);
        return WG_OK;
    });
}

wg_status wg_find_delta_max(double k, double sigma, double eps, int grid,
                            double tol, double* out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = find_delta_max(k, sigma, eps, grid, tol);
        return WG_OK;
    });
}

wg_status wg_blowup_rate(const wg_metric* metric, double r_min, double r_max,
                         int samples, double* exponent, double* coefficient,
                         double* offset, int* degenerate) {
    if (!metric || !exponent || !coefficient)
        return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const PowerFit fit = blowup_rate(metric->metric, r_min, r_max, samples);
        *exponent = fit.exponent;
        *coefficient = fit.coefficient;
        if (offset) *offset = fit.offset;
        if (degenerate) *degenerate = fit.degenerate ? 1 : 0;
        return WG_OK;
    });
}

wg_status wg_sup_distance(const wg_metric* m1, const wg_metric* m2, int grid,
                          int allow_reparam, double* out) {
    if (!m1 || !m2 || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        *out = sup_distance(m1->metric.profile(), m2->metric.profile(), grid,
                            allow_reparam != 0);
        return WG_OK;
    });
}

wg_status wg_soliton_integrate(int n, double s0, double t0, double T, double tol,
                               wg_soliton** out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        auto* handle = new wg_soliton{integrate(n, s0, T, tol, t0), {}, {}, false};
        *out = handle;
        return WG_OK;
    });
}

wg_status wg_soliton_shoot(int n, double c_target, double shoot_tol, double t0,
                           double T, double tol, wg_soliton** out) {
    if (!out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        ShootResult result = shoot(n, c_target, shoot_tol, T, tol, t0);
        auto* handle = new wg_soliton{std::move(result.solution),
                                      {true, c_target, result.iterations},
                                      {},
                                      false};
        *out = handle;
        return WG_OK;
    });
}

void wg_soliton_free(wg_soliton* sol) { delete sol; }

wg_status wg_soliton_s0(const wg_soliton* sol, double* out) {
    if (!sol || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = sol->sol.s0;
    return WG_OK;
}

wg_status wg_soliton_outcome(const wg_soliton* sol, int* out) {
    if (!sol || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = static_cast<int>(sol->sol.outcome);
    return WG_OK;
}

wg_status wg_soliton_drift(const wg_soliton* sol, double* out) {
    if (!sol || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = sol->sol.identity_drift;
    return WG_OK;
}

wg_status wg_soliton_residual(const wg_soliton* sol, double* out) {
    if (!sol || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = sol->sol.residual_max;
    return WG_OK;
}

wg_status wg_soliton_points(const wg_soliton* sol, size_t* out) {
    if (!sol || !out) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    *out = sol->sol.t.size();
    return WG_OK;
}

wg_status wg_soliton_sample(const wg_soliton* sol, size_t index, double* t,
                            double* b, double* b_prime, double* f, double* f_prime) {
    if (!sol) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    if (index >= sol->sol.t.size())
        return fail(WG_ERR_INVALID_ARG, "sample index out of range");
    if (t) *t = sol->sol.t[index];
    if (b) *b = sol->sol.b[index];
    if (b_prime) *b_prime = sol->sol.b_prime[index];
    if (f) *f = sol->sol.f[index];
    if (f_prime) *f_prime = sol->sol.f_prime[index];
    return WG_OK;
}

wg_status wg_soliton_decay(const wg_soliton* sol, double* ascr,
                           double* potential_ratio, double* exp_rate,
                           double* exp_rate_r2, int* has_exp_rate, int* settled) {
    if (!sol) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        const DecayMetrics& d = cached_decay(const_cast<wg_soliton*>(sol));
        if (ascr) *ascr = d.ascr;
        if (potential_ratio) *potential_ratio = d.potential_ratio;
        if (exp_rate) *exp_rate = d.exp_rate;
        if (exp_rate_r2) *exp_rate_r2 = d.exp_rate_r2;
        if (has_exp_rate) *has_exp_rate = d.has_exp_rate ? 1 : 0;
        if (settled) *settled = d.settled ? 1 : 0;
        return WG_OK;
    });
}

wg_status wg_soliton_json(const wg_soliton* sol, char* buf, size_t* len) {
    if (!sol) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded([&] {
        DecayMetrics decay;
        try {
            decay = cached_decay(const_cast<wg_soliton*>(sol));
        } catch (const std::exception&) {
            // Short (blown-up) trajectories carry default decay metrics; the
            // outcome field already reports the early stop.
        }
        return copy_string(soliton_json(sol->sol, decay, sol->info), buf, len);
    });
}

wg_status wg_trajectory_csv(const wg_soliton* sol, int max_rows, char* buf,
                            size_t* len) {
    if (!sol) return fail(WG_ERR_INVALID_ARG, "NULL argument");
    return guarded(
        [&] { return copy_string(trajectory_csv(sol->sol, max_rows), buf, len); });
}

} // extern "C"
