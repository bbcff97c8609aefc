#include "core/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/special.hpp"

namespace warpgeom {

namespace {

constexpr double kPi = std::numbers::pi;

// Grid policy: proportional share of the requested budget per seam-cut
// sub-interval, never fewer than kMinPerRegion or 64 per unit length.
constexpr int kMinPerRegion = 33;
constexpr double kUnitFloor = 64.0;
constexpr int kLadderDepth = 36;
constexpr const char* kCutoffTag = "exp-ratio-bump";

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

Certificate certify_rm_lower(const WarpedSphereMetric& metric, double bound,
                             Interval region, int grid, double tol) {
    const double L = metric.length();
    require(grid >= 2, "certify: grid must be >= 2");
    require(tol >= 0.0, "certify: tol must be >= 0");
    require(region.lo >= 0.0 && region.hi <= L * (1.0 + 1e-12) && region.lo < region.hi,
            "certify: region must satisfy 0 <= lo < hi <= length");
    region.hi = std::min(region.hi, L);

    Certificate cert;
    cert.region = region;
    cert.bound = bound;
    cert.tolerance = tol;
    cert.profile = metric.profile().descriptor();
    cert.m = metric.dim();
    cert.cutoff_tag = kCutoffTag;

    // Split the region along profile seams.
    const double gap = 1e-12 * (1.0 + L);
    std::vector<double> splits{region.lo};
    for (double s : metric.profile().seams())
        if (s > region.lo + gap && s < region.hi - gap) splits.push_back(s);
    splits.push_back(region.hi);
    std::sort(splits.begin(), splits.end());

    std::vector<double> samples;
    const double width_total = region.hi - region.lo;
    for (size_t i = 0; i + 1 < splits.size(); ++i) {
        const double x0 = splits[i], x1 = splits[i + 1];
        const double w = x1 - x0;
        int n = static_cast<int>(std::llround(grid * w / width_total));
        n = std::max({n, kMinPerRegion, static_cast<int>(std::ceil(kUnitFloor * w))});
        const double mid = 0.5 * (x0 + x1), half = 0.5 * w;
        for (int j = 0; j < n; ++j)
            samples.push_back(mid + half * std::cos(kPi * (2 * j + 1) / (2.0 * n)));
        // Seams and closed region endpoints are sampled exactly.
        if (x0 > gap) samples.push_back(x0);
    }
    if (region.hi < L - gap) samples.push_back(region.hi);

    // Open endpoints at the poles: probe by a dyadic ladder instead.
    if (region.lo <= gap) {
        double r = std::min(1e-3 * L, 0.25 * width_total);
        for (int j = 0; j < kLadderDepth; ++j, r *= 0.5) samples.push_back(r);
    }
    if (region.hi >= L - gap) {
        double r = std::min(1e-3 * L, 0.25 * width_total);
        for (int j = 0; j < kLadderDepth; ++j, r *= 0.5) samples.push_back(L - r);
    }

    double min_margin = std::numeric_limits<double>::infinity();
    double argmin = region.lo;
    int evaluated = 0;
    for (double r : samples) {
        double lambda1;
        try {
            lambda1 = metric.spectrum(r).min();
        } catch (const std::exception& e) {
            cert.grid_points = evaluated;
            cert.min_margin = std::numeric_limits<double>::quiet_NaN();
            cert.argmin = r;
            cert.pass = false;
            cert.note = e.what();
            return cert;
        }
        ++evaluated;
        const double margin = lambda1 - bound;
        if (margin < min_margin) {
            min_margin = margin;
            argmin = r;
        }
    }

    cert.grid_points = evaluated;
    cert.min_margin = min_margin;
    cert.argmin = argmin;
    cert.pass = min_margin >= -tol;
    return cert;
}

double find_eps_max(double k, int grid, double tol) {
    require(k > 1.0, "find_eps_max: k must be > 1");
    require(grid >= 2, "find_eps_max: grid must be >= 2");
    require(tol > 0.0, "find_eps_max: tol must be > 0");

    const double arc = kPi / (4.0 * k);
    auto monotone_concave = [&](double eps) {
        for (int i = 1; i <= grid; ++i) {
            const double r = arc * i / (grid + 1.0);
            const Jet d = tapered_sine_prime_jet(eps, k, r);
            if (!(d.value() > 0.0) || !(d.deriv(1) < 0.0)) return false;
        }
        return true;
    };

    if (!monotone_concave(0.0))
        throw NoConvergence("find_eps_max: zero taper rejected (internal error)");
    double lo = 0.0, hi = 4.0 * k / kPi;
    int expand = 0;
    while (monotone_concave(hi)) {
        lo = hi;
        hi *= 2.0;
        if (++expand > 4) throw NoConvergence("find_eps_max: no failing taper found");
    }
    while (hi - lo > tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (monotone_concave(mid) ? lo : hi) = mid;
    }
    return lo;
}

double find_eps_plateau(double k, double sigma, int grid, double tol) {
    require(k > 1.0, "find_eps_plateau: k must be > 1");
    require(sigma > 0.0, "find_eps_plateau: sigma must be > 0");
    require(grid >= 2, "find_eps_plateau: grid must be >= 2");
    require(tol > 0.0, "find_eps_plateau: tol must be > 0");

    const double bound = k * k / (1.0 + sigma);
    const Interval steep{0.0, kPi / (4.0 * k)};
    auto plateau_holds = [&](double eps) {
        WarpedSphereMetric metric(make_blend_limit_profile(k, eps), 3);
        return certify_rm_lower(metric, bound, steep, grid, 0.0).pass;
    };

    if (!plateau_holds(0.0))
        throw NoConvergence("find_eps_plateau: zero taper rejected (internal error)");
    const double eps_cap = 0.999 * max_valid_taper(k);
    double lo = 0.0, hi = std::min(0.01 * k, 0.5 * eps_cap);
    while (plateau_holds(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi >= eps_cap) return lo;
    }
    while (hi - lo > tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (plateau_holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

double find_delta_max(double k, double sigma, double eps, int grid, double tol) {
    require(k > 1.0, "find_delta_max: k must be > 1");
    require(sigma > 0.0, "find_delta_max: sigma must be > 0");
    require(eps >= 0.0 && eps < 4.0 * k / (4.0 + kPi),
            "find_delta_max: eps must lie in [0, 4k/(4+pi))");
    require(grid >= 2, "find_delta_max: grid must be >= 2");
    require(tol > 0.0, "find_delta_max: tol must be > 0");

    const double arc = kPi / (4.0 * k);
    const double cap = kPi / (8.0 * k);
    // Floating guard only; the compared inequalities are non-strict.
    const double slack = 1e-9;

    auto envelope_holds = [&](double delta) {
        const WarpProfile gamma = make_transition_profile(k, delta, eps);
        const double collar = 2.0 * delta;
        const int n1 = std::max<int>(65, std::llround(grid * collar / arc));
        for (int i = 0; i < n1; ++i) {
            const double r = collar * i / (n1 - 1.0);
            const double g = gamma.eval(r);
            if (g > std::sin(r) + slack) return false;
            if (g < tapered_sine(eps, k, r, 0) - slack) return false;
        }
        const int n2 = std::max<int>(65, std::llround(grid * (arc - collar) / arc));
        for (int i = 0; i < n2; ++i) {
            const double r = collar + (arc - collar) * i / (n2 - 1.0);
            const double g = gamma.eval(r);
            if (g < tapered_sine(eps, k, r, 0) - slack) return false;
            if (g > (1.0 + sigma) * tapered_sine(0.0, k, r, 0) + slack) return false;
        }
        return true;
    };

    if (envelope_holds(cap)) return cap;
    double lo = 0.0, hi = cap;
    while (hi - lo > tol * cap) {
        const double mid = 0.5 * (lo + hi);
        (envelope_holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

PowerFit blowup_rate(const WarpedSphereMetric& metric, double r_min, double r_max,
                     int samples) {
    const double L = metric.length();
    require(r_min > 0.0 && r_min < r_max && r_max < L,
            "blowup_rate: need 0 < r_min < r_max < length");
    require(samples >= 8, "blowup_rate: need at least 8 samples");

    std::vector<double> rs(samples), ys(samples);
    const double ratio = r_max / r_min;
    double y_lo = std::numeric_limits<double>::infinity(), y_hi = 0.0, y_sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        rs[i] = r_min * std::pow(ratio, i / (samples - 1.0));
        ys[i] = metric.spectrum(rs[i]).min();
        y_lo = std::min(y_lo, ys[i]);
        y_hi = std::max(y_hi, ys[i]);
        y_sum += ys[i];
    }

    PowerFit fit;
    if (!(y_lo > 0.0) || y_hi < 10.0 * y_lo) {
        // Bounded curvature: no identifiable growth over the window.
        fit.degenerate = true;
        fit.offset = y_sum / samples;
        double ss = 0.0;
        for (double y : ys) {
            const double rel = (y - fit.offset) / std::max(std::abs(fit.offset), 1e-300);
            ss += rel * rel;
        }
        fit.rms_residual = std::sqrt(ss / samples);
        return fit;
    }

    // Relative least squares of y against C * r^-e + D, linear in (C, D).
    auto solve_at = [&](double e, double* C_out, double* D_out) {
        double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
        for (int i = 0; i < samples; ++i) {
            const double w = 1.0 / (ys[i] * ys[i]);
            const double p = std::pow(rs[i], -e);
            s11 += w * p * p;
            s12 += w * p;
            s22 += w;
            b1 += w * p * ys[i];
            b2 += w * ys[i];
        }
        const double det = s11 * s22 - s12 * s12;
        const double C = (b1 * s22 - b2 * s12) / det;
        const double D = (s11 * b2 - s12 * b1) / det;
        double ss = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double res = (ys[i] - C * std::pow(rs[i], -e) - D) / ys[i];
            ss += res * res;
        }
        if (C_out) *C_out = C;
        if (D_out) *D_out = D;
        return ss;
    };

    // Golden-section search for the exponent.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.05, b = 4.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = solve_at(x1, nullptr, nullptr), f2 = solve_at(x2, nullptr, nullptr);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = solve_at(x1, nullptr, nullptr);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = solve_at(x2, nullptr, nullptr);
        }
    }
    fit.exponent = 0.5 * (a + b);
    const double ss = solve_at(fit.exponent, &fit.coefficient, &fit.offset);
    fit.rms_residual = std::sqrt(ss / samples);
    return fit;
}

std::vector<ConeScanRow> cone_ratio_scan(const ConeMetric& cone, double s_min,
                                         double s_max, int count) {
    const double L = cone.link().length();
    require(s_min > 0.0 && s_min < s_max && s_max < L,
            "cone_ratio_scan: need 0 < s_min < s_max < link length");
    require(count >= 2, "cone_ratio_scan: need at least 2 rows");

    std::vector<ConeScanRow> rows(count);
    const double ratio = s_max / s_min;
    for (int i = 0; i < count; ++i) {
        const double s = s_min * std::pow(ratio, i / (count - 1.0));
        const CurvatureSpectrum spec = cone.spectrum(1.0, s);
        rows[i] = {s, spec.max(), spec.scal()};
    }
    return rows;
}

double sup_distance(const WarpProfile& p1, const WarpProfile& p2, int grid,
                    bool allow_reparam) {
    require(grid >= 2, "sup_distance: grid must be >= 2");
    const double L1 = p1.length(), L2 = p2.length();
    if (!allow_reparam) {
        if (std::abs(L1 - L2) > 1e-9 * std::max(L1, L2))
            throw std::invalid_argument(
                "sup_distance: domains differ; enable reparameterization");
    }
    const double stretch = L2 / L1;
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double r = L1 * i / (grid - 1.0);
        best = std::max(best, std::abs(p1.eval(r) - p2.eval(r * stretch)));
    }
    return best;
}

} // namespace warpgeom
