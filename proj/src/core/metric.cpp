#include "core/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/special.hpp"

namespace warpgeom {

double CurvatureSpectrum::min() const {
    double v = std::numeric_limits<double>::quiet_NaN();
    for (const SpectrumBand& b : bands) v = std::isnan(v) ? b.value : std::min(v, b.value);
    return v;
}

double CurvatureSpectrum::max() const {
    double v = std::numeric_limits<double>::quiet_NaN();
    for (const SpectrumBand& b : bands) v = std::isnan(v) ? b.value : std::max(v, b.value);
    return v;
}

double CurvatureSpectrum::scal() const {
    double s = 0.0;
    for (const SpectrumBand& b : bands) s += b.value * b.multiplicity;
    return 2.0 * s;
}

namespace {

constexpr double kBandFraction = 1e-3;

Jet reflect_jet(Jet j) {
    for (int k = 1; k <= Jet::order; k += 2)
        j.d[static_cast<size_t>(k)] = -j.d[static_cast<size_t>(k)];
    return j;
}

// Curvature from endpoint Taylor data p (profile jet at the endpoint, already
// reflected for the far end) at distance u from the endpoint. A and A'' are
// Horner polynomials in u; the numerator 1 - A'^2 is expanded exactly in the
// Taylor coefficients so that the cancellation against 1 happens analytically
// (a1^2 = 1 at a closed end) instead of between two O(1) floats.
SphereCurvature band_curvature(const Jet& p, double u, int m, double len) {
    double a[6] = {p.d[0],      p.d[1],      p.d[2] / 2.0,
                   p.d[3] / 6.0, p.d[4] / 24.0, p.d[5] / 120.0};
    // The profile vanishes at a closed end and smooth families also have
    // vanishing even derivatives there, but the evaluated jet only carries
    // those zeros to within roundoff (sin(pi) != 0). Coefficients that are
    // pure noise on the length scale would otherwise dominate the curvature
    // as u -> 0 (a 1e-16 constant term costs 1e-6 at u ~ 1e-13), so drop
    // anything far below the jet's own magnitude.
    double scale = 0.0, pw = 1.0;
    for (int j = 0; j < 6; ++j, pw *= len) scale = std::max(scale, std::abs(a[j]) * pw);
    pw = 1.0;
    for (int j = 0; j < 6; ++j, pw *= len)
        if (std::abs(a[j]) * pw < 1e-13 * scale) a[j] = 0.0;
    const double a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4], a5 = a[5];
    const double A = a0 + u * (a1 + u * (a2 + u * (a3 + u * (a4 + u * a5))));
    const double App = 2 * a2 + u * (6 * a3 + u * (12 * a4 + u * (20 * a5)));
    SphereCurvature c;
    c.sec_rad = -App / A;
    if (m >= 3) {
        const double b[5] = {a1, 2 * a2, 3 * a3, 4 * a4, 5 * a5};
        double q[9] = {};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) q[i + j] += b[i] * b[j];
        double num = 1.0 - q[0];
        double pw = u;
        for (int j = 1; j <= 8; ++j) {
            num -= q[j] * pw;
            pw *= u;
        }
        c.sec_sph = num / (A * A);
        c.has_sph = true;
    }
    return c;
}

}  // namespace

WarpedSphereMetric::WarpedSphereMetric(WarpProfile profile, int m)
    : profile_(std::move(profile)), m_(m) {
    if (m < 2) throw std::invalid_argument("warped sphere metric: m must be >= 2");
}

SphereCurvature WarpedSphereMetric::curvature(double r) const {
    const double len = profile_.length();
    if (!(r > 0.0) || !(r < len)) throw EvalError("curvature: r must be in (0, length)");
    const double band = kBandFraction * len;
    const double from_right = len - r;
    if (r <= std::min(band, profile_.branch_radius_left()))
        return band_curvature(profile_.jet(0.0), r, m_, len);
    if (from_right <= std::min(band, profile_.branch_radius_right()))
        return band_curvature(reflect_jet(profile_.jet(len)), from_right, m_, len);
    const Jet j = profile_.jet(r);
    SphereCurvature c;
    c.sec_rad = -j.d[2] / j.d[0];
    if (m_ >= 3) {
        c.sec_sph = (1.0 - j.d[1] * j.d[1]) / (j.d[0] * j.d[0]);
        c.has_sph = true;
    }
    return c;
}

CurvatureSpectrum WarpedSphereMetric::spectrum(double r) const {
    const SphereCurvature c = curvature(r);
    CurvatureSpectrum s;
    s.bands.push_back({c.sec_rad, m_ - 1});
    if (c.has_sph) s.bands.push_back({c.sec_sph, (m_ - 1) * (m_ - 2) / 2});
    return s;
}

WarpedSphereMetric WarpedSphereMetric::scaled(double c) const {
    return WarpedSphereMetric(make_scaled_profile(profile_, c), m_);
}

SmoothnessReport WarpedSphereMetric::smoothness_check() const {
    const double len = profile_.length();
    const auto f = [this](double x) { return profile_.eval(x, 0); };

    SmoothnessReport rep;
    {
        SmoothnessEntry e;
        e.order = 0;
        e.at_zero = f(0.0);
        e.at_length = f(len);
        e.expected_zero = 0.0;
        e.expected_length = 0.0;
        e.tolerance = 1e-12;
        e.checked = true;
        rep.entries.push_back(e);
    }
    // One-sided 5-point stencils on order-0 evaluations. Step sizes trade the
    // O(h^(5-order)) truncation against eps/h^order roundoff. The raw order-4
    // stencil is only O(h) accurate and its error grows like the cube of the
    // profile frequency, so that order gets a Richardson pass (2 D(h/2) -
    // D(h)) to cancel the leading term.
    struct OrderSpec {
        int order;
        double step_frac;
        double expected_zero;
        double expected_length;
        double tol;
        bool checked;
        bool richardson;
    };
    const OrderSpec specs[] = {
        {1, 1e-4, 1.0, -1.0, 1e-7, true, false},
        {2, 1e-4, 0.0, 0.0, 1e-5, true, false},
        {3, 1e-3, 0.0, 0.0, 0.0, false, false},
        {4, 2e-3, 0.0, 0.0, 1e-1, true, true},
    };
    for (const OrderSpec& s : specs) {
        SmoothnessEntry e;
        e.order = s.order;
        const double h = s.step_frac * len;
        auto estimate = [&](double x, int side) {
            const double d = fd_one_sided(f, x, h, s.order, side);
            if (!s.richardson) return d;
            return 2.0 * fd_one_sided(f, x, h / 2.0, s.order, side) - d;
        };
        e.at_zero = estimate(0.0, +1);
        e.at_length = estimate(len, -1);
        e.expected_zero = s.expected_zero;
        e.expected_length = s.expected_length;
        e.tolerance = s.tol;
        e.checked = s.checked;
        rep.entries.push_back(e);
    }
    for (SmoothnessEntry& e : rep.entries) {
        if (e.checked)
            e.pass = std::abs(e.at_zero - e.expected_zero) <= e.tolerance &&
                     std::abs(e.at_length - e.expected_length) <= e.tolerance;
        rep.pass = rep.pass && e.pass;
    }
    return rep;
}

ConeMetric::ConeMetric(WarpedSphereMetric link) : link_(std::move(link)) {}

CurvatureSpectrum ConeMetric::spectrum(double r, double s) const {
    if (!(r > 0.0)) throw EvalError("cone spectrum: r must be > 0");
    const CurvatureSpectrum link_spec = link_.spectrum(s);
    CurvatureSpectrum out;
    out.bands.push_back({0.0, dim() - 1});
    for (const SpectrumBand& b : link_spec.bands)
        out.bands.push_back({(b.value - 1.0) / (r * r), b.multiplicity});
    return out;
}

double ConeMetric::scal(double r, double s) const { return spectrum(r, s).scal(); }

}  // namespace warpgeom
