#include "core/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace warpgeom {

Jet tapered_sine_jet(double taper, double freq, double r, double amp) {
    const Jet lin = Jet::constant(1.0) - taper * Jet::variable(r);
    const Jet s = jet_sin(freq, r);
    Jet j = lin * s;
    j *= amp / freq;
    return j;
}

double tapered_sine(double taper, double freq, double r, int order) {
    if (order < 0 || order > 3) throw std::invalid_argument("tapered_sine: order must be in [0, 3]");
    if (taper < 0.0) throw std::invalid_argument("tapered_sine: taper must be >= 0");
    if (freq < 1.0) throw std::invalid_argument("tapered_sine: freq must be >= 1");
    return tapered_sine_jet(taper, freq, r).deriv(order);
}

Jet tapered_sine_prime_jet(double taper, double freq, double r) {
    const Jet c = jet_cos(freq, r);
    if (taper == 0.0) return c;
    const Jet s = jet_sin(freq, r);
    return c - taper * (Jet::variable(r) * c + s / freq);
}

namespace {

// exp(-1/s) as a jet in x where s = s(x) is an affine jet. Returns the zero
// jet once s is small enough that the value underflows; this also guards the
// 1/s^k factors from overflowing into inf * 0.
Jet bump_side(const Jet& s) {
    if (s.value() <= 1e-8) return Jet{};
    return jet_exp(-1.0 / s);
}

}  // namespace

Jet cutoff_unit_jet(double x) {
    if (x <= 1.0) return Jet::constant(1.0);
    if (x >= 2.0) return Jet{};
    const Jet xv = Jet::variable(x);
    const Jet u = bump_side(2.0 - xv);   // -> 1 side
    const Jet v = bump_side(xv - 1.0);   // -> 0 side
    return u / (u + v);
}

Jet cutoff_jet(double lambda, double r) {
    return jet_compose_affine(cutoff_unit_jet(r / lambda), 1.0 / lambda);
}

double cutoff(double lambda, double r, int order) {
    if (order < 0 || order > 2) throw std::invalid_argument("cutoff: order must be in [0, 2]");
    if (!(lambda > 0.0)) throw std::invalid_argument("cutoff: lambda must be > 0");
    return cutoff_jet(lambda, r).deriv(order);
}

double max_valid_taper(double k) {
    // The derivative condition binds at the right end of (0, pi/(4k)), where
    // cos(kr) - taper * (r cos(kr) + sin(kr)/k) crosses zero first:
    // taper_max = k * cos(pi/4) / ((pi/4) cos(pi/4) + sin(pi/4)) = 4k/(4+pi).
    return 4.0 * k / (4.0 + std::numbers::pi);
}

double fd_central(const std::function<double(double)>& f, double x, double h, int order) {
    const double f_2 = f(x - 2 * h), f_1 = f(x - h), f0 = f(x), f1 = f(x + h), f2 = f(x + 2 * h);
    switch (order) {
        case 1: return (f_2 - 8 * f_1 + 8 * f1 - f2) / (12 * h);
        case 2: return (-f_2 + 16 * f_1 - 30 * f0 + 16 * f1 - f2) / (12 * h * h);
        case 3: return (-f_2 + 2 * f_1 - 2 * f1 + f2) / (2 * h * h * h);
        default: throw std::invalid_argument("fd_central: order must be in [1, 3]");
    }
}

double fd_one_sided(const std::function<double(double)>& f, double x, double h, int order,
                    int side) {
    if (side != 1 && side != -1) throw std::invalid_argument("fd_one_sided: side must be +-1");
    const double s = side * h;
    const double f0 = f(x), f1 = f(x + s), f2 = f(x + 2 * s), f3 = f(x + 3 * s), f4 = f(x + 4 * s);
    switch (order) {
        case 1: return side * (-25 * f0 + 48 * f1 - 36 * f2 + 16 * f3 - 3 * f4) / (12 * h);
        case 2: return (35 * f0 - 104 * f1 + 114 * f2 - 56 * f3 + 11 * f4) / (12 * h * h);
        case 3: return side * (-5 * f0 + 18 * f1 - 24 * f2 + 14 * f3 - 3 * f4) / (2 * h * h * h);
        case 4: return (f0 - 4 * f1 + 6 * f2 - 4 * f3 + f4) / (h * h * h * h);
        default: throw std::invalid_argument("fd_one_sided: order must be in [1, 4]");
    }
}

}  // namespace warpgeom
