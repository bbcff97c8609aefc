// Building-block warp functions: the tapered sine (1 - taper*r) sin(freq*r)/freq
// and a C-infinity plateau cutoff, both evaluated as derivative jets, plus the
// finite-difference stencils used by consistency checks and smoothness reports.
#pragma once

#include <functional>

#include "core/jet.hpp"

namespace warpgeom {

// (1 - taper*r) * sin(freq*r) / freq, the basic warp building block.
// Scale-free amplitude factor amp is applied last.
Jet tapered_sine_jet(double taper, double freq, double r, double amp = 1.0);

// Validated scalar evaluation, order in [0, 3]; rejects taper < 0, freq < 1.
double tapered_sine(double taper, double freq, double r, int order);

// Jet of the first derivative of the tapered sine,
// cos(freq*r) - taper*(r*cos(freq*r) + sin(freq*r)/freq). Exact through
// order 5 (one more derivative than shifting tapered_sine_jet would give).
Jet tapered_sine_prime_jet(double taper, double freq, double r);

// Cutoff profile phi on the unscaled variable x: 1 for x <= 1, 0 for x >= 2,
// exp-ratio bump in between. Smooth, non-increasing.
Jet cutoff_unit_jet(double x);

// phi_lambda(r) = phi(r / lambda) as a jet in r.
Jet cutoff_jet(double lambda, double r);

// Validated scalar evaluation, order in [0, 2]; rejects lambda <= 0.
double cutoff(double lambda, double r, int order);

// Largest taper for which the tapered sine of frequency k is strictly
// increasing with strictly negative second derivative on (0, pi/(4k)),
// in closed form (the grid search in certify.hpp approximates this).
double max_valid_taper(double k);

// Finite differences. Central 5-point stencils for orders 1..3; one-sided
// 5-point stencils for orders 1..4 (side = +1 forward, -1 backward).
double fd_central(const std::function<double(double)>& f, double x, double h, int order);
double fd_one_sided(const std::function<double(double)>& f, double x, double h, int order,
                    int side);

}  // namespace warpgeom
