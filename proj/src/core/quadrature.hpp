// Adaptive Simpson quadrature with Richardson acceptance.
#pragma once

#include <functional>
#include <vector>

namespace warpgeom {

// Integral of f over [a, b] to absolute tolerance tol.
// Throws NoConvergence if the recursion depth limit is hit.
double integrate_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                         int max_depth = 48);

// Cumulative integrals F(x_i) = F(x_0) + int_{x_0}^{x_i} f for an ascending
// node vector, sharing one absolute tolerance across the whole range.
std::vector<double> integrate_cumulative(const std::function<double(double)>& f,
                                         const std::vector<double>& nodes, double f0, double tol);

}  // namespace warpgeom
