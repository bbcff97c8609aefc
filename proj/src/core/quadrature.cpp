#include "core/quadrature.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace warpgeom {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    if (depth <= 0) throw NoConvergence("integrate_simpson: depth limit reached");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                         int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

std::vector<double> integrate_cumulative(const std::function<double(double)>& f,
                                         const std::vector<double>& nodes, double f0, double tol) {
    std::vector<double> out;
    out.reserve(nodes.size());
    if (nodes.empty()) return out;
    out.push_back(f0);
    const double span = nodes.back() - nodes.front();
    for (size_t i = 1; i < nodes.size(); ++i) {
        const double seg_tol = tol * (nodes[i] - nodes[i - 1]) / span;
        out.push_back(out.back() + integrate_simpson(f, nodes[i - 1], nodes[i], seg_tol));
    }
    return out;
}

}  // namespace warpgeom
