// Independent curvature oracle: assembles the full Riemann tensor of a
// diagonal metric by finite differences of the metric components alone (no
// jets, no closed-form curvature) and returns the eigenvalues of the
// curvature operator on 2-forms. Deliberately slow and dumb.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace fdoracle {

// Jacobi eigenvalue iteration for a symmetric matrix, ascending order.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (size_t i = 0; i < n; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (size_t i = 0; i < n; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Curvature operator eigenvalues for a diagonal metric given by `diag`,
// evaluated at x. Two nested central-difference levels: dg at step h, dGamma
// at step H.
template <int N, class MetricFn>
std::vector<double> curvature_operator_eigenvalues(const MetricFn& diag,
                                                   const double (&x0)[N],
                                                   double h = 1e-5,
                                                   double H = 5e-4) {
    using Vec = std::array<double, N>;
    auto dmetric = [&](const double* x) {
        // dg[j][k] = d g_kk / d x_j
        std::array<std::array<double, N>, N> dg{};
        for (int j = 0; j < N; ++j) {
            double xp[N], xm[N];
            for (int i = 0; i < N; ++i) xp[i] = xm[i] = x[i];
            xp[j] += h;
            xm[j] -= h;
            const Vec gp = diag(xp), gm = diag(xm);
            for (int k = 0; k < N; ++k) dg[j][k] = (gp[k] - gm[k]) / (2.0 * h);
        }
        return dg;
    };
    auto christoffel = [&](const double* x) {
        const Vec g = diag(x);
        const auto dg = dmetric(x);
        std::array<std::array<std::array<double, N>, N>, N> gam{};
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    double v = 0.0;
                    if (i == k) v += dg[j][i];
                    if (i == j) v += dg[k][i];
                    if (j == k) v -= dg[i][j];
                    gam[i][j][k] = 0.5 * v / g[i];
                }
        return gam;
    };

    const auto gam = christoffel(x0);
    // dgam[k][i][l][j] = d Gamma^i_{lj} / d x_k
    std::array<std::array<std::array<std::array<double, N>, N>, N>, N> dgam{};
    for (int k = 0; k < N; ++k) {
        double xp[N], xm[N];
        for (int i = 0; i < N; ++i) xp[i] = xm[i] = x0[i];
        xp[k] += H;
        xm[k] -= H;
        const auto gp = christoffel(xp), gm = christoffel(xm);
        for (int i = 0; i < N; ++i)
            for (int l = 0; l < N; ++l)
                for (int j = 0; j < N; ++j)
                    dgam[k][i][l][j] = (gp[i][l][j] - gm[i][l][j]) / (2.0 * H);
    }

    const Vec g = diag(x0);
    auto riem_low = [&](int i, int j, int k, int l) {
        // R^i_{jkl} = dGamma^i_{lj}/dx_k - dGamma^i_{kj}/dx_l + sum_m (...)
        double v = dgam[k][i][l][j] - dgam[l][i][k][j];
        for (int m = 0; m < N; ++m)
            v += gam[i][k][m] * gam[m][l][j] - gam[i][l][m] * gam[m][k][j];
        return g[i] * v;
    };

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) pairs.emplace_back(i, j);
    const size_t P = pairs.size();
    std::vector<std::vector<double>> op(P, std::vector<double>(P, 0.0));
    for (size_t a = 0; a < P; ++a)
        for (size_t b = 0; b < P; ++b) {
            const auto [i, j] = pairs[a];
            const auto [k, l] = pairs[b];
            op[a][b] = riem_low(i, j, k, l) /
                       std::sqrt(g[i] * g[j] * g[k] * g[l]);
        }
    // Symmetrize away finite-difference noise before the eigensolve.
    for (size_t a = 0; a < P; ++a)
        for (size_t b = a + 1; b < P; ++b) {
            const double m = 0.5 * (op[a][b] + op[b][a]);
            op[a][b] = op[b][a] = m;
        }
    return jacobi_eigenvalues(std::move(op));
}

// Warped 3-sphere h = ds^2 + a(s)^2 (dtheta^2 + sin^2 theta dphi^2):
// expected spectrum {-a''/a (x2), (1 - a'^2)/a^2 (x1)}.
inline std::vector<double> sphere3_eigenvalues(const std::function<double(double)>& a,
                                               double s, double theta) {
    const double x0[3] = {s, theta, 0.3};
    auto diag = [&](const double* x) {
        const double as = a(x[0]);
        const double st = std::sin(x[1]);
        return std::array<double, 3>{1.0, as * as, as * as * st * st};
    };
    return curvature_operator_eigenvalues<3>(diag, x0);
}

// Cone dr^2 + r^2 h_link over the warped 3-sphere: expected spectrum
// {0 (x3), (sec_rad - 1)/r^2 (x2), (sec_sph - 1)/r^2 (x1)}.
inline std::vector<double> cone4_eigenvalues(const std::function<double(double)>& a,
                                             double r, double s, double theta) {
    const double x0[4] = {r, s, theta, 0.3};
    auto diag = [&](const double* x) {
        const double as = a(x[1]);
        const double st = std::sin(x[2]);
        const double r2 = x[0] * x[0];
        return std::array<double, 4>{1.0, r2, r2 * as * as, r2 * as * as * st * st};
    };
    return curvature_operator_eigenvalues<4>(diag, x0);
}

} // namespace fdoracle
