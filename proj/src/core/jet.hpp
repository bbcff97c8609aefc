// Truncated derivative jets: a value together with derivatives up to order 5
// with respect to a single scalar variable. Profiles evaluate as jets so that
// curvature formulas and endpoint Taylor data come from one code path.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace warpgeom {

struct Jet {
    // d[k] = k-th derivative, d[0] = value.
    std::array<double, 6> d{};

    static constexpr int order = 5;

    static Jet constant(double c) {
        Jet j;
        j.d[0] = c;
        return j;
    }

    // The identity jet at r: value r, first derivative 1.
    static Jet variable(double r) {
        Jet j;
        j.d[0] = r;
        j.d[1] = 1.0;
        return j;
    }

    double value() const { return d[0]; }
    double deriv(int k) const { return d[static_cast<size_t>(k)]; }

    bool finite() const {
        for (double x : d)
            if (!std::isfinite(x)) return false;
        return true;
    }

    Jet operator-() const {
        Jet r;
        for (size_t k = 0; k < d.size(); ++k) r.d[k] = -d[k];
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (size_t k = 0; k < d.size(); ++k) d[k] += o.d[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (size_t k = 0; k < d.size(); ++k) d[k] -= o.d[k];
        return *this;
    }
    Jet& operator*=(double s) {
        for (size_t k = 0; k < d.size(); ++k) d[k] *= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double c) { a.d[0] += c; return a; }
    friend Jet operator+(double c, Jet a) { a.d[0] += c; return a; }
    friend Jet operator-(Jet a, double c) { a.d[0] -= c; return a; }
    friend Jet operator-(double c, const Jet& a) { Jet r = -a; r.d[0] += c; return r; }

    // Leibniz product through order 5. Binomial rows: 1; 1 1; 1 2 1; 1 3 3 1;
    // 1 4 6 4 1; 1 5 10 10 5 1.
    friend Jet operator*(const Jet& a, const Jet& b) {
        static constexpr double C[6][6] = {
            {1, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0},   {1, 2, 1, 0, 0, 0},
            {1, 3, 3, 1, 0, 0},  {1, 4, 6, 4, 1, 0},   {1, 5, 10, 10, 5, 1},
        };
        Jet r;
        for (int n = 0; n <= order; ++n) {
            double s = 0.0;
            for (int j = 0; j <= n; ++j)
                s += C[n][j] * a.d[static_cast<size_t>(j)] * b.d[static_cast<size_t>(n - j)];
            r.d[static_cast<size_t>(n)] = s;
        }
        return r;
    }

    // Quotient q = a / b solved from (b*q)^(n) = a^(n).
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet q;
        const auto& bd = b.d;
        q.d[0] = a.d[0] / bd[0];
        q.d[1] = (a.d[1] - q.d[0] * bd[1]) / bd[0];
        q.d[2] = (a.d[2] - q.d[0] * bd[2] - 2 * q.d[1] * bd[1]) / bd[0];
        q.d[3] = (a.d[3] - q.d[0] * bd[3] - 3 * q.d[1] * bd[2] - 3 * q.d[2] * bd[1]) / bd[0];
        q.d[4] = (a.d[4] - q.d[0] * bd[4] - 4 * q.d[1] * bd[3] - 6 * q.d[2] * bd[2] -
                  4 * q.d[3] * bd[1]) / bd[0];
        q.d[5] = (a.d[5] - q.d[0] * bd[5] - 5 * q.d[1] * bd[4] - 10 * q.d[2] * bd[3] -
                  10 * q.d[3] * bd[2] - 5 * q.d[4] * bd[1]) / bd[0];
        return q;
    }

    friend Jet operator/(const Jet& a, double s) { Jet r = a; r *= 1.0 / s; return r; }
    friend Jet operator/(double c, const Jet& b) { return constant(c) / b; }
};

// exp(g) via f^(n+1) = sum_j C(n,j) g^(j+1) f^(n-j).
inline Jet jet_exp(const Jet& g) {
    Jet f;
    f.d[0] = std::exp(g.d[0]);
    f.d[1] = g.d[1] * f.d[0];
    f.d[2] = g.d[2] * f.d[0] + g.d[1] * f.d[1];
    f.d[3] = g.d[3] * f.d[0] + 2 * g.d[2] * f.d[1] + g.d[1] * f.d[2];
    f.d[4] = g.d[4] * f.d[0] + 3 * g.d[3] * f.d[1] + 3 * g.d[2] * f.d[2] + g.d[1] * f.d[3];
    f.d[5] = g.d[5] * f.d[0] + 4 * g.d[4] * f.d[1] + 6 * g.d[3] * f.d[2] +
             4 * g.d[2] * f.d[3] + g.d[1] * f.d[4];
    return f;
}

// sin(w*r + p) and cos(w*r + p) as jets in r.
inline Jet jet_sin(double w, double r, double p = 0.0) {
    Jet j;
    const double s = std::sin(w * r + p), c = std::cos(w * r + p);
    double pw = 1.0;
    const double cyc[4] = {s, c, -s, -c};
    for (int k = 0; k <= Jet::order; ++k) {
        j.d[static_cast<size_t>(k)] = cyc[k % 4] * pw;
        pw *= w;
    }
    return j;
}

inline Jet jet_cos(double w, double r, double p = 0.0) {
    Jet j;
    const double s = std::sin(w * r + p), c = std::cos(w * r + p);
    double pw = 1.0;
    const double cyc[4] = {c, -s, -c, s};
    for (int k = 0; k <= Jet::order; ++k) {
        j.d[static_cast<size_t>(k)] = cyc[k % 4] * pw;
        pw *= w;
    }
    return j;
}

// Jet of r -> g(s*r + c) given the jet of g at s*r + c.
inline Jet jet_compose_affine(const Jet& g, double s) {
    Jet r = g;
    double pw = 1.0;
    for (int k = 1; k <= Jet::order; ++k) {
        pw *= s;
        r.d[static_cast<size_t>(k)] *= pw;
    }
    return r;
}

}  // namespace warpgeom
