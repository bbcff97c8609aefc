#include "core/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"

namespace warpgeom {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

struct State4 {
    double y[4]; // b, b', f, f'
};

// Autonomous reduced system; y = (b, u, f, v) with u = b', v = f'.
State4 rhs(int n, const State4& s) {
    const double b = s.y[0], u = s.y[1], v = s.y[3];
    const double bpp = (n - 2) * (1.0 - u * u) / b + 0.5 * b - u * v;
    return {{u, bpp, v, -(n - 1) * bpp / b + 0.5}};
}

double hamilton(int n, const State4& s) {
    return s.y[3] * s.y[3] + soliton_scal(n, s.y[0], s.y[1], s.y[3]) - s.y[2];
}

bool finite(const State4& s) {
    for (double c : s.y)
        if (!std::isfinite(c)) return false;
    return true;
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;

struct StepResult {
    State4 dy;    // increment h * sum(b_i k_i); kept separate so the caller
                  // can apply it with compensated accumulation
    State4 y_new; // y + dy, plain
    State4 k_new; // FSAL stage, valid when finite
    double err[4];
};

StepResult dopri_step(int n, const State4& y, const State4& k1, double h) {
    auto axpy = [&](std::initializer_list<std::pair<double, const State4*>> terms) {
        State4 out = y;
        for (auto [c, k] : terms)
            for (int i = 0; i < 4; ++i) out.y[i] += h * c * k->y[i];
        return out;
    };
    const State4 k2 = rhs(n, axpy({{A21, &k1}}));
    const State4 k3 = rhs(n, axpy({{A31, &k1}, {A32, &k2}}));
    const State4 k4 = rhs(n, axpy({{A41, &k1}, {A42, &k2}, {A43, &k3}}));
    const State4 k5 = rhs(n, axpy({{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}));
    const State4 k6 =
        rhs(n, axpy({{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}));
    StepResult out;
    for (int i = 0; i < 4; ++i) {
        out.dy.y[i] = h * (B1 * k1.y[i] + B3 * k3.y[i] + B4 * k4.y[i] +
                           B5 * k5.y[i] + B6 * k6.y[i]);
        out.y_new.y[i] = y.y[i] + out.dy.y[i];
    }
    out.k_new = finite(out.y_new) ? rhs(n, out.y_new) : State4{};
    for (int i = 0; i < 4; ++i)
        out.err[i] = h * (E1 * k1.y[i] + E3 * k3.y[i] + E4 * k4.y[i] + E5 * k5.y[i] +
                          E6 * k6.y[i] + E7 * out.k_new.y[i]);
    return out;
}

// Trajectory recorder with halving decimation, bounded at kMaxStore samples.
class Recorder {
  public:
    explicit Recorder(SolitonSolution& sol) : sol_(sol) {}

    void push(double time, const State4& s, bool force = false) {
        if (!force) {
            if (counter_++ % keep_every_ != 0) return;
        } else if (!sol_.t.empty() && sol_.t.back() == time) {
            return;
        }
        sol_.t.push_back(time);
        sol_.b.push_back(s.y[0]);
        sol_.b_prime.push_back(s.y[1]);
        sol_.f.push_back(s.y[2]);
        sol_.f_prime.push_back(s.y[3]);
        if (sol_.t.size() >= kMaxStore) compact();
    }

  private:
    static constexpr std::size_t kMaxStore = 262144;

    void compact() {
        auto thin = [](std::vector<double>& v) {
            for (std::size_t i = 0; 2 * i < v.size(); ++i) v[i] = v[2 * i];
            v.resize((v.size() + 1) / 2);
        };
        thin(sol_.t);
        thin(sol_.b);
        thin(sol_.b_prime);
        thin(sol_.f);
        thin(sol_.f_prime);
        keep_every_ *= 2;
    }

    SolitonSolution& sol_;
    std::size_t keep_every_ = 1;
    std::size_t counter_ = 1; // initial state is pushed by the caller
};

double interp_at(const std::vector<double>& ts, const std::vector<double>& ys,
                 double x) {
    const auto it = std::lower_bound(ts.begin(), ts.end(), x);
    if (it == ts.begin()) return ys.front();
    if (it == ts.end()) return ys.back();
    const std::size_t i = static_cast<std::size_t>(it - ts.begin());
    const double w = (x - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

} // namespace

double soliton_sec_rad(int n, double b, double b_prime, double f_prime) {
    const double bpp_over_b =
        (n - 2) * (1.0 - b_prime * b_prime) / (b * b) + 0.5 - b_prime * f_prime / b;
    return -bpp_over_b;
}

double soliton_sec_sph(double b, double b_prime) {
    return (1.0 - b_prime * b_prime) / (b * b);
}

double soliton_scal(int n, double b, double b_prime, double f_prime) {
    return 2.0 * (n - 1) * soliton_sec_rad(n, b, b_prime, f_prime) +
           (n - 1) * (n - 2) * soliton_sec_sph(b, b_prime);
}

SolitonState tip_series(int n, double s0, double t0) {
    require(n >= 2, "tip_series: n must be >= 2");
    require(s0 >= 0.0, "tip_series: tip scalar curvature s0 must be >= 0");
    require(t0 > 0.0 && t0 <= 0.05, "tip_series: t0 must lie in (0, 0.05]");
    const double b3 = -s0 / (6.0 * n * (n - 1));
    const double fpp0 = (s0 + 0.5 * n) / n;
    SolitonState s;
    s.b = t0 + b3 * t0 * t0 * t0;
    s.b_prime = 1.0 + 3.0 * b3 * t0 * t0;
    s.f = s0 + 0.5 * fpp0 * t0 * t0;
    s.f_prime = fpp0 * t0;
    return s;
}

SolitonSolution integrate(int n, double s0, double T, double tol, double t0) {
    require(T > t0, "integrate: T must exceed t0");
    require(tol >= 1e-13 && tol <= 1e-2, "integrate: tol must lie in [1e-13, 1e-2]");
    const SolitonState tip = tip_series(n, s0, t0);

    SolitonSolution sol;
    sol.n = n;
    sol.s0 = s0;
    sol.t0 = t0;
    sol.T = T;
    sol.tol = tol;

    State4 y{{tip.b, tip.b_prime, tip.f, tip.f_prime}};
    double t = t0;
    const double h0 = hamilton(n, y);
    sol.identity_value = h0;

    Recorder rec(sol);
    rec.push(t, y, true);

    State4 k1 = rhs(n, y);
    State4 comp{}; // Kahan compensation for the state update
    double h = std::min(1e-4, 0.25 * (T - t0));
    double err_prev = 1.0;
    const double slope_ceiling = 1.0 + tol;

    while (t < T) {
        // Explicit-RK stability cap; the slope equation contracts at rate
        // ~ f' + 2(n-2)/b (the latter only matters near the tip).
        const double rate = std::abs(y.y[3]) + 2.0 * (n - 2) / y.y[0];
        const double h_cap = 3.0 / std::max(rate, 0.25);
        h = std::min({h, h_cap, T - t});
        if (h < 1e-14 * std::max(1.0, t))
            throw NoConvergence("integrate: step size underflow");

        // The Hamilton first integral is most sensitive near the tip, where
        // essentially all of its drift would otherwise accumulate; ramping
        // the per-step target keeps the whole-trajectory drift at O(tol)
        // while adding only a few hundred early steps.
        const double tol_t =
            tol * std::clamp(std::pow(t / 3.0, 5.0), 1.0 / 131072.0, 1.0);

        const StepResult step = dopri_step(n, y, k1, h);
        double err_norm;
        if (!finite(step.y_new) || !finite(step.k_new)) {
            err_norm = std::numeric_limits<double>::infinity();
        } else {
            double acc = 0.0;
            for (int i = 0; i < 4; ++i) {
                const double sc =
                    tol_t + tol_t * std::max(std::abs(y.y[i]), std::abs(step.y_new.y[i]));
                const double e = step.err[i] / sc;
                acc += e * e;
            }
            err_norm = std::sqrt(0.25 * acc);
        }

        if (err_norm <= 1.0) {
            t += h;
            // Compensated update: over millions of stability-capped tail
            // steps a plain += random-walks the state (and the Hamilton
            // identity) at the ulp of f ~ T^2/4 per step.
            for (int i = 0; i < 4; ++i) {
                const double d = step.dy.y[i] - comp.y[i];
                const double s = y.y[i] + d;
                comp.y[i] = (s - y.y[i]) - d;
                y.y[i] = s;
            }
            k1 = step.k_new;
            ++sol.steps_accepted;
            sol.residual_max = std::max(sol.residual_max, err_norm * tol_t);
            sol.identity_drift =
                std::max(sol.identity_drift, std::abs(hamilton(n, y) - h0));
            rec.push(t, y);
            if (y.y[1] > slope_ceiling) {
                sol.outcome = SolitonOutcome::slope_exceeded;
                break;
            }
            if (y.y[0] < 1e-9 || y.y[1] <= 0.0) {
                sol.outcome = SolitonOutcome::collapsed;
                break;
            }
            const double fac = 0.9 * std::pow(err_norm > 0 ? err_norm : 1e-10, -0.14) *
                               std::pow(err_prev, 0.08);
            h *= std::clamp(fac, 0.2, 6.0);
            err_prev = std::max(err_norm, 1e-4);
        } else {
            ++sol.steps_rejected;
            h *= std::isfinite(err_norm)
                     ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.1, 0.9)
                     : 0.1;
        }
    }

    sol.stop_time = t;
    rec.push(t, y, true);
    return sol;
}

ShootResult shoot(int n, double c_target, double shoot_tol, double T, double tol,
                  double t0) {
    require(c_target > 0.0 && c_target <= 1.0, "shoot: c_target must lie in (0, 1]");
    require(shoot_tol > 0.0, "shoot: shoot_tol must be > 0");

    int iterations = 0;
    // Outcomes map onto the bisection predicate: a collapse means the slope
    // fell below any admissible c before T.
    auto slope_error = [&](double s0, SolitonSolution* keep) {
        ++iterations;
        SolitonSolution run = integrate(n, s0, T, tol, t0);
        double slope;
        switch (run.outcome) {
        case SolitonOutcome::completed: slope = run.b_prime.back(); break;
        case SolitonOutcome::slope_exceeded: slope = 2.0; break;
        case SolitonOutcome::collapsed: slope = -1.0; break;
        default: slope = -1.0; break;
        }
        if (keep) *keep = std::move(run);
        return slope - c_target;
    };

    SolitonSolution first;
    const double err0 = slope_error(0.0, &first);
    if (std::abs(err0) <= shoot_tol &&
        first.outcome == SolitonOutcome::completed)
        return {0.0, iterations, std::move(first)};

    double lo = 0.0, hi = 10.0 * n;
    int doublings = 0;
    while (slope_error(hi, nullptr) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 4)
            throw NoConvergence("shoot: no slope bracket found in s0 range");
    }

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        SolitonSolution run;
        const double err = slope_error(mid, &run);
        if (std::abs(err) <= shoot_tol && run.outcome == SolitonOutcome::completed)
            return {mid, iterations, std::move(run)};
        (err > 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    throw NoConvergence("shoot: bisection could not reach shoot_tol");
}

DecayMetrics decay_metrics(const SolitonSolution& sol) {
    require(sol.t.size() >= 16, "decay_metrics: trajectory too short");
    DecayMetrics out;
    const double T = sol.stop_time;
    const double half = 0.5 * T;

    const double slope_half = interp_at(sol.t, sol.b_prime, half);
    out.settle_gap = std::abs(sol.b_prime.back() - slope_half);
    out.settled = out.settle_gap < 1e-6;
    out.potential_ratio = sol.f.back() / (T * T);

    double ascr = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        if (sol.t[i] < half) continue;
        const double scal =
            soliton_scal(sol.n, sol.b[i], sol.b_prime[i], sol.f_prime[i]);
        ascr = std::max(ascr, sol.t[i] * sol.t[i] * scal);
    }
    out.ascr = ascr;

    if (sol.n == 2) {
        // Fit log|sec_rad| against t inside a magnitude window that keeps the
        // samples clear of both the O(1) head and the roundoff floor.
        for (double floor : {1e-11, 1e-13}) {
            std::vector<double> xs, ys;
            for (std::size_t i = 0; i < sol.t.size(); ++i) {
                const double sec = std::abs(
                    soliton_sec_rad(sol.n, sol.b[i], sol.b_prime[i], sol.f_prime[i]));
                if (sec >= floor && sec <= floor * 1e7) {
                    xs.push_back(sol.t[i]);
                    ys.push_back(std::log(sec));
                }
            }
            if (xs.size() < 8) continue;
            const double nn = static_cast<double>(xs.size());
            double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                sx += xs[i];
                sy += ys[i];
                sxx += xs[i] * xs[i];
                sxy += xs[i] * ys[i];
                syy += ys[i] * ys[i];
            }
            const double cov = sxy - sx * sy / nn;
            const double var_x = sxx - sx * sx / nn;
            const double var_y = syy - sy * sy / nn;
            out.exp_rate = cov / var_x;
            out.exp_rate_r2 = var_y > 0 ? (cov * cov) / (var_x * var_y) : 1.0;
            out.has_exp_rate = true;
            break;
        }
    }
    return out;
}

SolitonState integrate_fixed_step(int n, double s0, double T, double h, double t0) {
    require(h > 0.0, "integrate_fixed_step: h must be > 0");
    require(T > t0, "integrate_fixed_step: T must exceed t0");
    const SolitonState tip = tip_series(n, s0, t0);
    State4 y{{tip.b, tip.b_prime, tip.f, tip.f_prime}};
    State4 k1 = rhs(n, y);
    double t = t0;
    while (t < T - 1e-15 * T) {
        const double step = std::min(h, T - t);
        const StepResult r = dopri_step(n, y, k1, step);
        if (!finite(r.y_new))
            throw NoConvergence("integrate_fixed_step: state diverged");
        y = r.y_new;
        k1 = r.k_new;
        t += step;
    }
    return {y.y[0], y.y[1], y.y[2], y.y[3]};
}

} // namespace warpgeom
