// Shooting solver for rotationally symmetric expanding gradient Ricci
// solitons g = dt^2 + b(t)^2 g_{S^(n-1)}, normalized so the soliton equation
// reads Ric + g/2 = Hess f. Reduced second-order system:
//   b'' = (n-2)(1 - b'^2)/b + b/2 - b' f'
//   f'' = -(n-1) b''/b + 1/2
// integrated from Taylor tip data at t0 by an adaptive embedded
// Runge-Kutta 5(4) pair with a stability-capped step.
#pragma once

#include <cstddef>
#include <vector>

namespace warpgeom {

struct SolitonState {
    double b = 0.0;
    double b_prime = 0.0;
    double f = 0.0;
    double f_prime = 0.0;
};

enum class SolitonOutcome {
    completed,      // reached T
    slope_exceeded, // b' left (0, 1 + tol]
    collapsed,      // b reached 0 before T
};

struct SolitonSolution {
    int n = 0;
    double s0 = 0.0;
    double t0 = 0.0;
    double T = 0.0;
    double tol = 0.0;

    SolitonOutcome outcome = SolitonOutcome::completed;
    double stop_time = 0.0;

    // Decimated trajectory; last sample is the final accepted state.
    std::vector<double> t, b, b_prime, f, f_prime;

    // max over accepted steps of the scaled embedded error estimate (tol units)
    double residual_max = 0.0;
    // max over accepted steps of |H(t) - H(t0)|, H = f'^2 + scal - f
    double identity_drift = 0.0;
    double identity_value = 0.0; // H(t0)
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
};

// Pointwise curvature from the reduced state.
double soliton_scal(int n, double b, double b_prime, double f_prime);
double soliton_sec_rad(int n, double b, double b_prime, double f_prime);
double soliton_sec_sph(double b, double b_prime);

// Taylor tip data b = t0 - s0 t0^3/(6n(n-1)), f''(0) = (s0 + n/2)/n.
// Second-order accurate; rejects s0 < 0.
SolitonState tip_series(int n, double s0, double t0 = 1e-3);

SolitonSolution integrate(int n, double s0, double T, double tol = 1e-10,
                          double t0 = 1e-3);

// Bisection on s0 >= 0 until |b'(T) - c_target| <= shoot_tol; brackets from
// [0, 10n], doubling the right end up to 4 times.
struct ShootResult {
    double s0_star = 0.0;
    int iterations = 0;
    SolitonSolution solution;
};

ShootResult shoot(int n, double c_target, double shoot_tol = 1e-8, double T = 50.0,
                  double tol = 1e-10, double t0 = 1e-3);

struct DecayMetrics {
    double ascr = 0.0;            // max of t^2 * scal over the tail [T/2, T]
    double potential_ratio = 0.0; // f(T)/T^2, tends to 1/4
    bool has_exp_rate = false;    // only n = 2 decays exponentially
    double exp_rate = 0.0;        // slope of log|sec_rad| vs t over the tail fit window
    double exp_rate_r2 = 0.0;     // regression R^2 of that fit
    bool settled = false;         // |b'(T) - b'(T/2)| < 1e-6
    double settle_gap = 0.0;
};

DecayMetrics decay_metrics(const SolitonSolution& sol);

// Fixed-step variant of the same RK formula; used by the order check.
SolitonState integrate_fixed_step(int n, double s0, double T, double h,
                                  double t0 = 1e-3);

} // namespace warpgeom
