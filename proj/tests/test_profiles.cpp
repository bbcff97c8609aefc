#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/profile.hpp"
#include "core/quadrature.hpp"
#include "core/special.hpp"

using namespace warpgeom;

namespace {
constexpr double kPi = std::numbers::pi;

// C^2 continuity probe: compare one-sided evaluations just off a seam.
void check_seam(const WarpProfile& p, double s) {
    const double h = 1e-7;
    for (int order = 0; order <= 2; ++order) {
        const double tol = 1e-5 * (order + 1);
        CHECK(p.eval(s - h, order) == doctest::Approx(p.eval(s + h, order)).epsilon(tol));
    }
}
}  // namespace

TEST_CASE("round profile is sin on [0, pi]") {
    const WarpProfile p = make_tapered_sine_profile(0.0, 1.0, 1.0, kPi, "round");
    CHECK(p.length() == kPi);
    CHECK(p.kind() == ProfileKind::closed_form);
    CHECK(p.seams().empty());
    CHECK(p.descriptor().family == "round");
    for (double r : {0.0, 0.4, 1.3, 2.9, kPi}) {
        CHECK(p.eval(r, 0) == doctest::Approx(std::sin(r)).epsilon(1e-15));
        CHECK(p.eval(r, 1) == doctest::Approx(std::cos(r)).epsilon(1e-15));
        CHECK(p.eval(r, 2) == doctest::Approx(-std::sin(r)).epsilon(1e-15));
        CHECK(p.eval(r, 3) == doctest::Approx(-std::cos(r)).epsilon(1e-15));
    }
}

TEST_CASE("tapered sine profile matches its closed form") {
    const double eps = 0.25, k = 2.0, amp = 1.5;
    const WarpProfile p = make_tapered_sine_profile(eps, k, amp, kPi / k, "tapered");
    for (double r : {0.2, 0.9, 1.4}) {
        CHECK(p.eval(r, 0) ==
              doctest::Approx(amp * (1.0 - eps * r) * std::sin(k * r) / k).epsilon(1e-14));
        CHECK(p.eval(r, 1) == doctest::Approx(amp * tapered_sine(eps, k, r, 1)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(make_tapered_sine_profile(-0.1, 2.0, 1.0, 1.0, "x"), std::invalid_argument);
    CHECK_THROWS_AS(make_tapered_sine_profile(0.1, 2.0, 0.0, 1.0, "x"), std::invalid_argument);
}

TEST_CASE("transition profile: branch identities") {
    const double k = 2.0, delta = 0.15, eps = 0.1;
    const WarpProfile p = make_transition_profile(k, delta, eps);
    CHECK(p.length() == doctest::Approx(kPi / k));
    CHECK(p.kind() == ProfileKind::quadrature_backed);
    REQUIRE(p.seams() == std::vector<double>{delta, 2.0 * delta});

    // Unit sphere cap.
    CHECK(p.eval(0.07, 0) == doctest::Approx(std::sin(0.07)).epsilon(1e-14));
    CHECK(p.eval(delta, 1) == doctest::Approx(std::cos(delta)).epsilon(1e-14));

    // Interpolation band: derivative is the cutoff mix, analytically.
    for (double r : {0.17, 0.22, 0.28}) {
        const double w = cutoff(delta, r, 0);
        const double want = w * std::cos(r) + (1.0 - w) * tapered_sine(eps, k, r, 1);
        CHECK(p.eval(r, 1) == doctest::Approx(want).epsilon(1e-13));
    }

    // Past the band the derivative is the tapered sine's.
    for (double r : {0.35, 0.8, 1.3}) {
        CHECK(p.eval(r, 1) == doctest::Approx(tapered_sine(eps, k, r, 1)).epsilon(1e-13));
        CHECK(p.eval(r, 2) == doctest::Approx(tapered_sine(eps, k, r, 2)).epsilon(1e-13));
    }

    for (double s : p.seams()) check_seam(p, s);
}

TEST_CASE("transition profile: interpolated antiderivative is accurate") {
    const double k = 2.0, delta = 0.15, eps = 0.1;
    const WarpProfile p = make_transition_profile(k, delta, eps);
    auto gamma_prime = [&](double r) { return p.eval(r, 1); };
    for (double r : {0.16, 0.19, 0.24, 0.29}) {
        const double want =
            std::sin(delta) + integrate_simpson(gamma_prime, delta, r, 1e-13);
        CHECK(p.eval(r, 0) == doctest::Approx(want).epsilon(1e-10));
    }
    // Value continuity fixes the far-branch shift.
    const double left = p.eval(2.0 * delta - 1e-12, 0);
    const double right = p.eval(2.0 * delta + 1e-12, 0);
    CHECK(left == doctest::Approx(right).epsilon(1e-10));
}

TEST_CASE("transition profile validates parameters") {
    CHECK_THROWS_AS(make_transition_profile(1.0, 0.1, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(make_transition_profile(2.0, 0.0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(make_transition_profile(2.0, 0.9, 0.05), std::invalid_argument);
    // Taper beyond the closed-form bound.
    CHECK_THROWS_AS(make_transition_profile(2.0, 0.1, 10.0), std::invalid_argument);
}

TEST_CASE("blend profile: closed-form regions and seams") {
    const double k = 2.0, delta = 0.1, eps = 0.05;
    const double lambda = kPi / (8.0 * k);
    const WarpProfile p = make_blend_profile(k, delta, eps);
    CHECK(p.kind() == ProfileKind::blended);
    CHECK(p.descriptor().family == "blend");

    // Unit cap near 0, shallow sphere past the blend window.
    CHECK(p.eval(0.05, 0) == doctest::Approx(std::sin(0.05)).epsilon(1e-14));
    CHECK(p.eval(0.05, 2) == doctest::Approx(-std::sin(0.05)).epsilon(1e-13));
    for (double r : {2.0 * lambda, 0.6 * kPi / k, kPi / k}) {
        CHECK(p.eval(r, 0) == doctest::Approx(std::sin(k * r) / k).epsilon(1e-13));
        CHECK(p.eval(r, 1) == doctest::Approx(std::cos(k * r)).epsilon(1e-13));
    }

    for (double s : p.seams()) check_seam(p, s);
    CHECK_THROWS_AS(make_blend_profile(k, 0.3, eps), std::invalid_argument);
}

TEST_CASE("blend limit profile is fully closed form") {
    const double k = 4.0, eps = 0.2;
    const double lambda = kPi / (8.0 * k);
    const WarpProfile p = make_blend_limit_profile(k, eps);
    CHECK(p.kind() == ProfileKind::closed_form);
    CHECK(p.eval(0.5 * lambda, 0) ==
          doctest::Approx(tapered_sine(eps, k, 0.5 * lambda, 0)).epsilon(1e-14));
    CHECK(p.eval(3.0 * lambda, 0) ==
          doctest::Approx(std::sin(3.0 * lambda * k) / k).epsilon(1e-14));
    // Inside the window: cutoff-weighted mix of the two closed forms.
    const double r = 1.5 * lambda;
    const double w = cutoff(lambda, r, 0);
    CHECK(p.eval(r, 0) == doctest::Approx(w * tapered_sine(eps, k, r, 0) +
                                          (1.0 - w) * std::sin(k * r) / k)
                              .epsilon(1e-13));

    // Zero taper degenerates to the plain shallow sphere, seam-free.
    const WarpProfile q = make_blend_limit_profile(k, 0.0);
    CHECK(q.seams().empty());
    CHECK(q.eval(0.1, 0) == doctest::Approx(std::sin(0.4) / 4.0).epsilon(1e-15));
}

TEST_CASE("cone point profile: symmetry and branches") {
    const double k = 2.0, delta = 0.2;
    const WarpProfile p = make_cone_point_profile(k, delta);
    CHECK(p.length() == kPi);

    // gamma(pi - r) = gamma(r), so gamma' is odd about pi/2.
    for (double r : {0.1, 0.37, 1.0, 1.5}) {
        CHECK(p.eval(kPi - r, 0) == doctest::Approx(p.eval(r, 0)).epsilon(1e-13));
        CHECK(p.eval(kPi - r, 1) == doctest::Approx(-p.eval(r, 1)).epsilon(1e-13));
        CHECK(p.eval(kPi - r, 2) == doctest::Approx(p.eval(r, 2)).epsilon(1e-12));
    }

    // Unit caps at both ends, shallow arc in the middle.
    CHECK(p.eval(0.1, 0) == doctest::Approx(std::sin(0.1)).epsilon(1e-14));
    CHECK(p.eval(kPi - 0.1, 1) == doctest::Approx(-std::cos(0.1)).epsilon(1e-14));
    for (double r : {2.0 * delta, 1.0, kPi / 2.0}) {
        CHECK(p.eval(r, 1) == doctest::Approx(std::cos(r) / k).epsilon(1e-13));
    }

    // Interpolation band derivative.
    const double r = 0.3;
    const double w = cutoff(delta, r, 0);
    CHECK(p.eval(r, 1) ==
          doctest::Approx((w + (1.0 - w) / k) * std::cos(r)).epsilon(1e-13));

    for (double s : p.seams()) check_seam(p, s);
    CHECK_THROWS_AS(make_cone_point_profile(2.0, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(make_cone_point_profile(0.5, 0.1), std::invalid_argument);
}

TEST_CASE("scaled profile transforms derivatives correctly") {
    const WarpProfile base = make_blend_profile(2.0, 0.1, 0.05);
    const double c = 0.25, s = 0.5;
    const WarpProfile p = make_scaled_profile(base, c);
    CHECK(p.length() == doctest::Approx(s * base.length()).epsilon(1e-15));
    for (double r : {0.02, 0.15, 0.6}) {
        CHECK(p.eval(r, 0) == doctest::Approx(s * base.eval(r / s, 0)).epsilon(1e-13));
        CHECK(p.eval(r, 1) == doctest::Approx(base.eval(r / s, 1)).epsilon(1e-13));
        CHECK(p.eval(r, 2) == doctest::Approx(base.eval(r / s, 2) / s).epsilon(1e-12));
    }
    // Seams carry over, scaled.
    const auto bs = base.seams();
    const auto ps = p.seams();
    REQUIRE(bs.size() == ps.size());
    for (std::size_t i = 0; i < bs.size(); ++i)
        CHECK(ps[i] == doctest::Approx(s * bs[i]).epsilon(1e-15));
    // Descriptor records the scale on top of the base parameters.
    const auto d = p.descriptor();
    CHECK(d.family == base.descriptor().family);
    CHECK(d.params.back().first == "scale");
    CHECK(d.params.back().second == c);
    CHECK_THROWS_AS(make_scaled_profile(base, 0.0), std::invalid_argument);
}

TEST_CASE("profile evaluation is validated and endpoint-safe") {
    const WarpProfile p = make_blend_profile(2.0, 0.1, 0.05);
    CHECK_THROWS_AS(p.eval(-0.01, 0), EvalError);
    CHECK_THROWS_AS(p.eval(p.length() + 0.01, 0), EvalError);
    CHECK_THROWS_AS(p.eval(0.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(p.eval(0.5, -1), std::invalid_argument);
    // A hair outside the interval is clamped, not rejected.
    CHECK(p.eval(-1e-14, 0) == 0.0);
    CHECK(std::isfinite(p.eval(p.length() + 1e-14, 1)));
    // The jet stays finite at both closed ends.
    CHECK(p.jet(0.0).finite());
    CHECK(p.jet(p.length()).finite());
    // Relative accuracy survives down to tiny radii.
    CHECK(p.eval(1e-7, 0) == doctest::Approx(std::sin(1e-7)).epsilon(1e-9).scale(0.0));
}
