#include <doctest.h>

#include <cmath>

#include "core/jet.hpp"

using namespace warpgeom;

namespace {

// Factorial-scaled comparison: d[k] of a composite against closed form.
void check_jet(const Jet& got, const Jet& want, double tol) {
    for (int k = 0; k <= Jet::order; ++k)
        CHECK(std::abs(got.deriv(k) - want.deriv(k)) <=
              tol * (1.0 + std::abs(want.deriv(k))));
}

} // namespace

TEST_CASE("constant and variable jets") {
    const Jet c = Jet::constant(2.5);
    CHECK(c.value() == 2.5);
    for (int k = 1; k <= Jet::order; ++k) CHECK(c.deriv(k) == 0.0);

    const Jet x = Jet::variable(0.7);
    CHECK(x.value() == 0.7);
    CHECK(x.deriv(1) == 1.0);
    for (int k = 2; k <= Jet::order; ++k) CHECK(x.deriv(k) == 0.0);
}

TEST_CASE("product rule matches the closed-form derivatives of sin*cos") {
    // sin(2r)cos(3r) = (sin(5r) - sin(r))/2, whose jet is known exactly.
    const double r = 0.37;
    const Jet got = jet_sin(2.0, r) * jet_cos(3.0, r);
    const Jet want = 0.5 * (jet_sin(5.0, r) - jet_sin(1.0, r));
    check_jet(got, want, 1e-14);
}

TEST_CASE("quotient undoes the product") {
    const double r = 1.2;
    const Jet a = jet_sin(1.7, r) + 2.0;
    const Jet b = jet_cos(0.9, r) + 3.0;
    check_jet((a * b) / b, a, 1e-13);
    // tan = sin/cos against d/dr tan = 1 + tan^2 through the chain.
    const Jet t = jet_sin(1.0, r) / jet_cos(1.0, r);
    const Jet tsq = t * t;
    CHECK(t.deriv(1) == doctest::Approx(1.0 + tsq.value()).epsilon(1e-12));
    CHECK(t.deriv(2) == doctest::Approx(tsq.deriv(1)).epsilon(1e-12));
}

TEST_CASE("exp jet matches scaled exponentials") {
    const double r = 0.45;
    Jet g = Jet::variable(r) * (-1.5);
    const Jet f = jet_exp(g);
    for (int k = 0; k <= Jet::order; ++k)
        CHECK(f.deriv(k) ==
              doctest::Approx(std::pow(-1.5, k) * std::exp(-1.5 * r)).epsilon(1e-13));
}

TEST_CASE("affine composition rescales derivatives") {
    const double s = 0.25, r = 0.8;
    const Jet inner = jet_sin(1.0, s * r + 0.1);
    const Jet composed = jet_compose_affine(inner, s);
    const Jet direct = jet_sin(s, r, 0.1);
    check_jet(composed, direct, 1e-14);
}

TEST_CASE("sin and cos jets cycle derivatives with frequency powers") {
    const double w = 2.3, r = 0.61;
    const Jet s = jet_sin(w, r), c = jet_cos(w, r);
    for (int k = 0; k + 1 <= Jet::order; ++k) {
        CHECK(s.deriv(k + 1) == doctest::Approx(w * c.deriv(k)).epsilon(1e-13));
        CHECK(c.deriv(k + 1) == doctest::Approx(-w * s.deriv(k)).epsilon(1e-13));
    }
}

TEST_CASE("finite jets detect non-finite entries") {
    Jet j = Jet::constant(1.0);
    CHECK(j.finite());
    j.d[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK(!j.finite());
}
