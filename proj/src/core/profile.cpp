#include "core/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace warpgeom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTableSegments = 64;
constexpr double kTableTol = 1e-12;

// Jet of the antiderivative F given F's value and the jet of F'.
Jet antiderivative_jet(double value, const Jet& integrand) {
    Jet j;
    j.d[0] = value;
    for (int k = 1; k <= Jet::order; ++k)
        j.d[static_cast<size_t>(k)] = integrand.d[static_cast<size_t>(k - 1)];
    return j;
}

// Quintic Hermite table for an antiderivative F over [a, b]: node values of F
// from adaptive quadrature plus the integrand jet (F', F'') at each node.
// Per-segment interpolation error is O(h^6), far below the quadrature
// tolerance for the collar widths used here.
class HermiteTable {
  public:
    HermiteTable() = default;

    HermiteTable(const std::function<Jet(double)>& integrand_jet, double a, double b, double f_a)
        : a_(a), h_((b - a) / kTableSegments) {
        std::vector<double> nodes(kTableSegments + 1);
        for (size_t i = 0; i < nodes.size(); ++i) nodes[i] = a_ + static_cast<double>(i) * h_;
        nodes.back() = b;
        jets_.reserve(nodes.size());
        for (double x : nodes) jets_.push_back(integrand_jet(x));
        values_ = integrate_cumulative([&](double x) { return integrand_jet(x).value(); }, nodes,
                                       f_a, kTableTol);
    }

    double value(double r) const {
        int i = static_cast<int>((r - a_) / h_);
        i = std::clamp(i, 0, kTableSegments - 1);
        const size_t u = static_cast<size_t>(i);
        const double t = (r - (a_ + i * h_)) / h_;
        const double y0 = values_[u], y1 = values_[u + 1];
        const double m0 = h_ * jets_[u].d[0], m1 = h_ * jets_[u + 1].d[0];
        const double s0 = h_ * h_ * jets_[u].d[1], s1 = h_ * h_ * jets_[u + 1].d[1];
        const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
        return y0 * (1 - 10 * t3 + 15 * t4 - 6 * t5) + m0 * (t - 6 * t3 + 8 * t4 - 3 * t5) +
               s0 * 0.5 * (t2 - 3 * t3 + 3 * t4 - t5) + y1 * (10 * t3 - 15 * t4 + 6 * t5) +
               m1 * (-4 * t3 + 7 * t4 - 3 * t5) + s1 * 0.5 * (t3 - 2 * t4 + t5);
    }

    double end_value() const { return values_.back(); }

  private:
    double a_ = 0.0, h_ = 1.0;
    std::vector<double> values_;
    std::vector<Jet> jets_;
};

Jet reflect_jet(Jet j) {
    for (int k = 1; k <= Jet::order; k += 2) j.d[static_cast<size_t>(k)] = -j.d[static_cast<size_t>(k)];
    return j;
}

// Positivity of the tapered sine on the collar (0, pi/(4k)] needs
// taper < 4k/pi; everything the blends evaluate stays in that range.
void check_taper_range(double k, double eps, const char* who) {
    if (eps < 0.0 || eps >= 4.0 * k / kPi)
        throw std::invalid_argument(std::string(who) + ": taper out of [0, 4k/pi)");
}

class TaperedSineImpl final : public ProfileImpl {
  public:
    TaperedSineImpl(double taper, double freq, double amp, double len, std::string tag)
        : taper_(taper), freq_(freq), amp_(amp), len_(len), tag_(std::move(tag)) {
        if (taper < 0.0) throw std::invalid_argument("tapered_sine profile: taper must be >= 0");
        if (freq < 1.0) throw std::invalid_argument("tapered_sine profile: freq must be >= 1");
        if (!(amp > 0.0) || !(len > 0.0))
            throw std::invalid_argument("tapered_sine profile: amp and len must be > 0");
    }

    double length() const override { return len_; }
    Jet jet(double r) const override { return tapered_sine_jet(taper_, freq_, r, amp_); }
    ProfileKind kind() const override { return ProfileKind::closed_form; }
    ProfileDescriptor descriptor() const override {
        return {tag_, {{"taper", taper_}, {"freq", freq_}, {"amp", amp_}, {"len", len_}}};
    }

  private:
    double taper_, freq_, amp_, len_;
    std::string tag_;
};

class TransitionImpl final : public ProfileImpl {
  public:
    TransitionImpl(double k, double delta, double eps)
        : k_(k), delta_(delta), eps_(eps), len_(kPi / k) {
        if (!(k > 1.0)) throw std::invalid_argument("transition profile: k must be > 1");
        if (!(delta > 0.0) || !(2.0 * delta < len_))
            throw std::invalid_argument("transition profile: need 0 < 2*delta < pi/k");
        check_taper_range(k, eps, "transition profile");
        table_ = HermiteTable([this](double r) { return integrand(r); }, delta_, 2.0 * delta_,
                              std::sin(delta_));
        shift_ = table_.end_value() - tapered_sine_jet(eps_, k_, 2.0 * delta_).value();
    }

    double length() const override { return len_; }

    Jet jet(double r) const override {
        if (r <= delta_) return jet_sin(1.0, r);
        if (r < 2.0 * delta_) return antiderivative_jet(table_.value(r), integrand(r));
        return tapered_sine_jet(eps_, k_, r) + shift_;
    }

    ProfileKind kind() const override { return ProfileKind::quadrature_backed; }
    std::vector<double> seams() const override { return {delta_, 2.0 * delta_}; }
    double branch_radius_left() const override { return delta_; }
    double branch_radius_right() const override { return len_ - 2.0 * delta_; }
    ProfileDescriptor descriptor() const override {
        return {"transition", {{"k", k_}, {"delta", delta_}, {"eps", eps_}, {"shift", shift_}}};
    }

    double shift() const { return shift_; }

  private:
    // gamma' = phi_delta * cos + (1 - phi_delta) * b', b the tapered sine.
    Jet integrand(double r) const {
        const Jet w = cutoff_jet(delta_, r);
        return w * jet_cos(1.0, r) + (1.0 - w) * tapered_sine_prime_jet(eps_, k_, r);
    }

    double k_, delta_, eps_, len_;
    HermiteTable table_;
    double shift_ = 0.0;
};

class BlendImpl final : public ProfileImpl {
  public:
    BlendImpl(double k, double delta, double eps)
        : k_(k), delta_(delta), eps_(eps), lambda_(kPi / (8.0 * k)), len_(kPi / k),
          trans_(std::make_shared<const TransitionImpl>(k, delta, eps)) {
        if (delta > lambda_)
            throw std::invalid_argument("blend profile: need delta <= pi/(8k)");
    }

    double length() const override { return len_; }

    Jet jet(double r) const override {
        if (r <= lambda_) return trans_->jet(r);
        const Jet base = tapered_sine_jet(0.0, k_, r);
        if (r >= 2.0 * lambda_) return base;
        const Jet w = cutoff_jet(lambda_, r);
        return w * trans_->jet(r) + (1.0 - w) * base;
    }

    ProfileKind kind() const override { return ProfileKind::blended; }

    std::vector<double> seams() const override {
        std::vector<double> s{delta_, 2.0 * delta_, lambda_, 2.0 * lambda_};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end(),
                            [this](double a, double b) { return std::abs(a - b) < 1e-12 * len_; }),
                s.end());
        return s;
    }

    double branch_radius_left() const override { return delta_; }
    double branch_radius_right() const override { return len_ - 2.0 * lambda_; }

    ProfileDescriptor descriptor() const override {
        return {"blend",
                {{"k", k_}, {"delta", delta_}, {"eps", eps_}, {"blend_radius", lambda_},
                 {"shift", trans_->shift()}}};
    }

  private:
    double k_, delta_, eps_, lambda_, len_;
    std::shared_ptr<const TransitionImpl> trans_;
};

class BlendLimitImpl final : public ProfileImpl {
  public:
    BlendLimitImpl(double k, double eps)
        : k_(k), eps_(eps), lambda_(kPi / (8.0 * k)), len_(kPi / k) {
        if (!(k > 1.0)) throw std::invalid_argument("blend limit profile: k must be > 1");
        check_taper_range(k, eps, "blend limit profile");
    }

    double length() const override { return len_; }

    Jet jet(double r) const override {
        if (eps_ == 0.0) return tapered_sine_jet(0.0, k_, r);
        if (r <= lambda_) return tapered_sine_jet(eps_, k_, r);
        const Jet base = tapered_sine_jet(0.0, k_, r);
        if (r >= 2.0 * lambda_) return base;
        const Jet w = cutoff_jet(lambda_, r);
        return w * tapered_sine_jet(eps_, k_, r) + (1.0 - w) * base;
    }

    ProfileKind kind() const override { return ProfileKind::closed_form; }

    std::vector<double> seams() const override {
        if (eps_ == 0.0) return {};
        return {lambda_, 2.0 * lambda_};
    }

    double branch_radius_left() const override { return eps_ == 0.0 ? len_ : lambda_; }
    double branch_radius_right() const override {
        return eps_ == 0.0 ? len_ : len_ - 2.0 * lambda_;
    }

    ProfileDescriptor descriptor() const override {
        return {"blend_limit", {{"k", k_}, {"eps", eps_}, {"blend_radius", lambda_}}};
    }

  private:
    double k_, eps_, lambda_, len_;
};

class ConePointImpl final : public ProfileImpl {
  public:
    ConePointImpl(double k, double delta) : k_(k), delta_(delta) {
        if (!(k > 1.0)) throw std::invalid_argument("cone point profile: k must be > 1");
        if (!(delta > 0.0) || !(2.0 * delta < kPi / 2.0))
            throw std::invalid_argument("cone point profile: need 0 < delta < pi/4");
        table_ = HermiteTable([this](double r) { return integrand(r); }, delta_, 2.0 * delta_,
                              std::sin(delta_));
        shift_ = table_.end_value() - std::sin(2.0 * delta_) / k_;
    }

    double length() const override { return kPi; }

    Jet jet(double r) const override {
        // Symmetric about pi/2: gamma(pi - r) = gamma(r).
        if (r > kPi / 2.0) return reflect_jet(half_jet(kPi - r));
        return half_jet(r);
    }

    ProfileKind kind() const override { return ProfileKind::quadrature_backed; }

    std::vector<double> seams() const override {
        return {delta_, 2.0 * delta_, kPi - 2.0 * delta_, kPi - delta_};
    }

    double branch_radius_left() const override { return delta_; }
    double branch_radius_right() const override { return delta_; }

    ProfileDescriptor descriptor() const override {
        return {"cone_point", {{"k", k_}, {"delta", delta_}, {"shift", shift_}}};
    }

  private:
    // gamma' = (phi_delta + (1 - phi_delta)/k) * cos on the left half.
    Jet integrand(double r) const {
        const Jet w = cutoff_jet(delta_, r);
        return (w + (1.0 - w) / k_) * jet_cos(1.0, r);
    }

    Jet half_jet(double r) const {
        if (r <= delta_) return jet_sin(1.0, r);
        if (r < 2.0 * delta_) return antiderivative_jet(table_.value(r), integrand(r));
        return jet_sin(1.0, r) / k_ + shift_;
    }

    double k_, delta_;
    HermiteTable table_;
    double shift_ = 0.0;
};

class ScaledImpl final : public ProfileImpl {
  public:
    ScaledImpl(WarpProfile base, double c) : base_(std::move(base)), c_(c), s_(std::sqrt(c)) {
        if (!(c > 0.0)) throw std::invalid_argument("scaled profile: scale must be > 0");
    }

    double length() const override { return s_ * base_.length(); }

    Jet jet(double r) const override {
        // (scaled a)(r) = s * a(r/s), so the n-th derivative picks up s^(1-n).
        return jet_compose_affine(base_.jet(r / s_), 1.0 / s_) * s_;
    }

    ProfileKind kind() const override { return base_.kind(); }

    std::vector<double> seams() const override {
        std::vector<double> s = base_.seams();
        for (double& x : s) x *= s_;
        return s;
    }

    double branch_radius_left() const override { return s_ * base_.branch_radius_left(); }
    double branch_radius_right() const override { return s_ * base_.branch_radius_right(); }

    ProfileDescriptor descriptor() const override {
        ProfileDescriptor d = base_.descriptor();
        d.params.emplace_back("scale", c_);
        return d;
    }

  private:
    WarpProfile base_;
    double c_, s_;
};

}  // namespace

Jet WarpProfile::jet(double r) const {
    const double len = impl_->length();
    const double slack = 1e-12 * (1.0 + len);
    if (r < 0.0) {
        if (r < -slack) throw EvalError("profile evaluation outside [0, length]");
        r = 0.0;
    } else if (r > len) {
        if (r > len + slack) throw EvalError("profile evaluation outside [0, length]");
        r = len;
    }
    return impl_->jet(r);
}

double WarpProfile::eval(double r, int order) const {
    if (order < 0 || order > 3)
        throw std::invalid_argument("profile eval: order must be in [0, 3]");
    return jet(r).deriv(order);
}

WarpProfile make_tapered_sine_profile(double taper, double freq, double amp, double len,
                                      std::string family_tag) {
    return WarpProfile(
        std::make_shared<const TaperedSineImpl>(taper, freq, amp, len, std::move(family_tag)));
}

WarpProfile make_transition_profile(double k, double delta, double eps) {
    return WarpProfile(std::make_shared<const TransitionImpl>(k, delta, eps));
}

WarpProfile make_blend_profile(double k, double delta, double eps) {
    return WarpProfile(std::make_shared<const BlendImpl>(k, delta, eps));
}

WarpProfile make_blend_limit_profile(double k, double eps) {
    return WarpProfile(std::make_shared<const BlendLimitImpl>(k, eps));
}

WarpProfile make_cone_point_profile(double k, double delta) {
    return WarpProfile(std::make_shared<const ConePointImpl>(k, delta));
}

WarpProfile make_scaled_profile(const WarpProfile& base, double c) {
    return WarpProfile(std::make_shared<const ScaledImpl>(base, c));
}

}  // namespace warpgeom
