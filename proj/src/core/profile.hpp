// Warp profiles a : [0, L] -> R backing rotationally symmetric metrics
// dr^2 + a(r)^2 g_{S^{m-1}}. Every profile evaluates as a derivative jet;
// pieces without a closed-form antiderivative interpolate the antiderivative
// from a quintic Hermite table while still taking derivatives analytically.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/jet.hpp"

namespace warpgeom {

enum class ProfileKind { closed_form, quadrature_backed, blended };

// Family tag plus the numeric parameters that reproduce the profile.
struct ProfileDescriptor {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
};

class ProfileImpl {
  public:
    virtual ~ProfileImpl() = default;
    virtual double length() const = 0;
    virtual Jet jet(double r) const = 0;
    virtual ProfileKind kind() const = 0;
    virtual ProfileDescriptor descriptor() const = 0;
    // Interior radii where the defining branch changes.
    virtual std::vector<double> seams() const { return {}; }
    // Distance from each endpoint over which a single closed-form branch is
    // valid; endpoint Taylor evaluation must stay inside it.
    virtual double branch_radius_left() const { return length(); }
    virtual double branch_radius_right() const { return length(); }
};

class WarpProfile {
  public:
    explicit WarpProfile(std::shared_ptr<const ProfileImpl> impl) : impl_(std::move(impl)) {}

    double length() const { return impl_->length(); }
    ProfileKind kind() const { return impl_->kind(); }
    ProfileDescriptor descriptor() const { return impl_->descriptor(); }
    std::vector<double> seams() const { return impl_->seams(); }
    double branch_radius_left() const { return impl_->branch_radius_left(); }
    double branch_radius_right() const { return impl_->branch_radius_right(); }

    // Full jet (derivatives through order 5); r in [0, L].
    Jet jet(double r) const;

    // Validated evaluation of a^(order), order in [0, 3].
    double eval(double r, int order = 0) const;

  private:
    std::shared_ptr<const ProfileImpl> impl_;
};

// amp * (1 - taper*r) sin(freq*r)/freq on [0, len]; the closed-form block
// behind round spheres, blend limits and the cone-point limit.
WarpProfile make_tapered_sine_profile(double taper, double freq, double amp, double len,
                                      std::string family_tag);

// Transition arc gamma on [0, pi/k]: sin(r) on [0, delta], then the
// derivative mix phi_delta*cos(r) + (1 - phi_delta)*b'(r) integrated across
// (delta, 2*delta), then the tapered sine b of taper eps and frequency k
// shifted by the accumulated constant.
WarpProfile make_transition_profile(double k, double delta, double eps);

// Blend of the transition arc into sin(k*r)/k near the far pole, weighted by
// the cutoff at lambda = pi/(8k). Equals sin(r) on [0, delta] and
// sin(k*r)/k on [pi/(4k), pi/k].
WarpProfile make_blend_profile(double k, double delta, double eps);

// delta -> 0 limit of the blend: cutoff-weighted mix of the tapered sine of
// taper eps with sin(k*r)/k. Closed form; singular at 0 when eps > 0.
WarpProfile make_blend_limit_profile(double k, double eps);

// Symmetric profile on [0, pi] whose derivative interpolates between cos(r)
// and cos(r)/k across (delta, 2*delta), with gamma(pi - r) = gamma(r):
// round caps of radius delta joined to the shallow arc sin(r)/k + shift.
WarpProfile make_cone_point_profile(double k, double delta);

// Metric scaling c * (dr^2 + a^2 g): profile sqrt(c) * a(r / sqrt(c)) on
// [0, sqrt(c) * L].
WarpProfile make_scaled_profile(const WarpProfile& base, double c);

}  // namespace warpgeom
