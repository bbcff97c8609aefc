#include "core/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace warpgeom {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

const char* family_name(FamilyId id) {
    switch (id) {
    case FamilyId::round: return "round";
    case FamilyId::blend: return "blend";
    case FamilyId::blend_limit: return "blend_limit";
    case FamilyId::cone_point: return "cone_point";
    case FamilyId::cone_point_scaled: return "cone_point_scaled";
    case FamilyId::cone_point_limit: return "cone_point_limit";
    }
    throw std::invalid_argument("families: unknown family id");
}

FamilyId family_from_name(const std::string& name) {
    for (FamilyId id : {FamilyId::round, FamilyId::blend, FamilyId::blend_limit,
                        FamilyId::cone_point, FamilyId::cone_point_scaled,
                        FamilyId::cone_point_limit}) {
        if (name == family_name(id)) return id;
    }
    throw std::invalid_argument("families: unknown family name '" + name + "'");
}

WarpedSphereMetric make_family_metric(const FamilyParams& p) {
    require(p.m >= 2, "families: m must be >= 2");
    switch (p.id) {
    case FamilyId::round:
        require(p.k >= 1.0, "round: k must be >= 1");
        return WarpedSphereMetric(
            make_tapered_sine_profile(0.0, p.k, 1.0, kPi / p.k, "round"), p.m);
    case FamilyId::blend:
        require(p.k >= 2.0, "blend: k must be >= 2");
        require(p.delta > 0.0 && p.delta <= kPi / (8.0 * p.k),
                "blend: delta must lie in (0, pi/(8k)]");
        return WarpedSphereMetric(make_blend_profile(p.k, p.delta, p.eps), p.m);
    case FamilyId::blend_limit:
        require(p.k >= 2.0, "blend_limit: k must be >= 2");
        return WarpedSphereMetric(make_blend_limit_profile(p.k, p.eps), p.m);
    case FamilyId::cone_point:
        require(p.k >= 2.0, "cone_point: k must be >= 2");
        require(p.delta > 0.0 && p.delta < kPi / 4.0,
                "cone_point: delta must lie in (0, pi/4)");
        return WarpedSphereMetric(make_cone_point_profile(p.k, p.delta), p.m);
    case FamilyId::cone_point_scaled: {
        require(p.k >= 2.0, "cone_point_scaled: k must be >= 2");
        require(p.delta > 0.0 && p.delta < kPi / 4.0,
                "cone_point_scaled: delta must lie in (0, pi/4)");
        WarpProfile base = make_cone_point_profile(p.k, p.delta);
        return WarpedSphereMetric(make_scaled_profile(base, 1.0 / p.k), p.m);
    }
    case FamilyId::cone_point_limit: {
        require(p.k >= 2.0, "cone_point_limit: k must be >= 2");
        // sqrt(k)^-3 sin(sqrt(k) s) on [0, pi/sqrt(k)]: the delta -> 0 limit
        // of cone_point_scaled. Cone angle 1/k at both poles.
        const double rk = std::sqrt(p.k);
        return WarpedSphereMetric(
            make_tapered_sine_profile(0.0, rk, 1.0 / p.k, kPi / rk, "cone_point_limit"),
            p.m);
    }
    }
    throw std::invalid_argument("families: unknown family id");
}

} // namespace warpgeom
