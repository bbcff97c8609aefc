// Named metric families assembled from the warp profiles.
#pragma once

#include "core/metric.hpp"

#include <string>

namespace warpgeom {

enum class FamilyId {
    round,             // constant curvature k^2, a(r) = sin(kr)/k
    blend,             // spherical cap, tapered collar, shallow arc sin(kr)/k
    blend_limit,       // collar width -> 0; curvature unbounded at r = 0 when eps > 0
    cone_point,        // round caps of radius delta joined to the shallow arc sin(r)/k
    cone_point_scaled, // cone_point rescaled by 1/k so the curvature floor is 1
    cone_point_limit,  // delta -> 0 limit of cone_point_scaled; cone angles at both ends
};

struct FamilyParams {
    FamilyId id = FamilyId::round;
    double k = 2.0;
    double delta = 0.1; // cap/collar width: blend, cone_point, cone_point_scaled
    double eps = 0.0;   // taper: blend, blend_limit
    int m = 3;          // sphere dimension
};

const char* family_name(FamilyId id);

// Throws std::invalid_argument for unknown names.
FamilyId family_from_name(const std::string& name);

// Builds the metric for the given family after validating parameter ranges.
WarpedSphereMetric make_family_metric(const FamilyParams& params);

} // namespace warpgeom
