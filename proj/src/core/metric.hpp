// Rotationally symmetric metrics dr^2 + a(r)^2 g_{S^(m-1)} on the m-sphere,
// their curvature-operator spectrum, endpoint smoothness checks, and the cone
// construction dr^2 + r^2 g_X over such a sphere.
#pragma once

#include <vector>

#include "core/profile.hpp"

namespace warpgeom {

// Eigenvalues of the curvature operator at a point: the radial plane value
// -a''/a and, for m >= 3, the purely spherical value (1 - a'^2)/a^2.
struct SphereCurvature {
    double sec_rad = 0.0;
    double sec_sph = 0.0;
    bool has_sph = false;
};

struct SpectrumBand {
    double value = 0.0;
    int multiplicity = 0;
};

struct CurvatureSpectrum {
    std::vector<SpectrumBand> bands;

    double min() const;
    double max() const;
    // Scalar curvature = 2 * sum of value * multiplicity over the bands.
    double scal() const;
};

// One endpoint derivative check: a^(order) estimated one-sidedly by finite
// differences against the closed condition (NaN expected means unconstrained).
struct SmoothnessEntry {
    int order = 0;
    double at_zero = 0.0;
    double at_length = 0.0;
    double expected_zero = 0.0;
    double expected_length = 0.0;
    double tolerance = 0.0;
    bool checked = false;
    bool pass = true;
};

struct SmoothnessReport {
    std::vector<SmoothnessEntry> entries;
    bool pass = true;
};

class WarpedSphereMetric {
  public:
    WarpedSphereMetric(WarpProfile profile, int m);

    const WarpProfile& profile() const { return profile_; }
    int dim() const { return m_; }
    double length() const { return profile_.length(); }

    // Curvature at interior radius r. Within an endpoint band of width
    // 1e-3 * length (clipped to the closed-form branch radius) the values
    // come from cancellation-free Taylor ratios in the endpoint distance;
    // elsewhere directly from the profile jet.
    SphereCurvature curvature(double r) const;

    CurvatureSpectrum spectrum(double r) const;

    // The metric scaled by c (radii stretch by sqrt(c), curvature by 1/c).
    WarpedSphereMetric scaled(double c) const;

    // Checks a(0)=0, a'(0)=1, a''=0, a''''=0 and the mirrored conditions at
    // the far end with one-sided finite differences; order 3 is reported but
    // unconstrained. A failure flags a profile that does not close smoothly.
    SmoothnessReport smoothness_check() const;

  private:
    WarpProfile profile_;
    int m_;
};

// Cone dr^2 + r^2 g_X over the cross-section metric (radius coordinate r > 0,
// cross-section point at arc position s).
class ConeMetric {
  public:
    explicit ConeMetric(WarpedSphereMetric link);

    const WarpedSphereMetric& link() const { return link_; }
    int dim() const { return link_.dim() + 1; }

    // Curvature-operator spectrum at cone radius r over the link point s:
    // planes containing the radial direction are flat; the remaining
    // eigenvalues are (link eigenvalue - 1) / r^2.
    CurvatureSpectrum spectrum(double r, double s) const;

    double scal(double r, double s) const;

  private:
    WarpedSphereMetric link_;
};

}  // namespace warpgeom
