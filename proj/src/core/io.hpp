// Artifact serialization: CSV tables at 17 significant digits and
// deterministic JSON documents (insertion-ordered keys).
#pragma once

#include "core/certify.hpp"
#include "core/metric.hpp"
#include "core/soliton.hpp"

#include <string>
#include <vector>

namespace warpgeom {

// Shortest %.17g rendering; shared by every CSV writer.
std::string format_double(double v);

// Columns: r,a,a_prime,a_second,a_third over a uniform closed grid.
std::string profile_csv(const WarpedSphereMetric& metric, int samples);

// Columns: r,sec_rad,sec_sph over a uniform interior grid; the sec_sph cell
// is empty when m = 2.
std::string curvature_csv(const WarpedSphereMetric& metric, int samples);

// Columns: s,r2_lambda_max,r2_scal.
std::string cone_scan_csv(const std::vector<ConeScanRow>& rows);

// Columns: t,b,b_prime,f,f_prime,scal,sec_rad,sec_sph; decimated to at most
// max_rows rows, always keeping the final state.
std::string trajectory_csv(const SolitonSolution& sol, int max_rows = 20000);

std::string certificate_json(const Certificate& cert);

// Profile descriptor, dimensions, and the endpoint smoothness report.
std::string metric_json(const WarpedSphereMetric& metric);

struct SolitonRunInfo {
    bool from_shoot = false;
    double c_target = 0.0;
    int iterations = 0;
};

std::string soliton_json(const SolitonSolution& sol, const DecayMetrics& decay,
                         const SolitonRunInfo& info);

std::string power_fit_json(const PowerFit& fit);

} // namespace warpgeom
