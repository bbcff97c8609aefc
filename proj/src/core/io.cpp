#include "core/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace warpgeom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_object(const ProfileDescriptor& desc) {
    ordered_json obj = ordered_json::object();
    for (const auto& [name, value] : desc.params) obj[name] = value;
    return obj;
}

const char* outcome_name(SolitonOutcome outcome) {
    switch (outcome) {
    case SolitonOutcome::completed: return "completed";
    case SolitonOutcome::slope_exceeded: return "slope_exceeded";
    case SolitonOutcome::collapsed: return "collapsed";
    }
    return "unknown";
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string profile_csv(const WarpedSphereMetric& metric, int samples) {
    if (samples < 2) throw std::invalid_argument("profile_csv: samples must be >= 2");
    const double L = metric.length();
    std::string out = "r,a,a_prime,a_second,a_third\n";
    for (int i = 0; i < samples; ++i) {
        const double r = L * i / (samples - 1.0);
        out += format_double(r);
        for (int order = 0; order <= 3; ++order) {
            out += ',';
            out += format_double(metric.profile().eval(r, order));
        }
        out += '\n';
    }
    return out;
}

std::string curvature_csv(const WarpedSphereMetric& metric, int samples) {
    if (samples < 1) throw std::invalid_argument("curvature_csv: samples must be >= 1");
    const double L = metric.length();
    std::string out = "r,sec_rad,sec_sph\n";
    for (int i = 0; i < samples; ++i) {
        const double r = L * (i + 1) / (samples + 1.0);
        const SphereCurvature c = metric.curvature(r);
        out += format_double(r);
        out += ',';
        out += format_double(c.sec_rad);
        out += ',';
        if (c.has_sph) out += format_double(c.sec_sph);
        out += '\n';
    }
    return out;
}

std::string cone_scan_csv(const std::vector<ConeScanRow>& rows) {
    std::string out = "s,r2_lambda_max,r2_scal\n";
    for (const ConeScanRow& row : rows) {
        out += format_double(row.s);
        out += ',';
        out += format_double(row.r2_lambda_max);
        out += ',';
        out += format_double(row.r2_scal);
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const SolitonSolution& sol, int max_rows) {
    if (max_rows < 2) throw std::invalid_argument("trajectory_csv: max_rows must be >= 2");
    std::string out = "t,b,b_prime,f,f_prime,scal,sec_rad,sec_sph\n";
    const std::size_t count = sol.t.size();
    const std::size_t stride = (count + max_rows - 1) / max_rows;
    for (std::size_t i = 0; i < count; i += stride) {
        // Always end on the final state.
        const std::size_t j = (i + stride >= count) ? count - 1 : i;
        const double b = sol.b[j], u = sol.b_prime[j], v = sol.f_prime[j];
        out += format_double(sol.t[j]);
        out += ',';
        out += format_double(b);
        out += ',';
        out += format_double(u);
        out += ',';
        out += format_double(sol.f[j]);
        out += ',';
        out += format_double(v);
        out += ',';
        out += format_double(soliton_scal(sol.n, b, u, v));
        out += ',';
        out += format_double(soliton_sec_rad(sol.n, b, u, v));
        out += ',';
        out += format_double(soliton_sec_sph(b, u));
        out += '\n';
        if (j == count - 1) break;
    }
    return out;
}

std::string certificate_json(const Certificate& cert) {
    ordered_json doc;
    doc["region"] = {{"lo", cert.region.lo}, {"hi", cert.region.hi}};
    doc["bound"] = cert.bound;
    doc["grid_points"] = cert.grid_points;
    doc["min_margin"] = cert.min_margin;
    doc["argmin"] = cert.argmin;
    doc["tolerance"] = cert.tolerance;
    doc["verdict"] = cert.pass ? "pass" : "fail";
    ordered_json meta;
    meta["family"] = cert.profile.family;
    meta["params"] = params_object(cert.profile);
    meta["m"] = cert.m;
    meta["cutoff"] = cert.cutoff_tag;
    doc["metadata"] = meta;
    if (!cert.note.empty()) doc["note"] = cert.note;
    return doc.dump(2) + "\n";
}

std::string metric_json(const WarpedSphereMetric& metric) {
    const ProfileDescriptor desc = metric.profile().descriptor();
    const SmoothnessReport report = metric.smoothness_check();
    ordered_json doc;
    doc["family"] = desc.family;
    doc["params"] = params_object(desc);
    doc["m"] = metric.dim();
    doc["length"] = metric.length();
    ordered_json entries = ordered_json::array();
    for (const SmoothnessEntry& e : report.entries) {
        ordered_json row;
        row["order"] = e.order;
        row["at_zero"] = e.at_zero;
        row["at_length"] = e.at_length;
        row["checked"] = e.checked;
        if (e.checked) {
            row["expected_zero"] = e.expected_zero;
            row["expected_length"] = e.expected_length;
            row["tolerance"] = e.tolerance;
            row["pass"] = e.pass;
        }
        entries.push_back(row);
    }
    doc["smoothness"] = {{"pass", report.pass}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

std::string soliton_json(const SolitonSolution& sol, const DecayMetrics& decay,
                         const SolitonRunInfo& info) {
    ordered_json doc;
    doc["n"] = sol.n;
    doc["s0"] = sol.s0;
    doc["t0"] = sol.t0;
    doc["T"] = sol.T;
    doc["tol"] = sol.tol;
    doc["outcome"] = outcome_name(sol.outcome);
    doc["stop_time"] = sol.stop_time;
    doc["steps_accepted"] = sol.steps_accepted;
    doc["steps_rejected"] = sol.steps_rejected;
    doc["residual_max"] = sol.residual_max;
    doc["identity_drift"] = sol.identity_drift;
    if (info.from_shoot) {
        doc["shoot"] = {{"c_target", info.c_target},
                        {"s0_star", sol.s0},
                        {"iterations", info.iterations}};
    }
    ordered_json d;
    d["ascr"] = decay.ascr;
    d["potential_ratio"] = decay.potential_ratio;
    if (decay.has_exp_rate) {
        d["exp_rate"] = decay.exp_rate;
        d["exp_rate_r2"] = decay.exp_rate_r2;
    }
    d["settled"] = decay.settled;
    d["settle_gap"] = decay.settle_gap;
    doc["decay"] = d;
    return doc.dump(2) + "\n";
}

std::string power_fit_json(const PowerFit& fit) {
    ordered_json doc;
    doc["exponent"] = fit.exponent;
    doc["coefficient"] = fit.coefficient;
    doc["offset"] = fit.offset;
    doc["rms_residual"] = fit.rms_residual;
    doc["degenerate"] = fit.degenerate;
    return doc.dump(2) + "\n";
}

} // namespace warpgeom
