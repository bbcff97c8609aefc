// warpgeom command line tool: builds family metrics, certifies curvature
// bounds, runs limit studies and cone scans, shoots solitons, and summarizes
// emitted artifacts. All numerical work goes through the public C API.
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "warpgeom/warpgeom.h"

namespace fs = std::filesystem;
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

// Exit codes: 0 success, 1 certificate failure, 2 solver non-convergence or
// blow-up, 64 usage/validation error.
enum ExitCode { kOk = 0, kCertFail = 1, kNoConverge = 2, kUsage = 64 };

struct CliError {
    int code;
    std::string message;
};

void check(wg_status st) {
    if (st == WG_OK) return;
    const std::string what = wg_last_error();
    switch (st) {
    case WG_ERR_INVALID_ARG:
    case WG_ERR_DOMAIN: throw CliError{kUsage, what};
    case WG_ERR_NO_CONVERGENCE: throw CliError{kNoConverge, what};
    default: throw CliError{kNoConverge, what};
    }
}

std::string get_string(const std::function<wg_status(char*, size_t*)>& fn) {
    size_t len = 0;
    check(fn(nullptr, &len));
    std::string s(len, '\0');
    check(fn(s.data(), &len));
    s.resize(len - 1);
    return s;
}

struct MetricHandle {
    wg_metric* h = nullptr;
    MetricHandle() = default;
    explicit MetricHandle(wg_metric* raw) : h(raw) {}
    MetricHandle(const MetricHandle&) = delete;
    MetricHandle& operator=(const MetricHandle&) = delete;
    MetricHandle(MetricHandle&& o) noexcept : h(o.h) { o.h = nullptr; }
    MetricHandle& operator=(MetricHandle&& o) noexcept {
        std::swap(h, o.h);
        return *this;
    }
    ~MetricHandle() { wg_metric_free(h); }
};

struct SolitonHandle {
    wg_soliton* h = nullptr;
    ~SolitonHandle() { wg_soliton_free(h); }
};

struct CertHandle {
    wg_certificate* h = nullptr;
    ~CertHandle() { wg_certificate_free(h); }
};

// Family parameters shared by several subcommands; delta keeps a NaN
// sentinel until a family-specific default is resolved.
struct FamilyOpts {
    std::string family = "blend";
    double k = 2.0;
    double delta = std::numeric_limits<double>::quiet_NaN();
    double eps = 0.0;
    int m = 3;
};

void resolve_delta(FamilyOpts& o) {
    if (!std::isnan(o.delta)) return;
    if (o.family == "blend")
        o.delta = kPi / (16.0 * o.k);
    else
        o.delta = 0.2;
}

MetricHandle open_metric(const FamilyOpts& o) {
    wg_metric* h = nullptr;
    wg_status st;
    if (o.family == "round")
        st = wg_metric_round(o.k, o.m, &h);
    else if (o.family == "blend")
        st = wg_metric_blend(o.k, o.delta, o.eps, o.m, &h);
    else if (o.family == "blend_limit")
        st = wg_metric_blend_limit(o.k, o.eps, o.m, &h);
    else if (o.family == "cone_point")
        st = wg_metric_cone_point(o.k, o.delta, o.m, &h);
    else if (o.family == "cone_point_scaled")
        st = wg_metric_cone_point_scaled(o.k, o.delta, o.m, &h);
    else if (o.family == "cone_point_limit")
        st = wg_metric_cone_point_limit(o.k, o.m, &h);
    else
        throw CliError{kUsage, "unknown family '" + o.family + "'"};
    check(st);
    return MetricHandle(h);
}

// Values not set on the command line can come from a JSON config file;
// explicit flags win.
struct ConfigBinding {
    std::vector<std::function<void(const json&)>> appliers;

    void bind(CLI::Option* opt, const char* key, double* dst) {
        appliers.push_back([opt, key, dst](const json& j) {
            if (opt->count() == 0 && j.contains(key)) *dst = j.at(key).get<double>();
        });
    }
    void bind(CLI::Option* opt, const char* key, int* dst) {
        appliers.push_back([opt, key, dst](const json& j) {
            if (opt->count() == 0 && j.contains(key)) *dst = j.at(key).get<int>();
        });
    }
    void bind(CLI::Option* opt, const char* key, std::string* dst) {
        appliers.push_back([opt, key, dst](const json& j) {
            if (opt->count() == 0 && j.contains(key))
                *dst = j.at(key).get<std::string>();
        });
    }
    void bind(CLI::Option* opt, const char* key, bool* dst) {
        appliers.push_back([opt, key, dst](const json& j) {
            if (opt->count() == 0 && j.contains(key)) *dst = j.at(key).get<bool>();
        });
    }

    void apply(const std::string& config_path) {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw CliError{kUsage, "cannot open config file " + config_path};
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw CliError{kUsage, std::string("config parse error: ") + e.what()};
        }
        for (auto& f : appliers) f(j);
    }
};

struct OutputDir {
    std::string dir_str;
    bool force = false;
    fs::path dir;

    void prepare() {
        if (dir_str.empty()) {
            const char* env = std::getenv("WARPGEOM_OUT");
            dir = (env && *env) ? fs::path(env) : fs::path("out");
        } else {
            dir = dir_str;
        }
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw CliError{kUsage, "cannot create output directory " + dir.string()};
    }

    fs::path write(const std::string& name, const std::string& content) const {
        const fs::path path = dir / name;
        if (fs::exists(path) && !force)
            throw CliError{kUsage,
                           "refusing to overwrite " + path.string() + " (use --force)"};
        std::ofstream out(path, std::ios::binary);
        if (!out.write(content.data(), static_cast<std::streamsize>(content.size())))
            throw CliError{kNoConverge, "failed to write " + path.string()};
        return path;
    }
};

void add_family_options(CLI::App* cmd, FamilyOpts& fam, ConfigBinding& cfg) {
    cfg.bind(cmd->add_option("--family", fam.family,
                             "round|blend|blend_limit|cone_point|cone_point_scaled|"
                             "cone_point_limit"),
             "family", &fam.family);
    cfg.bind(cmd->add_option("--k", fam.k, "frequency / cone parameter"), "k", &fam.k);
    cfg.bind(cmd->add_option("--delta", fam.delta, "cap or collar width"), "delta",
             &fam.delta);
    cfg.bind(cmd->add_option("--eps", fam.eps, "taper"), "eps", &fam.eps);
    cfg.bind(cmd->add_option("--m", fam.m, "sphere dimension (default 3)"), "m",
             &fam.m);
}

void add_output_options(CLI::App* cmd, OutputDir& out, std::string& config,
                        ConfigBinding& cfg) {
    cfg.bind(cmd->add_option("--out", out.dir_str,
                             "output directory (default $WARPGEOM_OUT or ./out)"),
             "out", &out.dir_str);
    cfg.bind(cmd->add_flag("--force", out.force, "overwrite existing artifacts"),
             "force", &out.force);
    cmd->add_option("--config", config, "JSON config file; flags win on conflict");
}

// ----------------------------------------------------------------- family --

int run_family(FamilyOpts fam, OutputDir out, int samples, double scale) {
    resolve_delta(fam);
    MetricHandle metric = open_metric(fam);
    if (!std::isnan(scale)) {
        wg_metric* scaled = nullptr;
        check(wg_metric_scale(metric.h, scale, &scaled));
        metric = MetricHandle(scaled);
    }
    out.prepare();

    const std::string profile = get_string([&](char* b, size_t* l) {
        return wg_profile_csv(metric.h, samples, b, l);
    });
    const std::string curvature = get_string([&](char* b, size_t* l) {
        return wg_curvature_csv(metric.h, samples, b, l);
    });
    const std::string summary = get_string([&](char* b, size_t* l) {
        return wg_metric_json(metric.h, b, l);
    });
    out.write("profile.csv", profile);
    out.write("curvature.csv", curvature);
    out.write("family.json", summary);

    int smooth = 0;
    check(wg_smoothness_pass(metric.h, &smooth));
    std::cout << "family " << fam.family << " (k=" << fam.k << ", delta=" << fam.delta
              << ", eps=" << fam.eps << ", m=" << fam.m << ")\n"
              << "  smoothness: " << (smooth ? "pass" : "fail (singular profile)")
              << "\n  artifacts: profile.csv curvature.csv family.json in "
              << out.dir.string() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- certify --

struct CertifyOpts {
    FamilyOpts fam;
    double bound = 1.0;
    double lo = 0.0;
    double hi = std::numeric_limits<double>::quiet_NaN(); // default: length
    int grid = 10000;
    double tol = 1e-5;
    bool auto_constants = false;
    bool plateau = false;
    double sigma = 0.1;
    int search_grid = 512;
    double search_tol = 1e-6;
};

int emit_certificate(const OutputDir& out, wg_metric* metric, double bound, double lo,
                     double hi, int grid, double tol, const std::string& name,
                     bool* passed) {
    CertHandle cert;
    check(wg_certify(metric, bound, lo, hi, grid, tol, &cert.h));
    const std::string doc = get_string([&](char* b, size_t* l) {
        return wg_certificate_json(cert.h, b, l);
    });
    out.write(name, doc);
    int pass = 0;
    double margin = 0.0, argmin = 0.0;
    check(wg_certificate_pass(cert.h, &pass));
    check(wg_certificate_margin(cert.h, &margin, &argmin));
    std::cout << "  " << name << ": " << (pass ? "pass" : "FAIL")
              << " (bound " << bound << ", min margin " << margin << " at r=" << argmin
              << ")\n";
    *passed = pass != 0;
    return pass ? kOk : kCertFail;
}

int run_certify(CertifyOpts o, OutputDir out) {
    out.prepare();
    bool all_pass = true;

    if (o.auto_constants) {
        double eps_max = 0.0, eps_plateau = 0.0;
        check(wg_find_eps_max(o.fam.k, o.search_grid, o.search_tol, &eps_max));
        check(wg_find_eps_plateau(o.fam.k, o.sigma, o.search_grid, o.search_tol,
                                  &eps_plateau));
        const double eps = 0.5 * std::min(eps_max, eps_plateau);
        double delta_max = 0.0;
        check(wg_find_delta_max(o.fam.k, o.sigma, eps, o.search_grid, o.search_tol,
                                &delta_max));
        const double delta = 0.5 * delta_max;

        ordered_json constants;
        constants["k"] = o.fam.k;
        constants["sigma"] = o.sigma;
        constants["eps_max"] = eps_max;
        constants["eps_plateau"] = eps_plateau;
        constants["eps"] = eps;
        constants["delta_max"] = delta_max;
        constants["delta"] = delta;
        constants["search_grid"] = o.search_grid;
        constants["search_tol"] = o.search_tol;
        out.write("constants.json", constants.dump(2) + "\n");
        std::cout << "  constants: eps_max=" << eps_max
                  << " eps_plateau=" << eps_plateau << " eps=" << eps
                  << " delta_max=" << delta_max << " delta=" << delta << "\n";

        wg_metric* raw = nullptr;
        check(wg_metric_blend(o.fam.k, delta, eps, o.fam.m, &raw));
        MetricHandle metric(raw);
        double length = 0.0;
        check(wg_metric_length(metric.h, &length));

        bool pass = false;
        int rc = emit_certificate(out, metric.h, 1.0, 0.0, length, o.grid, o.tol,
                                  "certificate.json", &pass);
        all_pass = all_pass && pass;
        if (o.plateau) {
            const double plateau_bound = o.fam.k * o.fam.k / (1.0 + o.sigma);
            rc = emit_certificate(out, metric.h, plateau_bound, 2.0 * delta,
                                  kPi / (4.0 * o.fam.k), o.grid, o.tol,
                                  "certificate_plateau.json", &pass);
            all_pass = all_pass && pass;
        }
        (void)rc;
        return all_pass ? kOk : kCertFail;
    }

    resolve_delta(o.fam);
    MetricHandle metric = open_metric(o.fam);
    double length = 0.0;
    check(wg_metric_length(metric.h, &length));
    const double hi = std::isnan(o.hi) ? length : o.hi;
    bool pass = false;
    emit_certificate(out, metric.h, o.bound, o.lo, hi, o.grid, o.tol,
                     "certificate.json", &pass);
    return pass ? kOk : kCertFail;
}

// ----------------------------------------------------------------- limits --

struct LimitsOpts {
    double k = 2.0;
    double eps = 0.05;
    double delta_start = std::numeric_limits<double>::quiet_NaN();
    int count = 6;
    int grid = 2048;
    double r_min = 1e-4;
    double r_max = 1e-2;
    int m = 3;
};

int run_limits(LimitsOpts o, OutputDir out) {
    out.prepare();
    if (std::isnan(o.delta_start)) o.delta_start = kPi / (16.0 * o.k);

    ordered_json doc;
    doc["k"] = o.k;
    doc["eps"] = o.eps;
    doc["delta_start"] = o.delta_start;

    // Collar width -> 0: the blend profiles approach the singular limit in
    // sup norm.
    MetricHandle limit(nullptr);
    {
        wg_metric* raw = nullptr;
        check(wg_metric_blend_limit(o.k, o.eps, o.m, &raw));
        limit = MetricHandle(raw);
    }
    ordered_json blend_rows = ordered_json::array();
    double delta = o.delta_start;
    for (int i = 0; i < o.count; ++i, delta *= 0.5) {
        wg_metric* raw = nullptr;
        check(wg_metric_blend(o.k, delta, o.eps, o.m, &raw));
        MetricHandle member(raw);
        double dist = 0.0;
        check(wg_sup_distance(member.h, limit.h, o.grid, 0, &dist));
        blend_rows.push_back(ordered_json{{"delta", delta}, {"sup_distance", dist}});
    }
    doc["blend_to_limit"] = blend_rows;

    // Same study for the cone-point caps against their closed-form limit.
    MetricHandle cone_limit(nullptr);
    {
        wg_metric* raw = nullptr;
        check(wg_metric_cone_point_limit(o.k, o.m, &raw));
        cone_limit = MetricHandle(raw);
    }
    ordered_json cone_rows = ordered_json::array();
    delta = std::min(o.delta_start, 0.5);
    for (int i = 0; i < o.count; ++i, delta *= 0.5) {
        wg_metric* raw = nullptr;
        check(wg_metric_cone_point_scaled(o.k, delta, o.m, &raw));
        MetricHandle member(raw);
        double dist = 0.0;
        check(wg_sup_distance(member.h, cone_limit.h, o.grid, 0, &dist));
        cone_rows.push_back(ordered_json{{"delta", delta}, {"sup_distance", dist}});
    }
    doc["cone_point_to_limit"] = cone_rows;

    // Curvature blow-up rate of the singular limit near r = 0.
    double exponent = 0.0, coefficient = 0.0, offset = 0.0;
    int degenerate = 0;
    check(wg_blowup_rate(limit.h, o.r_min, o.r_max, 64, &exponent, &coefficient,
                         &offset, &degenerate));
    doc["blowup"] = ordered_json{{"exponent", exponent},
                                 {"coefficient", coefficient},
                                 {"offset", offset},
                                 {"degenerate", degenerate != 0}};

    out.write("limits.json", doc.dump(2) + "\n");
    std::cout << "  limit study: " << o.count << " collar widths, blow-up exponent "
              << exponent << ", coefficient " << coefficient << "\n  artifacts: limits.json in "
              << out.dir.string() << "\n";
    return kOk;
}

// --------------------------------------------------------------- cone-scan --

struct ConeScanOpts {
    FamilyOpts fam;
    double s_min = 1e-3;
    double s_max = std::numeric_limits<double>::quiet_NaN(); // default: length/2
    int count = 64;
};

int run_cone_scan(ConeScanOpts o, OutputDir out) {
    o.fam.family = o.fam.family.empty() ? "blend_limit" : o.fam.family;
    resolve_delta(o.fam);
    MetricHandle link = open_metric(o.fam);
    out.prepare();

    double length = 0.0;
    check(wg_metric_length(link.h, &length));
    const double s_max = std::isnan(o.s_max) ? 0.5 * length : o.s_max;

    const std::string csv = get_string([&](char* b, size_t* l) {
        return wg_cone_scan_csv(link.h, o.s_min, s_max, o.count, b, l);
    });
    out.write("conescan.csv", csv);

    double max_lambda = 0.0, max_scal = 0.0;
    check(wg_cone_scan_max(link.h, o.s_min, s_max, o.count, &max_lambda, &max_scal));
    ordered_json doc;
    doc["link_family"] = o.fam.family;
    doc["k"] = o.fam.k;
    doc["eps"] = o.fam.eps;
    doc["s_min"] = o.s_min;
    doc["s_max"] = s_max;
    doc["count"] = o.count;
    doc["max_r2_lambda_max"] = max_lambda;
    doc["max_r2_scal"] = max_scal;
    out.write("conescan.json", doc.dump(2) + "\n");

    std::cout << "  cone scan over " << o.fam.family << ": max r2*lambda_max="
              << max_lambda << ", max r2*scal=" << max_scal
              << "\n  artifacts: conescan.csv conescan.json in " << out.dir.string()
              << "\n";
    return kOk;
}

// ---------------------------------------------------------------- soliton --

struct SolitonOpts {
    int n = 3;
    double c = std::numeric_limits<double>::quiet_NaN();
    double s0 = std::numeric_limits<double>::quiet_NaN();
    double T = 50.0;
    double t0 = 1e-3;
    double tol = 1e-10;
    double shoot_tol = 1e-8;
    int max_rows = 20000;
};

int run_soliton(SolitonOpts o, OutputDir out) {
    const bool shoot_mode = !std::isnan(o.c);
    const bool integrate_mode = !std::isnan(o.s0);
    if (shoot_mode == integrate_mode)
        throw CliError{kUsage, "specify exactly one of --c (shoot) or --s0 (integrate)"};
    out.prepare();

    SolitonHandle sol;
    if (shoot_mode)
        check(wg_soliton_shoot(o.n, o.c, o.shoot_tol, o.t0, o.T, o.tol, &sol.h));
    else
        check(wg_soliton_integrate(o.n, o.s0, o.t0, o.T, o.tol, &sol.h));

    const std::string csv = get_string([&](char* b, size_t* l) {
        return wg_trajectory_csv(sol.h, o.max_rows, b, l);
    });
    const std::string summary = get_string([&](char* b, size_t* l) {
        return wg_soliton_json(sol.h, b, l);
    });
    out.write("trajectory.csv", csv);
    out.write("soliton.json", summary);

    int outcome = 0;
    double s0_star = 0.0, drift = 0.0;
    check(wg_soliton_outcome(sol.h, &outcome));
    check(wg_soliton_s0(sol.h, &s0_star));
    check(wg_soliton_drift(sol.h, &drift));
    std::cout << "  soliton n=" << o.n;
    if (shoot_mode) std::cout << " c=" << o.c << " -> s0*=" << s0_star;
    else std::cout << " s0=" << o.s0;
    std::cout << ", identity drift " << drift << "\n";

    if (outcome == 0) {
        int settled = 0;
        double ascr = 0.0, ratio = 0.0, rate = 0.0, r2 = 0.0;
        int has_rate = 0;
        check(wg_soliton_decay(sol.h, &ascr, &ratio, &rate, &r2, &has_rate, &settled));
        std::cout << "  decay: ascr=" << ascr << " f(T)/T^2=" << ratio;
        if (has_rate) std::cout << " exp_rate=" << rate << " (R2=" << r2 << ")";
        std::cout << "\n";
        if (!settled)
            std::cerr << "warning: slope not settled at T; consider a larger --T\n";
    } else {
        std::cerr << "warning: integration stopped early (outcome "
                  << (outcome == 1 ? "slope_exceeded" : "collapsed") << ")\n";
    }
    std::cout << "  artifacts: trajectory.csv soliton.json in " << out.dir.string()
              << "\n";
    return outcome == 0 ? kOk : kNoConverge;
}

// ----------------------------------------------------------------- report --

int run_report(OutputDir out) {
    out.prepare();
    std::ostringstream md;
    md << "# warpgeom run report\n\n";
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(out.dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    if (files.empty()) md << "No JSON artifacts found.\n";
    for (const fs::path& path : files) {
        std::ifstream in(path);
        json j;
        try {
            in >> j;
        } catch (const std::exception&) {
            md << "## " << path.filename().string() << "\n\nunreadable\n\n";
            continue;
        }
        md << "## " << path.filename().string() << "\n\n";
        if (j.contains("verdict")) {
            md << "- verdict: **" << j["verdict"].get<std::string>() << "**\n";
            md << "- bound: " << j["bound"] << ", min margin: " << j["min_margin"]
               << " at r=" << j["argmin"] << "\n";
            md << "- grid points: " << j["grid_points"] << "\n";
            if (j.contains("metadata"))
                md << "- family: " << j["metadata"]["family"] << "\n";
        } else if (j.contains("outcome")) {
            md << "- outcome: " << j["outcome"] << ", n=" << j["n"]
               << ", s0=" << j["s0"] << "\n";
            md << "- identity drift: " << j["identity_drift"] << "\n";
            if (j.contains("decay"))
                md << "- ascr: " << j["decay"]["ascr"]
                   << ", f(T)/T^2: " << j["decay"]["potential_ratio"] << "\n";
        } else if (j.contains("smoothness")) {
            md << "- family: " << j["family"] << ", length: " << j["length"] << "\n";
            md << "- smoothness: "
               << (j["smoothness"]["pass"].get<bool>() ? "pass" : "fail") << "\n";
        } else {
            for (auto it = j.begin(); it != j.end(); ++it)
                if (!it->is_structured()) md << "- " << it.key() << ": " << *it << "\n";
        }
        md << "\n";
    }

    const std::string text = md.str();
    // The report always overwrites: it summarizes the other artifacts.
    const fs::path path = out.dir / "report.md";
    std::ofstream f(path, std::ios::binary);
    f << text;
    std::cout << text;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"warped-metric curvature certification and soliton shooting"};
    app.require_subcommand(1);

    // family
    FamilyOpts fam_opts;
    OutputDir fam_out;
    std::string fam_config;
    int fam_samples = 512;
    double fam_scale = std::numeric_limits<double>::quiet_NaN();
    ConfigBinding fam_cfg;
    CLI::App* fam_cmd = app.add_subcommand("family", "emit profile and smoothness artifacts");
    add_family_options(fam_cmd, fam_opts, fam_cfg);
    fam_cfg.bind(fam_cmd->add_option("--samples", fam_samples, "CSV sample count"),
                 "samples", &fam_samples);
    fam_cfg.bind(fam_cmd->add_option("--scale", fam_scale, "scale the metric by c"),
                 "scale", &fam_scale);
    add_output_options(fam_cmd, fam_out, fam_config, fam_cfg);

    // certify
    CertifyOpts cert_opts;
    OutputDir cert_out;
    std::string cert_config;
    ConfigBinding cert_cfg;
    CLI::App* cert_cmd = app.add_subcommand("certify", "certify a curvature lower bound");
    add_family_options(cert_cmd, cert_opts.fam, cert_cfg);
    cert_cfg.bind(cert_cmd->add_option("--bound", cert_opts.bound, "claimed lower bound"),
                  "bound", &cert_opts.bound);
    cert_cfg.bind(cert_cmd->add_option("--lo", cert_opts.lo, "region start"), "lo",
                  &cert_opts.lo);
    cert_cfg.bind(cert_cmd->add_option("--hi", cert_opts.hi, "region end (default length)"),
                  "hi", &cert_opts.hi);
    cert_cfg.bind(cert_cmd->add_option("--grid", cert_opts.grid, "grid size"), "grid",
                  &cert_opts.grid);
    cert_cfg.bind(cert_cmd->add_option("--tol", cert_opts.tol, "margin tolerance"),
                  "tol", &cert_opts.tol);
    cert_cfg.bind(cert_cmd->add_flag("--auto-constants", cert_opts.auto_constants,
                                     "search eps/delta, then certify bound 1"),
                  "auto_constants", &cert_opts.auto_constants);
    cert_cfg.bind(cert_cmd->add_flag("--plateau", cert_opts.plateau,
                                     "also certify the steep-arc plateau bound"),
                  "plateau", &cert_opts.plateau);
    cert_cfg.bind(cert_cmd->add_option("--sigma", cert_opts.sigma, "plateau slack"),
                  "sigma", &cert_opts.sigma);
    cert_cfg.bind(cert_cmd->add_option("--search-grid", cert_opts.search_grid,
                                       "grid for the constant searches"),
                  "search_grid", &cert_opts.search_grid);
    cert_cfg.bind(cert_cmd->add_option("--search-tol", cert_opts.search_tol,
                                       "relative width for the bisections"),
                  "search_tol", &cert_opts.search_tol);
    add_output_options(cert_cmd, cert_out, cert_config, cert_cfg);

    // limits
    LimitsOpts lim_opts;
    OutputDir lim_out;
    std::string lim_config;
    ConfigBinding lim_cfg;
    CLI::App* lim_cmd = app.add_subcommand("limits", "collar-width convergence and blow-up study");
    lim_cfg.bind(lim_cmd->add_option("--k", lim_opts.k, "frequency"), "k", &lim_opts.k);
    lim_cfg.bind(lim_cmd->add_option("--eps", lim_opts.eps, "taper"), "eps",
                 &lim_opts.eps);
    lim_cfg.bind(lim_cmd->add_option("--delta-start", lim_opts.delta_start,
                                     "largest collar width (halved count times)"),
                 "delta_start", &lim_opts.delta_start);
    lim_cfg.bind(lim_cmd->add_option("--count", lim_opts.count, "number of widths"),
                 "count", &lim_opts.count);
    lim_cfg.bind(lim_cmd->add_option("--grid", lim_opts.grid, "sup-distance grid"),
                 "grid", &lim_opts.grid);
    lim_cfg.bind(lim_cmd->add_option("--r-min", lim_opts.r_min, "fit window start"),
                 "r_min", &lim_opts.r_min);
    lim_cfg.bind(lim_cmd->add_option("--r-max", lim_opts.r_max, "fit window end"),
                 "r_max", &lim_opts.r_max);
    lim_cfg.bind(lim_cmd->add_option("--m", lim_opts.m, "sphere dimension"), "m",
                 &lim_opts.m);
    add_output_options(lim_cmd, lim_out, lim_config, lim_cfg);

    // cone-scan
    ConeScanOpts scan_opts;
    scan_opts.fam.family = "blend_limit";
    scan_opts.fam.eps = 0.05;
    OutputDir scan_out;
    std::string scan_config;
    ConfigBinding scan_cfg;
    CLI::App* scan_cmd = app.add_subcommand("cone-scan", "scale-invariant cone curvature ratios");
    add_family_options(scan_cmd, scan_opts.fam, scan_cfg);
    scan_cfg.bind(scan_cmd->add_option("--s-min", scan_opts.s_min, "smallest link position"),
                  "s_min", &scan_opts.s_min);
    scan_cfg.bind(scan_cmd->add_option("--s-max", scan_opts.s_max,
                                       "largest link position (default length/2)"),
                  "s_max", &scan_opts.s_max);
    scan_cfg.bind(scan_cmd->add_option("--count", scan_opts.count, "rows"), "count",
                  &scan_opts.count);
    add_output_options(scan_cmd, scan_out, scan_config, scan_cfg);

    // soliton
    SolitonOpts sol_opts;
    OutputDir sol_out;
    std::string sol_config;
    ConfigBinding sol_cfg;
    CLI::App* sol_cmd = app.add_subcommand("soliton", "integrate or shoot an expanding soliton");
    sol_cfg.bind(sol_cmd->add_option("--n", sol_opts.n, "dimension (>= 2)"), "n",
                 &sol_opts.n);
    sol_cfg.bind(sol_cmd->add_option("--c", sol_opts.c, "target cone slope in (0, 1]"),
                 "c", &sol_opts.c);
    sol_cfg.bind(sol_cmd->add_option("--s0", sol_opts.s0, "tip scalar curvature"),
                 "s0", &sol_opts.s0);
    sol_cfg.bind(sol_cmd->add_option("--T", sol_opts.T, "final time"), "T", &sol_opts.T);
    sol_cfg.bind(sol_cmd->add_option("--t0", sol_opts.t0, "tip start time"), "t0",
                 &sol_opts.t0);
    sol_cfg.bind(sol_cmd->add_option("--tol", sol_opts.tol, "step tolerance"), "tol",
                 &sol_opts.tol);
    sol_cfg.bind(sol_cmd->add_option("--shoot-tol", sol_opts.shoot_tol,
                                     "slope matching tolerance"),
                 "shoot_tol", &sol_opts.shoot_tol);
    sol_cfg.bind(sol_cmd->add_option("--max-rows", sol_opts.max_rows,
                                     "trajectory CSV row cap"),
                 "max_rows", &sol_opts.max_rows);
    add_output_options(sol_cmd, sol_out, sol_config, sol_cfg);

    // report
    OutputDir rep_out;
    std::string rep_config;
    ConfigBinding rep_cfg;
    CLI::App* rep_cmd = app.add_subcommand("report", "summarize artifacts in the output directory");
    add_output_options(rep_cmd, rep_out, rep_config, rep_cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*fam_cmd) {
            fam_cfg.apply(fam_config);
            return run_family(fam_opts, std::move(fam_out), fam_samples, fam_scale);
        }
        if (*cert_cmd) {
            cert_cfg.apply(cert_config);
            return run_certify(cert_opts, std::move(cert_out));
        }
        if (*lim_cmd) {
            lim_cfg.apply(lim_config);
            return run_limits(lim_opts, std::move(lim_out));
        }
        if (*scan_cmd) {
            scan_cfg.apply(scan_config);
            return run_cone_scan(scan_opts, std::move(scan_out));
        }
        if (*sol_cmd) {
            sol_cfg.apply(sol_config);
            return run_soliton(sol_opts, std::move(sol_out));
        }
        if (*rep_cmd) {
            rep_cfg.apply(rep_config);
            return run_report(std::move(rep_out));
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoConverge;
    }
    return kUsage;
}
