#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include <warpgeom/warpgeom.h>

using nlohmann::json;

namespace {
constexpr double kPi = std::numbers::pi;

// Query-then-fill wrapper around the string getter protocol.
template <typename Fn>
std::string get_string(Fn&& fn) {
    size_t len = 0;
    REQUIRE(fn(nullptr, &len) == WG_OK);
    REQUIRE(len > 0);
    std::vector<char> buf(len);
    REQUIRE(fn(buf.data(), &len) == WG_OK);
    REQUIRE(len == buf.size());
    return std::string(buf.data());
}
}  // namespace

TEST_CASE("version and error strings are always available") {
    REQUIRE(wg_version() != nullptr);
    CHECK(std::string(wg_version()) == "1.0.0");
    REQUIRE(wg_last_error() != nullptr);
}

TEST_CASE("round metric lifecycle") {
    wg_metric* m = nullptr;
    REQUIRE(wg_metric_round(1.0, 3, &m) == WG_OK);
    REQUIRE(m != nullptr);

    double len = 0.0;
    CHECK(wg_metric_length(m, &len) == WG_OK);
    CHECK(len == doctest::Approx(kPi).epsilon(1e-15));
    int dim = 0;
    CHECK(wg_metric_dim(m, &dim) == WG_OK);
    CHECK(dim == 3);

    double a = 0.0;
    CHECK(wg_profile_eval(m, 0.7, 0, &a) == WG_OK);
    CHECK(a == doctest::Approx(std::sin(0.7)).epsilon(1e-15));

    double sec_rad = 0.0, sec_sph = 0.0;
    int has_sph = 0;
    CHECK(wg_curvature(m, 1.2, &sec_rad, &sec_sph, &has_sph) == WG_OK);
    CHECK(has_sph == 1);
    CHECK(sec_rad == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sec_sph == doctest::Approx(1.0).epsilon(1e-12));

    int smooth = 0;
    CHECK(wg_smoothness_pass(m, &smooth) == WG_OK);
    CHECK(smooth == 1);

    wg_metric_free(m);
    wg_metric_free(nullptr);
}

TEST_CASE("failures come back as status codes with messages") {
    wg_metric* m = nullptr;
    CHECK(wg_metric_round(0.5, 3, &m) == WG_ERR_INVALID_ARG);
    CHECK(std::strlen(wg_last_error()) > 0);
    CHECK(wg_metric_round(1.0, 3, nullptr) == WG_ERR_INVALID_ARG);
    CHECK(wg_metric_blend(2.0, 0.5, 0.0, 3, &m) == WG_ERR_INVALID_ARG);
    CHECK(m == nullptr);

    REQUIRE(wg_metric_round(1.0, 3, &m) == WG_OK);
    double v = 0.0;
    CHECK(wg_profile_eval(m, 0.5, 7, &v) == WG_ERR_INVALID_ARG);
    CHECK(wg_profile_eval(m, -1.0, 0, &v) == WG_ERR_DOMAIN);
    double sr, ss;
    int hs;
    CHECK(wg_curvature(m, 0.0, &sr, &ss, &hs) == WG_ERR_DOMAIN);
    CHECK(wg_curvature(nullptr, 0.5, &sr, &ss, &hs) == WG_ERR_INVALID_ARG);
    wg_metric_free(m);
}

TEST_CASE("string getters follow the query protocol") {
    wg_metric* m = nullptr;
    REQUIRE(wg_metric_blend(2.0, 0.1, 0.05, 3, &m) == WG_OK);

    size_t needed = 0;
    REQUIRE(wg_metric_json(m, nullptr, &needed) == WG_OK);
    REQUIRE(needed > 2);

    // Undersized buffer: error, and the required size is reported back.
    std::vector<char> tiny(4);
    size_t len = tiny.size();
    CHECK(wg_metric_json(m, tiny.data(), &len) == WG_ERR_BUFFER_TOO_SMALL);
    CHECK(len == needed);
    CHECK(wg_metric_json(m, nullptr, nullptr) == WG_ERR_INVALID_ARG);

    const std::string text = get_string(
        [&](char* buf, size_t* n) { return wg_metric_json(m, buf, n); });
    const json doc = json::parse(text);
    CHECK(doc["family"].get<std::string>() == "blend");
    CHECK(doc["smoothness"]["pass"].get<bool>());

    const std::string csv = get_string(
        [&](char* buf, size_t* n) { return wg_profile_csv(m, 16, buf, n); });
    CHECK(csv.rfind("r,a,a_prime,a_second,a_third\n", 0) == 0);
    const std::string curv = get_string(
        [&](char* buf, size_t* n) { return wg_curvature_csv(m, 16, buf, n); });
    CHECK(curv.rfind("r,sec_rad,sec_sph\n", 0) == 0);
    wg_metric_free(m);
}

TEST_CASE("scaling divides curvature") {
    wg_metric* base = nullptr;
    REQUIRE(wg_metric_blend(2.0, 0.1, 0.05, 3, &base) == WG_OK);
    wg_metric* scaled = nullptr;
    REQUIRE(wg_metric_scale(base, 0.25, &scaled) == WG_OK);

    double lb = 0.0, ls = 0.0;
    CHECK(wg_metric_length(base, &lb) == WG_OK);
    CHECK(wg_metric_length(scaled, &ls) == WG_OK);
    CHECK(ls == doctest::Approx(0.5 * lb).epsilon(1e-15));

    double r0, s0v, r1, s1;
    int h0, h1;
    CHECK(wg_curvature(base, 0.6, &r0, &s0v, &h0) == WG_OK);
    CHECK(wg_curvature(scaled, 0.3, &r1, &s1, &h1) == WG_OK);
    CHECK(r1 == doctest::Approx(4.0 * r0).epsilon(1e-11));
    CHECK(s1 == doctest::Approx(4.0 * s0v).epsilon(1e-11));

    CHECK(wg_metric_scale(base, -1.0, &scaled) == WG_ERR_INVALID_ARG);
    wg_metric_free(scaled);
    wg_metric_free(base);
}

TEST_CASE("cone queries over round and singular links") {
    wg_metric* round_link = nullptr;
    REQUIRE(wg_metric_round(1.0, 3, &round_link) == WG_OK);
    double lmin = 1.0, lmax = 1.0, scal = 1.0;
    CHECK(wg_cone_eigen_range(round_link, 0.8, 1.1, &lmin, &lmax) == WG_OK);
    CHECK(std::abs(lmin) <= 1e-9);
    CHECK(std::abs(lmax) <= 1e-9);
    CHECK(wg_cone_scal(round_link, 0.8, 1.1, &scal) == WG_OK);
    CHECK(std::abs(scal) <= 1e-8);
    CHECK(wg_cone_eigen_range(round_link, 0.0, 1.1, &lmin, &lmax) == WG_ERR_DOMAIN);
    wg_metric_free(round_link);

    wg_metric* link = nullptr;
    REQUIRE(wg_metric_blend_limit(2.0, 0.05, 3, &link) == WG_OK);
    double coarse_l = 0.0, coarse_s = 0.0, fine_l = 0.0, fine_s = 0.0;
    CHECK(wg_cone_scan_max(link, 1e-1, kPi / 4.0, 64, &coarse_l, &coarse_s) == WG_OK);
    CHECK(wg_cone_scan_max(link, 1e-3, kPi / 4.0, 64, &fine_l, &fine_s) == WG_OK);
    CHECK(fine_l >= 10.0 * coarse_l);
    const std::string csv = get_string([&](char* buf, size_t* n) {
        return wg_cone_scan_csv(link, 1e-2, 1.0, 16, buf, n);
    });
    CHECK(csv.rfind("s,r2_lambda_max,r2_scal\n", 0) == 0);
    wg_metric_free(link);
}

TEST_CASE("certification handles") {
    wg_metric* m = nullptr;
    REQUIRE(wg_metric_round(1.0, 3, &m) == WG_OK);
    wg_certificate* cert = nullptr;
    REQUIRE(wg_certify(m, 1.0, 0.0, kPi, 1000, 1e-9, &cert) == WG_OK);

    int pass = 0;
    CHECK(wg_certificate_pass(cert, &pass) == WG_OK);
    CHECK(pass == 1);
    double margin = 1.0, argmin = -1.0;
    CHECK(wg_certificate_margin(cert, &margin, &argmin) == WG_OK);
    CHECK(std::abs(margin) <= 1e-9);
    CHECK(argmin > 0.0);
    int points = 0;
    CHECK(wg_certificate_points(cert, &points) == WG_OK);
    CHECK(points >= 1000);
    const json doc = json::parse(get_string(
        [&](char* buf, size_t* n) { return wg_certificate_json(cert, buf, n); }));
    CHECK(doc["verdict"].get<std::string>() == "pass");
    wg_certificate_free(cert);
    wg_certificate_free(nullptr);

    CHECK(wg_certify(m, 1.0, 2.0, 1.0, 100, 1e-9, &cert) == WG_ERR_INVALID_ARG);
    CHECK(wg_certify(nullptr, 1.0, 0.0, 1.0, 100, 1e-9, &cert) == WG_ERR_INVALID_ARG);
    wg_metric_free(m);
}

TEST_CASE("parameter searches and fits") {
    double eps = 0.0;
    REQUIRE(wg_find_eps_max(2.0, 512, 1e-6, &eps) == WG_OK);
    // Matches the frozen search value recorded with the library's tests.
    CHECK(eps == doctest::Approx(1.1230840588936761).epsilon(1e-5));
    CHECK(wg_find_eps_max(0.5, 512, 1e-6, &eps) == WG_ERR_INVALID_ARG);

    double plateau = 0.0;
    REQUIRE(wg_find_eps_plateau(2.0, 0.1, 512, 1e-6, &plateau) == WG_OK);
    CHECK(plateau == doctest::Approx(0.004990029335021973).epsilon(1e-4));

    double delta = 0.0;
    REQUIRE(wg_find_delta_max(2.0, 0.1, 0.5 * plateau, 512, 1e-6, &delta) == WG_OK);
    CHECK(delta == doctest::Approx(kPi / 16.0).epsilon(1e-4));

    wg_metric* m = nullptr;
    REQUIRE(wg_metric_blend_limit(2.0, 0.05, 3, &m) == WG_OK);
    double expo = 0.0, coef = 0.0, off = 0.0;
    int degenerate = 1;
    REQUIRE(wg_blowup_rate(m, 1e-4, 1e-2, 64, &expo, &coef, &off, &degenerate) == WG_OK);
    CHECK(degenerate == 0);
    CHECK(expo == doctest::Approx(1.0).epsilon(0.05));
    CHECK(coef == doctest::Approx(0.1).epsilon(0.1));
    wg_metric_free(m);
}

TEST_CASE("profile distance through the api") {
    wg_metric* r1 = nullptr;
    wg_metric* r2 = nullptr;
    REQUIRE(wg_metric_round(1.0, 3, &r1) == WG_OK);
    REQUIRE(wg_metric_round(2.0, 3, &r2) == WG_OK);
    double d = 0.0;
    CHECK(wg_sup_distance(r1, r2, 1024, 0, &d) == WG_ERR_INVALID_ARG);
    CHECK(wg_sup_distance(r1, r2, 4096, 1, &d) == WG_OK);
    CHECK(d == doctest::Approx(0.5).epsilon(1e-6));
    wg_metric_free(r2);
    wg_metric_free(r1);
}

TEST_CASE("soliton integration handles") {
    wg_soliton* sol = nullptr;
    REQUIRE(wg_soliton_integrate(3, 0.0, 1e-3, 50.0, 1e-10, &sol) == WG_OK);

    int outcome = -1;
    CHECK(wg_soliton_outcome(sol, &outcome) == WG_OK);
    CHECK(outcome == 0);
    double drift = 1.0, residual = 1.0;
    CHECK(wg_soliton_drift(sol, &drift) == WG_OK);
    CHECK(drift <= 1e-9);
    CHECK(wg_soliton_residual(sol, &residual) == WG_OK);
    CHECK(residual <= 1e-9);

    size_t points = 0;
    REQUIRE(wg_soliton_points(sol, &points) == WG_OK);
    REQUIRE(points >= 2);
    double t, b, bp, f, fp;
    CHECK(wg_soliton_sample(sol, 0, &t, &b, &bp, &f, &fp) == WG_OK);
    CHECK(t == 1e-3);
    CHECK(b == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(wg_soliton_sample(sol, points - 1, &t, &b, &bp, &f, &fp) == WG_OK);
    CHECK(t == 50.0);
    CHECK(b == doctest::Approx(50.0).epsilon(1e-10));
    CHECK(wg_soliton_sample(sol, points, &t, &b, &bp, &f, &fp) == WG_ERR_INVALID_ARG);

    double ascr, ratio, rate, r2;
    int has_rate = 1, settled = 0;
    CHECK(wg_soliton_decay(sol, &ascr, &ratio, &rate, &r2, &has_rate, &settled) == WG_OK);
    CHECK(std::abs(ascr) <= 1e-10);
    CHECK(ratio == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(has_rate == 0);
    CHECK(settled == 1);

    const json doc = json::parse(get_string(
        [&](char* buf, size_t* n) { return wg_soliton_json(sol, buf, n); }));
    CHECK(doc["outcome"].get<std::string>() == "completed");
    CHECK_FALSE(doc.contains("shoot"));
    const std::string csv = get_string(
        [&](char* buf, size_t* n) { return wg_trajectory_csv(sol, 100, buf, n); });
    CHECK(csv.rfind("t,b,b_prime,f,f_prime,scal,sec_rad,sec_sph\n", 0) == 0);

    wg_soliton_free(sol);
    wg_soliton_free(nullptr);
    CHECK(wg_soliton_integrate(3, -1.0, 1e-3, 50.0, 1e-10, &sol) == WG_ERR_INVALID_ARG);
}

TEST_CASE("soliton shooting handles") {
    wg_soliton* sol = nullptr;
    REQUIRE(wg_soliton_shoot(2, 0.5, 1e-8, 1e-3, 50.0, 1e-10, &sol) == WG_OK);
    double s0 = 0.0;
    CHECK(wg_soliton_s0(sol, &s0) == WG_OK);
    CHECK(s0 == doctest::Approx(1.0).epsilon(1e-5));
    const json doc = json::parse(get_string(
        [&](char* buf, size_t* n) { return wg_soliton_json(sol, buf, n); }));
    CHECK(doc["shoot"]["c_target"].get<double>() == 0.5);
    wg_soliton_free(sol);

    CHECK(wg_soliton_shoot(3, 0.0, 1e-8, 1e-3, 50.0, 1e-10, &sol) == WG_ERR_INVALID_ARG);
    CHECK(wg_soliton_shoot(2, 1e-4, 1e-8, 1e-3, 50.0, 1e-10, &sol) ==
          WG_ERR_NO_CONVERGENCE);
    CHECK(std::string(wg_last_error()).find("bracket") != std::string::npos);
}
