#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "horopack/horopack.h"

TEST_CASE("status messages are non-empty and distinct for OK vs errors") {
    const char* ok = hp_status_message(HP_OK);
    REQUIRE(ok != nullptr);
    CHECK(std::strlen(ok) > 0);
    for (int s = 1; s <= 6; ++s) {
        const char* msg = hp_status_message(static_cast<hp_status>(s));
        REQUIRE(msg != nullptr);
        CHECK(std::strlen(msg) > 0);
        CHECK(std::strcmp(msg, ok) != 0);
    }
}

TEST_CASE("bilinear form and argument validation") {
    double x[4] = {1.0, 0.5, 0.0, 0.0};
    double y[4] = {1.0, 0.0, 0.5, 0.0};
    double out = 0.0;
    CHECK(hp_bilinear_form(3, x, y, &out) == HP_OK);
    CHECK(out == doctest::Approx(-1.0));
    CHECK(hp_bilinear_form(3, x, x, &out) == HP_OK);
    CHECK(out == doctest::Approx(-0.75));

    CHECK(hp_bilinear_form(0, x, y, &out) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_bilinear_form(3, nullptr, y, &out) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_bilinear_form(3, x, y, nullptr) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("point classification") {
    double interior[3] = {1.0, 0.1, 0.1};
    double absolute[3] = {1.0, 0.6, 0.8};
    double outer[3] = {1.0, 1.5, 0.0};
    int cls = -1;
    CHECK(hp_classify_point(2, interior, 0.0, &cls) == HP_OK);
    CHECK(cls == HP_POINT_INTERIOR);
    CHECK(hp_classify_point(2, absolute, 0.0, &cls) == HP_OK);
    CHECK(cls == HP_POINT_ABSOLUTE);
    CHECK(hp_classify_point(2, outer, 0.0, &cls) == HP_OK);
    CHECK(cls == HP_POINT_OUTER);
    double zero[3] = {0.0, 0.0, 0.0};
    CHECK(hp_classify_point(2, zero, 0.0, &cls) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("distance and domain errors") {
    double o[4] = {1.0, 0.0, 0.0, 0.0};
    double p[4] = {1.0, 0.0, 0.0, 0.25};
    double out = 0.0;
    CHECK(hp_distance(3, o, p, &out) == HP_OK);
    CHECK(out == doctest::Approx(std::log(std::sqrt(5.0 / 3.0))).epsilon(1e-12));

    double ideal[4] = {1.0, 0.0, 0.0, 1.0};
    CHECK(hp_distance(3, o, ideal, &out) == HP_ERR_DOMAIN);
}

TEST_CASE("polar form, foot of perpendicular, hyperplane distance") {
    double x[3] = {1.0, 0.3, 0.0};
    double u[3] = {0.0, 1.0, 0.0};  // hyperplane x1 = 0
    double foot[3];
    CHECK(hp_foot_of_perpendicular(2, x, u, foot) == HP_OK);
    double check = 0.0;
    CHECK(hp_bilinear_form(2, foot, u, &check) == HP_OK);
    CHECK(check == doctest::Approx(0.0).epsilon(1e-14));

    double d1 = 0.0, d2 = 0.0;
    CHECK(hp_distance_to_hyperplane(2, x, u, &d1) == HP_OK);
    CHECK(hp_distance(2, x, foot, &d2) == HP_OK);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));

    double polar[3];
    CHECK(hp_polar_form(2, x, polar) == HP_OK);
    CHECK(polar[0] == doctest::Approx(-x[0]));
    CHECK(polar[1] == doctest::Approx(x[1]));
}

TEST_CASE("simplex handle lifecycle") {
    hp_simplex* s = nullptr;
    REQUIRE(hp_simplex_create(3, &s) == HP_OK);
    REQUIRE(s != nullptr);
    CHECK(hp_simplex_dim(s) == 3);

    std::vector<double> v(4), inc(4);
    for (int i = 0; i <= 3; ++i) {
        CHECK(hp_simplex_vertex(s, i, v.data()) == HP_OK);
        int cls = -1;
        CHECK(hp_classify_point(3, v.data(), 1e-10, &cls) == HP_OK);
        CHECK(cls == HP_POINT_ABSOLUTE);
    }
    CHECK(hp_simplex_vertex(s, 4, v.data()) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_simplex_vertex(s, -1, v.data()) == HP_ERR_INVALID_ARGUMENT);

    CHECK(hp_simplex_incenter(s, inc.data()) == HP_OK);
    CHECK(inc[3] / inc[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    std::vector<double> pole(4);
    CHECK(hp_simplex_edge_pole(s, 0, 3, pole.data()) == HP_OK);
    double ss = 0.0;
    CHECK(hp_distance_to_hyperplane(3, inc.data(), pole.data(), &ss) == HP_OK);
    CHECK(std::sinh(ss) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(hp_simplex_edge_pole(s, 2, 2, pole.data()) == HP_ERR_INVALID_ARGUMENT);

    hp_simplex_destroy(s);
    hp_simplex_destroy(nullptr);  // must be a no-op

    CHECK(hp_simplex_create(1, &s) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_simplex_create(3, nullptr) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("simplex volume result") {
    hp_volume_result res;
    CHECK(hp_simplex_volume(2, 0.0, 0, &res) == HP_OK);
    CHECK(res.value == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(res.converged == 1);
    CHECK(res.terms_used == 0);

    CHECK(hp_simplex_volume(3, 1e-7, 0, &res) == HP_OK);
    CHECK(res.value == doctest::Approx(1.0149416064096536).epsilon(1e-6));
    CHECK(res.converged == 1);
    CHECK(res.uncertainty > 0.0);
    CHECK(res.partial_sum + res.tail_estimate == doctest::Approx(res.value));

    CHECK(hp_simplex_volume(4, 1e-7, 50, &res) == HP_ERR_NOT_CONVERGED);
    CHECK(res.converged == 0);
    CHECK(res.terms_used == 50);
    CHECK(res.value == doctest::Approx(0.2688956602).epsilon(1e-3));

    CHECK(hp_simplex_volume(1, 1e-7, 0, &res) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_simplex_volume(3, 1e-7, 0, nullptr) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("composition coefficient strings") {
    char buf[64];
    CHECK(hp_composition_coefficient(3, 0, buf, sizeof buf) == HP_OK);
    CHECK(std::string(buf) == "1");
    CHECK(hp_composition_coefficient(3, 1, buf, sizeof buf) == HP_OK);
    CHECK(std::string(buf) == "8");
    CHECK(hp_composition_coefficient(3, 2, buf, sizeof buf) == HP_OK);
    CHECK(std::string(buf) == "72");

    char tiny[2];
    CHECK(hp_composition_coefficient(3, 2, tiny, sizeof tiny) ==
          HP_ERR_BUFFER_TOO_SMALL);
    CHECK(hp_composition_coefficient(1, 0, buf, sizeof buf) ==
          HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_composition_coefficient(3, -1, buf, sizeof buf) ==
          HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lobachevsky and dihedral angle") {
    double out = 0.0;
    CHECK(hp_lobachevsky(std::numbers::pi / 6.0, &out) == HP_OK);
    CHECK(out == doctest::Approx(0.5074708032048268).epsilon(1e-12));
    CHECK(hp_dihedral_angle(3, &out) == HP_OK);
    CHECK(out == doctest::Approx(std::numbers::pi / 3.0).epsilon(1e-14));
    CHECK(hp_dihedral_angle(1, &out) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("geometric constants and packing volume via C API") {
    hp_constants c;
    CHECK(hp_geometric_constants(3, &c) == HP_OK);
    CHECK(c.dim == 3);
    CHECK(c.q == doctest::Approx(std::log(3.0) / 2.0).epsilon(1e-14));
    CHECK(c.v0 == doctest::Approx(std::sqrt(3.0) / 8.0).epsilon(1e-14));

    double out = 0.0;
    CHECK(hp_packing_volume(3, 0.0, &out) == HP_OK);
    CHECK(out == doctest::Approx(4.0 * c.v0).epsilon(1e-14));
    CHECK(hp_packing_volume(3, c.q + 0.1, &out) == HP_ERR_DOMAIN);

    CHECK(hp_horocycle_arc_length(2.0 * std::asinh(1.0), &out) == HP_OK);
    CHECK(out == doctest::Approx(2.0));
    CHECK(hp_horocycle_arc_length(-1.0, &out) == HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_horoball_sector_volume(3.0, 4, &out) == HP_OK);
    CHECK(out == doctest::Approx(1.0));
    CHECK(hp_two_ball_exchange_volume(2.0, 0.0, 3, &out) == HP_OK);
    CHECK(out == doctest::Approx(2.0));
}

TEST_CASE("density report via C API") {
    hp_density_report rep;
    CHECK(hp_density_report_compute(4, 0.0, 0, &rep) == HP_OK);
    CHECK(rep.dim == 4);
    CHECK(rep.classical == doctest::Approx(0.73046).epsilon(7e-5));
    CHECK(rep.generalized == doctest::Approx(0.77038).epsilon(7e-5));
    CHECK(rep.ratio == doctest::Approx(rep.generalized / rep.classical)
                           .epsilon(1e-12));
    CHECK(rep.optimal == HP_ARRANGEMENT_B1);
    CHECK(rep.volume_converged == 1);

    CHECK(hp_density_report_compute(3, 0.0, 0, &rep) == HP_OK);
    CHECK(rep.optimal == HP_ARRANGEMENT_BOTH);

    CHECK(hp_density_report_compute(1, 0.0, 0, &rep) == HP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("density sweep via C API") {
    const int samples = 33;
    std::vector<double> xs(samples), vs(samples), deltas(samples);
    CHECK(hp_density_sweep(4, samples, 0.0, 0, xs.data(), vs.data(),
                           deltas.data()) == HP_OK);
    hp_constants c;
    REQUIRE(hp_geometric_constants(4, &c) == HP_OK);
    CHECK(xs.front() == doctest::Approx(0.0));
    CHECK(xs.back() == doctest::Approx(c.q).epsilon(1e-14));
    hp_density_report rep;
    REQUIRE(hp_density_report_compute(4, 0.0, 0, &rep) == HP_OK);
    CHECK(deltas.front() == doctest::Approx(rep.classical).epsilon(1e-10));
    CHECK(deltas.back() == doctest::Approx(rep.generalized).epsilon(1e-10));

    CHECK(hp_density_sweep(4, 1, 0.0, 0, xs.data(), vs.data(), deltas.data()) ==
          HP_ERR_INVALID_ARGUMENT);
    CHECK(hp_density_sweep(4, samples, 0.0, 0, nullptr, vs.data(),
                           deltas.data()) == HP_ERR_INVALID_ARGUMENT);
}

namespace {
struct VerifyLog {
    int calls = 0;
    int failures = 0;
    std::vector<std::string> failed_names;
};

void verify_cb(const char* name, int passed, const char* detail, void* user) {
    auto* log = static_cast<VerifyLog*>(user);
    ++log->calls;
    if (!passed) {
        ++log->failures;
        log->failed_names.emplace_back(name ? name : "");
    }
    (void)detail;
}
}  // namespace

TEST_CASE("hp_verify clean run and fault injection") {
    VerifyLog log;
    int all_passed = 0;
    CHECK(hp_verify(0.0, verify_cb, &log, &all_passed) == HP_OK);
    CHECK(all_passed == 1);
    CHECK(log.calls >= 5);
    CHECK(log.failures == 0);

    VerifyLog faulted;
    all_passed = 1;
    CHECK(hp_verify(1e-3, verify_cb, &faulted, &all_passed) == HP_OK);
    CHECK(all_passed == 0);
    CHECK(faulted.failures >= 1);
    bool ratio_named = false;
    for (const auto& n : faulted.failed_names)
        if (n == "ratio-identity") ratio_named = true;
    CHECK(ratio_named);

    // Callback is optional; only the aggregate flag is required.
    all_passed = 0;
    CHECK(hp_verify(0.0, nullptr, nullptr, &all_passed) == HP_OK);
    CHECK(all_passed == 1);
}
