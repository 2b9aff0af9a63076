#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "oracles.hpp"
#include "varpi/verify.hpp"

using namespace varpi;

TEST_CASE("random_symmetric_polygon symmetrizes two generators to a parallelogram") {
    const SymmetricPolygon poly = random_symmetric_polygon(1, 2);
    CHECK(poly.vertex_count() == 4);
}

TEST_CASE("random_symmetric_polygon replays bit-identically") {
    const SymmetricPolygon a = random_symmetric_polygon(1, 8);
    const SymmetricPolygon b = random_symmetric_polygon(1, 8);
    REQUIRE(a.vertex_count() == b.vertex_count());
    for (std::size_t i = 0; i < a.vertex_count(); ++i) CHECK(a.vertices()[i] == b.vertices()[i]);
}

TEST_CASE("random_symmetric_polygon varies with the seed") {
    const SymmetricPolygon a = random_symmetric_polygon(2, 8);
    const SymmetricPolygon b = random_symmetric_polygon(3, 8);
    bool different = a.vertex_count() != b.vertex_count();
    for (std::size_t i = 0; !different && i < a.vertex_count(); ++i)
        different = !(a.vertices()[i] == b.vertices()[i]);
    CHECK(different);
}

TEST_CASE("random_symmetric_polygon generators stay in the annulus") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SymmetricPolygon poly = random_symmetric_polygon(seed, 5 + seed % 7);
        for (const Point2& v : poly.vertices()) {
            const double r = euclidean_norm(v);
            CHECK(r >= 0.3 - 1e-12);
            CHECK(r <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("random_linear_map honors its contracts") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const LinearMap2 t = random_linear_map(seed, 1e3);
        const LinearMap2 again = random_linear_map(seed, 1e3);
        CHECK(t.a11 == again.a11);
        CHECK(t.a12 == again.a12);
        CHECK(t.a21 == again.a21);
        CHECK(t.a22 == again.a22);

        // 2x2 SVD oracle: condition number and determinant ranges
        CHECK(oracles::condition_number(t) <= 1e3 * (1.0 + 1e-9));
        const double det = std::abs(t.det());
        CHECK(det >= 1e-3);
        CHECK(det <= 1e3);
    }
    const LinearMap2 tame = random_linear_map(11, 4.0);
    CHECK(oracles::condition_number(tame) <= 4.0 * (1.0 + 1e-9));
    CHECK_THROWS_AS(random_linear_map(1, 0.5), DomainError);
}

TEST_CASE("run_suite(7, 100) reports no violations") {
    const SuiteReport report = run_suite(7, 100, 1e-9);
    CHECK(report.trials == 100);
    for (const Violation& v : report.violations) {
        CAPTURE(v.check);
        CAPTURE(v.shape_dump);
        CAPTURE(v.observed);
        CHECK(false);
    }
    CHECK(report.violations.empty());
}

TEST_CASE("run_suite with zero trials is trivially empty") {
    const SuiteReport report = run_suite(7, 0, 1e-9);
    CHECK(report.trials == 0);
    CHECK(report.violations.empty());
    CHECK(report.timings.empty());
}

TEST_CASE("run_suite is deterministic apart from timings") {
    const SuiteReport a = run_suite(12345, 20, 1e-9);
    const SuiteReport b = run_suite(12345, 20, 1e-9);

    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].check == b.violations[i].check);
        CHECK(a.violations[i].seed == b.violations[i].seed);
        CHECK(a.violations[i].shape_dump == b.violations[i].shape_dump);
        CHECK(a.violations[i].observed == b.violations[i].observed);
        CHECK(a.violations[i].bound == b.violations[i].bound);
    }
    REQUIRE(a.coverage.size() == b.coverage.size());
    for (std::size_t i = 0; i < a.coverage.size(); ++i) {
        CHECK(a.coverage[i].first == b.coverage[i].first);
        CHECK(a.coverage[i].second == b.coverage[i].second);
    }
    // timings cover the same checks in the same order
    REQUIRE(a.timings.size() == b.timings.size());
    for (std::size_t i = 0; i < a.timings.size(); ++i)
        CHECK(a.timings[i].first == b.timings[i].first);
}

TEST_CASE("run_suite exercises every public operation") {
    const SuiteReport report = run_suite(99, 3, 1e-9);
    const std::array<const char*, 23> ops{
        "geom.symmetric_hull",
        "geom.ray_exit",
        "geom.extreme_points",
        "norms.gauge",
        "norms.distance",
        "norms.boundary_point",
        "norms.support_point",
        "norms.pushforward",
        "arclength.polyline_length",
        "arclength.boundary_length_bounds",
        "arclength.arc_length_bounds",
        "pivalue.pi_value",
        "pivalue.make_xt",
        "pivalue.lp_pi_table",
        "pivalue.circumscribe_normalize",
        "pivalue.inscribed_hexagon",
        "pivalue.pi_certificates",
        "classify.classify_extremal",
        "classify.quarter_turn_basis",
        "classify.euclidean_test",
        "classify.tangent_defect",
        "classify.angle_length_margin",
        "classify.quarter_turn_pi_check",
    };
    for (const char* op : ops) {
        const auto hit = std::find_if(report.coverage.begin(), report.coverage.end(),
                                      [&](const auto& entry) { return entry.first == op; });
        CAPTURE(op);
        REQUIRE(hit != report.coverage.end());
        CHECK(hit->second > 0);
    }
    CHECK(report.violations.empty());
}
