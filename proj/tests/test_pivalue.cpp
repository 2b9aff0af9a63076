#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "varpi/pivalue.hpp"
#include "varpi/verify.hpp"

using namespace varpi;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("pi_value of the extremal l^p norms is exactly 4") {
    for (const NormSpec& norm : {NormSpec::lp(1.0), NormSpec::lp_infinity()}) {
        const PiReport r = pi_value(norm, 1e-9);
        CHECK(r.method == PiMethod::exact_polygonal);
        CHECK(r.value.lower == 4.0);
        CHECK(r.value.upper == 4.0);
    }
}

TEST_CASE("pi_value of the hexagon X_0 is exactly 3") {
    const PiReport r = pi_value(make_xt(0.0), 1e-9);
    CHECK(r.method == PiMethod::exact_polygonal);
    CHECK(r.value.lower == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(r.value.width() == 0.0);
}

TEST_CASE("pi_value of l^2 encloses pi") {
    const PiReport r = pi_value(NormSpec::lp(2.0), 1e-6);
    CHECK(r.method == PiMethod::certified);
    CHECK(r.value.lower <= kPi);
    CHECK(kPi <= r.value.upper);
    CHECK(r.value.width() <= 1e-6);
}

TEST_CASE("make_xt spans the hexagon-to-square family") {
    CHECK(make_xt(0.0).as_polygonal()->ball.vertex_count() == 6);
    CHECK(make_xt(1.0).as_polygonal()->ball.vertex_count() == 4);
    CHECK(pi_value(make_xt(1.0), 1e-9).value.lower == 4.0);
    CHECK(pi_value(make_xt(0.25), 1e-9).value.lower == doctest::Approx(3.25).epsilon(1e-15));
    CHECK_THROWS_AS(make_xt(-0.1), DomainError);
    CHECK_THROWS_AS(make_xt(1.5), DomainError);
}

TEST_CASE("property: pi(X_t) = 3 + t across the family") {
    for (int i = 0; i <= 10; ++i) {
        const double t = 0.1 * i;
        const double value = pi_value(make_xt(t), 1e-9).value.lower;
        CHECK(std::abs(value - (3.0 + t)) <= 1e-12);
    }
}

TEST_CASE("lp_pi_table pins the known values") {
    const std::array<double, 6> ps{1.0, 1.5, 2.0, 3.0, 4.0, kInf};
    const std::vector<LpPiRow> rows = lp_pi_table(ps, 1e-6);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].lower == 4.0);  // l^1 is exact via its polygonal ball
    CHECK(rows[0].upper == 4.0);
    CHECK(rows[5].lower == 4.0);
    CHECK(rows[5].upper == 4.0);

    // certified enclosures against the independent quadrature oracle
    const std::array<double, 3> refs{kPi, oracles::kVarpiL3, oracles::kVarpiL4};
    for (int i = 0; i < 3; ++i) {
        const LpPiRow& row = rows[i + 2];
        CHECK(row.upper - row.lower <= 1e-6);
        CHECK(row.lower <= refs[i] + 1e-12);
        CHECK(refs[i] <= row.upper + 1e-12);
    }
    CHECK(rows[1].lower <= oracles::kVarpiL15 + 1e-12);
    CHECK(oracles::kVarpiL15 <= rows[1].upper + 1e-12);
}

TEST_CASE("lp_pi_table is monotone toward p = 2 within enclosure widths") {
    const std::array<double, 8> ps{1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 10.0, kInf};
    const std::vector<LpPiRow> rows = lp_pi_table(ps, 1e-6);
    for (int i = 0; i < 3; ++i) CHECK(rows[i].upper >= rows[i + 1].lower);  // decreasing on [1,2]
    for (int i = 3; i < 7; ++i) CHECK(rows[i + 1].upper >= rows[i].lower);  // increasing on [2,inf]
}

TEST_CASE("circumscribe_normalize on the square picks the first diagonal pair") {
    // brute force over the 4 vertices: |cross| = 2, first attained by
    // ((1,1), (-1,1))
    const NormalizationCertificate cert =
        circumscribe_normalize(NormSpec::lp_infinity(), 1e-9);
    CHECK(cert.u == Point2{1.0, 1.0});
    CHECK(cert.v == Point2{-1.0, 1.0});

    // the normalized ball is the diamond conv{+-e1, +-e2}
    const NormSpec normalized = pushforward(cert.map, NormSpec::lp_infinity());
    const std::optional<SymmetricPolygon> ball = polygonal_form(normalized);
    const auto& verts = ball->vertices();
    REQUIRE(verts.size() == 4);
    CHECK(verts[0].x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(verts[0].y == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("circumscribe_normalize on X_0 keeps the basis pair (e1, e2)") {
    const NormSpec x0 = make_xt(0.0);
    CHECK(oracles::max_cross_over_vertices(x0.as_polygonal()->ball.vertices()) == 1.0);
    const NormalizationCertificate cert = circumscribe_normalize(x0, 1e-9);
    CHECK(std::abs(cross(cert.u, cert.v)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cert.u == Point2{1.0, 0.0});
    CHECK(cert.v == Point2{0.0, 1.0});
}

TEST_CASE("circumscribe_normalize certifies the euclidean circle") {
    const NormSpec l2 = NormSpec::lp(2.0);
    const NormalizationCertificate cert = circumscribe_normalize(l2, 1e-9);
    const NormSpec normalized = pushforward(cert.map, l2);
    CHECK(gauge(normalized, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauge(normalized, {0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 64; ++k) {
        const Point2 b = boundary_point(normalized, 2.0 * kPi * k / 64.0);
        CHECK(std::abs(b.x) <= 1.0 + 1e-9);
        CHECK(std::abs(b.y) <= 1.0 + 1e-9);
    }
}

TEST_CASE("inscribed_hexagon reproduces the compass construction on the circle") {
    const HexagonCertificate cert =
        inscribed_hexagon(NormSpec::lp(2.0), 1e-9, Point2{1.0, 0.0});
    CHECK(cert.v.x == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(cert.v.y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
    for (int i = 0; i < 6; ++i) {
        CHECK(cert.side_gauges[i] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(cert.vertex_gauges[i] <= 1.0 + 1e-9);
    }
}

TEST_CASE("inscribed_hexagon on the square finds v = (0, 1) from the corner") {
    // derived by bisection on the square boundary: the first point at
    // l^inf distance 1 from (1,1) counter-clockwise is (0,1)
    const HexagonCertificate cert =
        inscribed_hexagon(NormSpec::lp_infinity(), 1e-9, Point2{1.0, 1.0});
    CHECK(cert.v.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cert.v.y == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("inscribed_hexagon on X_0 returns the ball itself") {
    const HexagonCertificate cert = inscribed_hexagon(make_xt(0.0), 1e-9);
    CHECK(cert.u == Point2{1.0, 0.0});
    CHECK(cert.v.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cert.v.y == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 0; i < 6; ++i)
        CHECK(cert.side_gauges[i] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("inscribed_hexagon validates a provided seed vertex") {
    CHECK_THROWS_AS(inscribed_hexagon(make_xt(0.0), 1e-9, Point2{0.9, 0.0}), PreconditionError);
    // on the boundary but not extreme: an edge midpoint of the square
    CHECK_THROWS_AS(inscribed_hexagon(NormSpec::lp_infinity(), 1e-9, Point2{1.0, 0.0}),
                    PreconditionError);
}

TEST_CASE("pi_certificates bundles value, certificates, and classification") {
    const PiReport hexagon = pi_certificates(make_xt(0.0), 1e-9);
    CHECK(hexagon.value.lower == doctest::Approx(3.0).epsilon(1e-15));
    REQUIRE(hexagon.hexagon.has_value());
    for (int i = 0; i < 6; ++i)
        CHECK(hexagon.hexagon->side_gauges[i] == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(hexagon.classification.has_value());
    CHECK(hexagon.classification->kind == ExtremalKind::linearly_regular_hexagon);

    const PiReport circle = pi_certificates(NormSpec::lp(2.0), 1e-6);
    CHECK(circle.value.lower <= kPi);
    CHECK(kPi <= circle.value.upper);
    REQUIRE(circle.hexagon.has_value());
    for (int i = 0; i < 6; ++i)
        CHECK(circle.hexagon->side_gauges[i] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(circle.parallelogram_map.has_value());
    CHECK(!circle.classification.has_value());

    const PiReport random_report =
        pi_certificates(NormSpec::polygonal(random_symmetric_polygon(42, 12)), 1e-9);
    CHECK(random_report.value.lower >= 3.0 - 1e-9);
    CHECK(random_report.value.upper <= 4.0 + 1e-9);
    CHECK(random_report.hexagon.has_value());
    CHECK(random_report.parallelogram_map.has_value());
}

TEST_CASE("property: pi-values stay within [3, 4] on random polygons") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const PiReport r =
            pi_value(NormSpec::polygonal(random_symmetric_polygon(seed, 2 + seed % 11)), 1e-9);
        CHECK(r.value.lower >= 3.0 - 1e-9);
        CHECK(r.value.upper <= 4.0 + 1e-9);
    }
}

TEST_CASE("property: pi-value is invariant under linear maps") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const NormSpec x = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 9));
        const LinearMap2 t = random_linear_map(seed, 1e3);
        const double base = pi_value(x, 1e-9).value.lower;
        const double mapped = pi_value(pushforward(t, x), 1e-9).value.lower;
        CHECK(std::abs(mapped - base) <= 1e-8 * (1.0 + oracles::condition_number(t)));
    }
}

TEST_CASE("property: hexagon certificates are valid on random polygons") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const NormSpec norm = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 9));
        const HexagonCertificate cert = inscribed_hexagon(norm, 1e-9);
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(cert.side_gauges[i] - 1.0) <= 1e-8);
            CHECK(cert.vertex_gauges[i] <= 1.0 + 1e-8);
        }
    }
}

TEST_CASE("property: normalization preserves pi and caps it at 4") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const NormSpec norm = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 9));
        const NormalizationCertificate cert = circumscribe_normalize(norm, 1e-9);
        const NormSpec normalized = pushforward(cert.map, norm);
        const double before = pi_value(norm, 1e-9).value.lower;
        const double after = pi_value(normalized, 1e-9).value.lower;
        CHECK(after <= 4.0 + 1e-9);
        CHECK(after >= before - 1e-9);

        // every normalized vertex sits in the unit square
        const std::optional<SymmetricPolygon> ball = polygonal_form(normalized);
        for (const Point2& v : ball->vertices()) {
            CHECK(std::abs(v.x) <= 1.0 + 1e-9);
            CHECK(std::abs(v.y) <= 1.0 + 1e-9);
        }
    }
}
