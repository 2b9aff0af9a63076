#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "varpi/arclength.hpp"
#include "varpi/rng.hpp"
#include "varpi/verify.hpp"

using namespace varpi;

namespace {

constexpr double kPi = 3.14159265358979323846;

NormSpec xt_norm(double t) {
    const std::array<Point2, 3> gen{{{1.0, 0.0}, {t, 1.0}, {-1.0, 1.0}}};
    return NormSpec::polygonal(symmetric_hull(gen));
}

}  // namespace

TEST_CASE("polyline_length sums successive distances") {
    CHECK(polyline_length(NormSpec::lp(1.0), {{{1.0, 0.0}, {0.0, 1.0}}}) == doctest::Approx(2.0));

    // the upper half circle of X_{1/2} has length 3.5
    const PolylinePath upper_half{{{1.0, 0.0}, {0.5, 1.0}, {-1.0, 1.0}, {-1.0, 0.0}}};
    CHECK(polyline_length(xt_norm(0.5), upper_half) == doctest::Approx(3.5).epsilon(1e-15));

    const PolylinePath stationary{{{0.3, -0.4}, {0.3, -0.4}}};
    CHECK(polyline_length(NormSpec::lp(2.0), stationary) == 0.0);

    CHECK_THROWS_AS(polyline_length(NormSpec::lp(2.0), PolylinePath{{{1.0, 1.0}}}), DomainError);
}

TEST_CASE("PolylinePath::closed compares endpoints bit-exactly") {
    CHECK(PolylinePath{{{1.0, 2.0}, {0.0, 0.0}, {1.0, 2.0}}}.closed());
    CHECK(!PolylinePath{{{1.0, 2.0}, {0.0, 0.0}, {1.0, 2.0 + 1e-12}}}.closed());
}

TEST_CASE("boundary_length_bounds encloses 2*pi for the euclidean circle") {
    const NormSpec l2 = NormSpec::lp(2.0);
    const LengthInterval li = boundary_length_bounds(l2, l2, 1e-6);
    CHECK(li.lower <= 2.0 * kPi);
    CHECK(2.0 * kPi <= li.upper);
    CHECK(li.width() <= 1e-6);
    CHECK(li.refinements >= 64);
}

TEST_CASE("boundary_length_bounds is exact for polygonal bodies") {
    // each diamond edge has l^inf length exactly 1
    const LengthInterval diamond =
        boundary_length_bounds(NormSpec::lp_infinity(), NormSpec::lp(1.0), 1e-9);
    CHECK(diamond.lower == 4.0);
    CHECK(diamond.upper == 4.0);
}

TEST_CASE("boundary_length_bounds matches the l^1-of-circle quadrature oracle") {
    // independent oracle: the l^1 speed of the unit circle integrates to 8
    const double oracle = oracles::simpson(
        [](double t) { return std::abs(std::sin(t)) + std::abs(std::cos(t)); }, 0.0, kPi / 2.0,
        1 << 12) * 4.0;
    CHECK(oracle == doctest::Approx(8.0).epsilon(1e-12));

    // the enclosure is honest up to summation rounding (the inscribed sum is
    // exactly 8 here: the l^1 length of monotone chords telescopes)
    const LengthInterval li = boundary_length_bounds(NormSpec::lp(1.0), NormSpec::lp(2.0), 1e-6);
    CHECK(li.lower <= oracle + 1e-12);
    CHECK(oracle <= li.upper + 1e-12);
    CHECK(li.width() <= 1e-6);
}

TEST_CASE("boundary_length_bounds validates its tolerance") {
    CHECK_THROWS_AS(boundary_length_bounds(NormSpec::lp(2.0), NormSpec::lp(2.0), 0.0),
                    DomainError);
}

TEST_CASE("arc_length_bounds on the euclidean half circle") {
    const NormSpec l2 = NormSpec::lp(2.0);
    const LengthInterval li = arc_length_bounds(l2, l2, 0.0, kPi, 1e-6);
    CHECK(li.lower <= kPi);
    CHECK(kPi <= li.upper);
    CHECK(li.width() <= 1e-6);
}

TEST_CASE("arc_length_bounds is exact on the X_0 upper half") {
    const NormSpec x0 = xt_norm(0.0);
    const LengthInterval li = arc_length_bounds(x0, x0, 0.0, kPi, 1e-9);
    CHECK(li.lower == li.upper);
    CHECK(li.lower == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("arc_length_bounds rejects empty and oversized sweeps") {
    const NormSpec l2 = NormSpec::lp(2.0);
    CHECK_THROWS_AS(arc_length_bounds(l2, l2, 1.0, 1.0, 1e-6), EmptyArc);
    CHECK_THROWS_AS(arc_length_bounds(l2, l2, 1.0, 0.5, 1e-6), EmptyArc);
    CHECK_THROWS_AS(arc_length_bounds(l2, l2, 0.0, 7.0, 1e-6), DomainError);
}

TEST_CASE("arc_length_bounds full sweep agrees with the boundary bounds") {
    const NormSpec l2 = NormSpec::lp(2.0);
    const LengthInterval full = arc_length_bounds(l2, l2, 0.25, 0.25 + 2.0 * kPi, 1e-6);
    CHECK(full.lower <= 2.0 * kPi);
    CHECK(2.0 * kPi <= full.upper);

    const NormSpec x0 = xt_norm(0.0);
    const LengthInterval hexagon = arc_length_bounds(x0, x0, -kPi / 5.0, -kPi / 5.0 + 2.0 * kPi,
                                                     1e-9);
    CHECK(hexagon.lower == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("property: inserting a point never shortens a polyline") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        SplitMix64 g = rng_stream(seed, 11);
        const NormSpec norm = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 8));
        PolylinePath path;
        path.points.resize(4 + seed % 5);
        for (Point2& p : path.points) p = {g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
        const double before = polyline_length(norm, path);

        const std::size_t pos = 1 + static_cast<std::size_t>(g.next() % (path.points.size() - 1));
        path.points.insert(path.points.begin() + pos,
                           Point2{g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)});
        CHECK(polyline_length(norm, path) >= before * (1.0 - 1e-12));
    }
}

TEST_CASE("property: nested bodies have nested boundary lengths") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const SymmetricPolygon outer = random_symmetric_polygon(seed, 3 + seed % 9);
        SplitMix64 g = rng_stream(seed, 13);
        std::vector<Point2> shrunk;
        for (const Point2& v : outer.vertices()) shrunk.push_back(g.next_in(0.4, 1.0) * v);
        const SymmetricPolygon inner = symmetric_hull(shrunk);

        const NormSpec measure = NormSpec::lp(g.next_in(1.0, 4.0));
        const LengthInterval li = boundary_length_bounds(measure, NormSpec::polygonal(inner), 1.0);
        const LengthInterval lo = boundary_length_bounds(measure, NormSpec::polygonal(outer), 1.0);
        CHECK(li.upper <= lo.lower + 1e-9 + li.width() + lo.width());
    }
}

TEST_CASE("property: a larger unit ball never lengthens a path") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const NormSpec x = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 7));
        const NormSpec y = pushforward(LinearMap2::scaling(1.5), x);  // B_X inside B_Y
        SplitMix64 g = rng_stream(seed, 17);
        PolylinePath path;
        path.points.resize(5);
        for (Point2& p : path.points) p = {g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
        CHECK(polyline_length(y, path) <= polyline_length(x, path) + 1e-12);
    }
}

TEST_CASE("property: polyline length is invariant under push-forward") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const NormSpec x = NormSpec::polygonal(random_symmetric_polygon(seed, 3 + seed % 7));
        const LinearMap2 t = random_linear_map(seed, 1e3);
        const NormSpec tx = pushforward(t, x);
        SplitMix64 g = rng_stream(seed, 19);
        PolylinePath path, mapped;
        for (int i = 0; i < 6; ++i) {
            const Point2 p{g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
            path.points.push_back(p);
            mapped.points.push_back(t.apply(p));
        }
        const double base = polyline_length(x, path);
        CHECK(std::abs(polyline_length(tx, mapped) - base) <= 1e-9 * (1.0 + base));
    }
}

TEST_CASE("property: exact polygon intervals match a direct vertex sum") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SymmetricPolygon ball = random_symmetric_polygon(seed, 2 + seed % 9);
        const NormSpec measure = NormSpec::polygonal(random_symmetric_polygon(seed + 100, 4));
        const LengthInterval li =
            boundary_length_bounds(measure, NormSpec::polygonal(ball), 1e-9);

        double direct = 0.0;
        const auto& v = ball.vertices();
        for (std::size_t i = 0; i < v.size(); ++i)
            direct += gauge(measure, v[(i + 1) % v.size()] - v[i]);
        CHECK(li.lower == li.upper);
        CHECK(li.lower == doctest::Approx(direct).epsilon(1e-15));
    }
}
