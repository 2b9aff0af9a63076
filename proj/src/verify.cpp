#include "varpi/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "varpi/arclength.hpp"
#include "varpi/classify.hpp"
#include "varpi/norms.hpp"
#include "varpi/pivalue.hpp"
#include "varpi/rng.hpp"

namespace varpi {

namespace {

constexpr double kPi = std::numbers::pi;

// Purpose tags for sub-seed derivation; fixed so reports are replayable.
enum SeedTag : std::uint64_t {
    kTagPolygon = 1,
    kTagMap = 2,
    kTagDirections = 3,
    kTagCloud = 4,
    kTagVectors = 5,
    kTagPolyline = 6,
    kTagScales = 7,
    kTagQuarter = 8,
    kTagEllipse = 9,
    kTagProbes = 10,
};

Point2 random_annulus_point(SplitMix64& g, double r_min, double r_max) {
    const double angle = g.next_in(0.0, 2.0 * kPi);
    const double r = std::sqrt(g.next_in(r_min * r_min, r_max * r_max));
    return {r * std::cos(angle), r * std::sin(angle)};
}

std::string dump_points(std::span<const Point2> pts) {
    std::string out = "[";
    char buf[64];
    for (const Point2& p : pts) {
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", p.x, p.y);
        if (out.size() > 1) out += ";";
        out += buf;
    }
    out += "]";
    return out;
}

std::string dump_map(const LinearMap2& m) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[[%.17g,%.17g],[%.17g,%.17g]]", m.a11, m.a12, m.a21, m.a22);
    return buf;
}

double exact_pi(const SymmetricPolygon& ball) {
    return pi_value(NormSpec::polygonal(ball), 1e-9).value.lower;
}

class Suite {
public:
    Suite(std::uint64_t seed, std::uint64_t trials, double tol)
        : seed_(seed), trials_(trials), tol_(tol) {
        report_.trials = trials;
        cert_tol_ = std::max(tol, 1e-12);
        smooth_tol_ = std::max(tol, 1e-6);
        smooth_draws_ = std::min<std::uint64_t>(trials, 50);
    }

    SuiteReport run();

private:
    void mark(const char* op) {
        for (auto& [name, count] : report_.coverage)
            if (name == op) {
                ++count;
                return;
            }
        report_.coverage.emplace_back(op, 1);
    }

    void fail(const std::string& check, std::uint64_t sub_seed, std::string dump, double observed,
              double bound) {
        report_.violations.push_back({check, sub_seed, std::move(dump), observed, bound});
    }

    // Runs `body(trial)` for each trial, recording elapsed time under `name`
    // and converting stray exceptions into violations.
    void check(const std::string& name, std::uint64_t count,
               const std::function<void(std::uint64_t)>& body) {
        const auto start = std::chrono::steady_clock::now();
        for (std::uint64_t k = 0; k < count; ++k) {
            try {
                body(k);
            } catch (const Error& e) {
                fail(name, derive_seed(seed_, kTagPolygon, k), std::string("exception: ") + e.what(),
                     std::nan(""), 0.0);
            }
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        report_.timings.emplace_back(name, elapsed.count());
    }

    SymmetricPolygon trial_polygon(std::uint64_t k) {
        const std::uint64_t sub = derive_seed(seed_, kTagPolygon, k);
        mark("geom.symmetric_hull");
        return random_symmetric_polygon(sub, 3 + static_cast<std::size_t>(k % 10));
    }

    LinearMap2 trial_map(std::uint64_t k, double cond_max) {
        return random_linear_map(derive_seed(seed_, kTagMap, k), cond_max);
    }

    void geom_checks();
    void norm_checks();
    void arclength_checks();
    void pivalue_checks();
    void classify_checks();

    std::uint64_t seed_;
    std::uint64_t trials_;
    double tol_;
    double cert_tol_;
    double smooth_tol_;
    std::uint64_t smooth_draws_;
    SuiteReport report_;
};

void Suite::geom_checks() {
    check("geom.ray_exit_at_vertices", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        for (const Point2& v : poly.vertices()) {
            mark("geom.ray_exit");
            const double t = ray_exit(poly, v).t;
            if (std::abs(t - 1.0) > 1e-12)
                fail("geom.ray_exit_at_vertices", derive_seed(seed_, kTagPolygon, k),
                     dump_points(poly.vertices()), t, 1e-12);
        }
    });

    check("geom.hull_idempotent", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        mark("geom.symmetric_hull");
        const SymmetricPolygon again = symmetric_hull(poly.vertices());
        bool identical = poly.vertex_count() == again.vertex_count();
        for (std::size_t i = 0; identical && i < poly.vertex_count(); ++i)
            identical = poly.vertices()[i] == again.vertices()[i];
        if (!identical)
            fail("geom.hull_idempotent", derive_seed(seed_, kTagPolygon, k),
                 dump_points(poly.vertices()), static_cast<double>(again.vertex_count()),
                 static_cast<double>(poly.vertex_count()));
    });

    check("geom.ray_exit_symmetry", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagDirections, k), 0);
        for (int i = 0; i < 8; ++i) {
            const double angle = g.next_in(0.0, 2.0 * kPi);
            const Point2 d{std::cos(angle), std::sin(angle)};
            mark("geom.ray_exit");
            mark("geom.ray_exit");
            const double forward = ray_exit(poly, d).t;
            const double backward = ray_exit(poly, -d).t;
            if (std::abs(forward - backward) > 1e-12)
                fail("geom.ray_exit_symmetry", derive_seed(seed_, kTagDirections, k),
                     dump_points(poly.vertices()), std::abs(forward - backward), 1e-12);
        }
    });

    check("geom.extreme_points_hull", trials_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagCloud, k), 0);
        std::vector<Point2> cloud(4 + k % 12);
        for (Point2& p : cloud) p = {g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
        mark("geom.extreme_points");
        const std::vector<Point2> ext = extreme_points(cloud);

        for (const Point2& e : ext) {
            if (std::none_of(cloud.begin(), cloud.end(), [&](Point2 p) { return p == e; }))
                fail("geom.extreme_points_hull", derive_seed(seed_, kTagCloud, k),
                     dump_points(cloud), e.x, e.y);
        }
        if (ext.size() < 3) return;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            const Point2 a = ext[i];
            const Point2 b = ext[(i + 1) % ext.size()];
            const double len = euclidean_norm(b - a);
            for (const Point2& p : cloud) {
                const double signed_dist = cross(b - a, p - a) / len;
                if (signed_dist < -1e-12 * 4.0)
                    fail("geom.extreme_points_hull", derive_seed(seed_, kTagCloud, k),
                         dump_points(cloud), signed_dist, -1e-12 * 4.0);
            }
        }
    });
}

void Suite::norm_checks() {
    // Each trial probes three norm kinds: the trial polygon, a random l^p,
    // and a random ellipse.
    auto trial_norms = [&](std::uint64_t k) {
        std::vector<NormSpec> norms;
        norms.push_back(NormSpec::polygonal(trial_polygon(k)));
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagVectors, k), 1);
        norms.push_back(NormSpec::lp(g.next_in(1.0, 6.0)));
        norms.push_back(NormSpec::linear_image(trial_map(k, 1e3), NormSpec::lp(2.0)));
        return norms;
    };

    check("norms.gauge_axioms", trials_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagVectors, k), 2);
        for (const NormSpec& norm : trial_norms(k)) {
            for (int i = 0; i < 4; ++i) {
                const Point2 u{g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
                const Point2 v{g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
                const double c = g.next_in(-10.0, 10.0);
                mark("norms.gauge");
                const double gu = gauge(norm, u);
                const double gv = gauge(norm, v);

                const double homo = std::abs(gauge(norm, c * u) - std::abs(c) * gu);
                if (homo > 1e-12 * (1.0 + std::abs(c) * gu))
                    fail("norms.gauge_axioms", derive_seed(seed_, kTagVectors, k), "homogeneity",
                         homo, 1e-12 * (1.0 + std::abs(c) * gu));

                const double sym = std::abs(gauge(norm, -u) - gu);
                if (sym > 1e-12 * (1.0 + gu))
                    fail("norms.gauge_axioms", derive_seed(seed_, kTagVectors, k), "symmetry", sym,
                         1e-12 * (1.0 + gu));

                const double lhs = gauge(norm, u + v);
                if (lhs > gu + gv + 1e-9 * (gu + gv))
                    fail("norms.gauge_axioms", derive_seed(seed_, kTagVectors, k), "triangle",
                         lhs - gu - gv, 1e-9 * (gu + gv));

                mark("norms.distance");
                const double d_pq = distance(norm, u, v);
                const double d_qp = distance(norm, v, u);
                if (std::abs(d_pq - d_qp) > 1e-12 * (1.0 + d_pq))
                    fail("norms.gauge_axioms", derive_seed(seed_, kTagVectors, k),
                         "metric symmetry", std::abs(d_pq - d_qp), 1e-12);
            }
        }
    });

    check("norms.polygon_vertex_gauge", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        const NormSpec norm = NormSpec::polygonal(poly);
        for (const Point2& v : poly.vertices()) {
            mark("norms.gauge");
            const double gv = gauge(norm, v);
            if (std::abs(gv - 1.0) > 1e-12)
                fail("norms.polygon_vertex_gauge", derive_seed(seed_, kTagPolygon, k),
                     dump_points(poly.vertices()), gv, 1e-12);
        }
    });

    check("norms.pushforward_identity", trials_, [&](std::uint64_t k) {
        const LinearMap2 t = trial_map(k, 1e3);
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagVectors, k), 3);
        for (const NormSpec& norm : {NormSpec::polygonal(trial_polygon(k)), NormSpec::lp(3.0)}) {
            mark("norms.pushforward");
            const NormSpec pushed = pushforward(t, norm);
            for (int i = 0; i < 8; ++i) {
                const Point2 v{g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
                const double base = gauge(norm, v);
                const double mapped = gauge(pushed, t.apply(v));
                if (std::abs(mapped - base) > 1e-9 * (1.0 + base))
                    fail("norms.pushforward_identity", derive_seed(seed_, kTagMap, k), dump_map(t),
                         std::abs(mapped - base), 1e-9 * (1.0 + base));
            }
        }
    });

    check("norms.lp2_crosscheck", trials_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagVectors, k), 4);
        const NormSpec l2 = NormSpec::lp(2.0);
        for (int i = 0; i < 16; ++i) {
            const Point2 v{g.next_in(-10.0, 10.0), g.next_in(-10.0, 10.0)};
            mark("norms.gauge");
            const double lhs = gauge(l2, v);
            const double rhs = std::sqrt(v.x * v.x + v.y * v.y);
            if (std::abs(lhs - rhs) > 1e-15 * rhs)
                fail("norms.lp2_crosscheck", derive_seed(seed_, kTagVectors, k), "", lhs - rhs,
                     1e-15 * rhs);
        }
    });

    check("norms.boundary_and_support", trials_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagDirections, k), 1);
        for (const NormSpec& norm : trial_norms(k)) {
            for (int i = 0; i < 4; ++i) {
                const double theta = g.next_in(0.0, 2.0 * kPi);
                mark("norms.boundary_point");
                const Point2 b = boundary_point(norm, theta);
                const double gb = gauge(norm, b);
                if (std::abs(gb - 1.0) > 1e-12)
                    fail("norms.boundary_and_support", derive_seed(seed_, kTagDirections, k),
                         "boundary gauge", gb, 1e-12);

                const Point2 d{std::cos(theta), std::sin(theta)};
                mark("norms.support_point");
                const Point2 w = support_point(norm, d);
                if (gauge(norm, w) > 1.0 + 1e-12)
                    fail("norms.boundary_and_support", derive_seed(seed_, kTagDirections, k),
                         "support gauge", gauge(norm, w), 1.0 + 1e-12);
                if (dot(d, w) < dot(d, b) - 1e-9 * (1.0 + std::abs(dot(d, b))))
                    fail("norms.boundary_and_support", derive_seed(seed_, kTagDirections, k),
                         "support dominance", dot(d, w) - dot(d, b), 0.0);
            }
        }
    });
}

void Suite::arclength_checks() {
    auto random_polyline = [&](std::uint64_t k, int salt) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagPolyline, k), salt);
        PolylinePath path;
        path.points.resize(4 + k % 5);
        for (Point2& p : path.points) p = {g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)};
        return path;
    };

    check("arclength.refinement_monotonicity", trials_, [&](std::uint64_t k) {
        const NormSpec norm = NormSpec::polygonal(trial_polygon(k));
        PolylinePath path = random_polyline(k, 0);
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagPolyline, k), 1);
        mark("arclength.polyline_length");
        const double before = polyline_length(norm, path);
        const std::size_t pos = 1 + static_cast<std::size_t>(g.next() % (path.points.size() - 1));
        path.points.insert(path.points.begin() + pos, {g.next_in(-2.0, 2.0), g.next_in(-2.0, 2.0)});
        const double after = polyline_length(norm, path);
        if (after < before * (1.0 - 1e-12))
            fail("arclength.refinement_monotonicity", derive_seed(seed_, kTagPolyline, k),
                 dump_points(path.points), after - before, 0.0);
    });

    check("arclength.nested_monotonicity", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon outer = trial_polygon(k);
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagScales, k), 0);
        std::vector<Point2> shrunk;
        for (const Point2& v : outer.vertices()) shrunk.push_back(g.next_in(0.4, 1.0) * v);
        mark("geom.symmetric_hull");
        const SymmetricPolygon inner = symmetric_hull(shrunk);

        const NormSpec measure = NormSpec::lp(g.next_in(1.0, 4.0));
        mark("arclength.boundary_length_bounds");
        mark("arclength.boundary_length_bounds");
        const LengthInterval li = boundary_length_bounds(measure, NormSpec::polygonal(inner), 1.0);
        const LengthInterval lo = boundary_length_bounds(measure, NormSpec::polygonal(outer), 1.0);
        if (li.upper > lo.lower + 1e-9 + li.width() + lo.width())
            fail("arclength.nested_monotonicity", derive_seed(seed_, kTagScales, k),
                 dump_points(outer.vertices()), li.upper - lo.lower, 1e-9);
    });

    check("arclength.norm_comparison", trials_, [&](std::uint64_t k) {
        const NormSpec x = NormSpec::polygonal(trial_polygon(k));
        mark("norms.pushforward");
        const NormSpec y = pushforward(LinearMap2::scaling(1.5), x);  // B_Y contains B_X
        const PolylinePath path = random_polyline(k, 2);
        mark("arclength.polyline_length");
        const double len_y = polyline_length(y, path);
        const double len_x = polyline_length(x, path);
        if (len_y > len_x + 1e-12)
            fail("arclength.norm_comparison", derive_seed(seed_, kTagPolyline, k),
                 dump_points(path.points), len_y - len_x, 1e-12);
    });

    check("arclength.linear_invariance", trials_, [&](std::uint64_t k) {
        const NormSpec x = NormSpec::polygonal(trial_polygon(k));
        const LinearMap2 t = trial_map(k, 1e3);
        mark("norms.pushforward");
        const NormSpec tx = pushforward(t, x);
        PolylinePath path = random_polyline(k, 3);
        PolylinePath mapped;
        for (const Point2& p : path.points) mapped.points.push_back(t.apply(p));
        mark("arclength.polyline_length");
        const double base = polyline_length(x, path);
        const double image = polyline_length(tx, mapped);
        if (std::abs(image - base) > 1e-9 * (1.0 + base))
            fail("arclength.linear_invariance", derive_seed(seed_, kTagMap, k), dump_map(t),
                 std::abs(image - base), 1e-9 * (1.0 + base));
    });

    check("arclength.interval_correctness", 1, [&](std::uint64_t) {
        const NormSpec l2 = NormSpec::lp(2.0);
        mark("arclength.boundary_length_bounds");
        const LengthInterval circle = boundary_length_bounds(l2, l2, 1e-6);
        if (!(circle.lower <= 2.0 * kPi && 2.0 * kPi <= circle.upper && circle.width() <= 1e-6))
            fail("arclength.interval_correctness", seed_, "l2 in l2", circle.lower, 2.0 * kPi);

        mark("arclength.boundary_length_bounds");
        const LengthInterval diamond =
            boundary_length_bounds(NormSpec::lp_infinity(), NormSpec::lp(1.0), 1e-6);
        if (std::abs(diamond.lower - 4.0) > 1e-12 || std::abs(diamond.upper - 4.0) > 1e-12)
            fail("arclength.interval_correctness", seed_, "linf of l1", diamond.lower, 4.0);

        mark("arclength.arc_length_bounds");
        const LengthInterval half = arc_length_bounds(l2, l2, 0.0, kPi, 1e-6);
        if (!(half.lower <= kPi && kPi <= half.upper && half.width() <= 1e-6))
            fail("arclength.interval_correctness", seed_, "l2 half circle", half.lower, kPi);

        mark("pivalue.make_xt");
        const NormSpec x0 = make_xt(0.0);
        mark("arclength.arc_length_bounds");
        const LengthInterval upper_half = arc_length_bounds(x0, x0, 0.0, kPi, 1e-6);
        if (std::abs(upper_half.lower - 3.0) > 1e-12 || upper_half.width() != 0.0)
            fail("arclength.interval_correctness", seed_, "X_0 upper half", upper_half.lower, 3.0);
    });
}

void Suite::pivalue_checks() {
    check("pivalue.pi_range", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        mark("pivalue.pi_value");
        const PiReport r = pi_value(NormSpec::polygonal(poly), cert_tol_);
        if (r.value.lower < 3.0 - 1e-9 || r.value.upper > 4.0 + 1e-9)
            fail("pivalue.pi_range", derive_seed(seed_, kTagPolygon, k),
                 dump_points(poly.vertices()), r.value.lower, 3.0 - 1e-9);
    });

    check("pivalue.linear_invariance", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        const LinearMap2 t = trial_map(k, 1e3);
        mark("norms.pushforward");
        const NormSpec mapped = pushforward(t, NormSpec::polygonal(poly));
        mark("pivalue.pi_value");
        mark("pivalue.pi_value");
        const double base = pi_value(NormSpec::polygonal(poly), cert_tol_).value.lower;
        const double image = pi_value(mapped, cert_tol_).value.lower;
        if (std::abs(image - base) > 1e-8)
            fail("pivalue.linear_invariance", derive_seed(seed_, kTagMap, k), dump_map(t),
                 std::abs(image - base), 1e-8);
    });

    check("pivalue.xt_law", 1, [&](std::uint64_t) {
        for (int i = 0; i <= 10; ++i) {
            const double t = 0.1 * i;
            mark("pivalue.make_xt");
            mark("pivalue.pi_value");
            const double value = pi_value(make_xt(t), cert_tol_).value.lower;
            if (std::abs(value - (3.0 + t)) > 1e-12)
                fail("pivalue.xt_law", seed_, "X_t", value, 3.0 + t);
        }
    });

    auto check_hexagon = [&](const std::string& name, std::uint64_t sub_seed, const NormSpec& norm,
                             double slack) {
        mark("pivalue.inscribed_hexagon");
        const HexagonCertificate cert = inscribed_hexagon(norm, cert_tol_);
        for (int i = 0; i < 6; ++i) {
            if (std::abs(cert.side_gauges[i] - 1.0) > slack)
                fail(name, sub_seed, "side gauge", cert.side_gauges[i], slack);
            if (cert.vertex_gauges[i] > 1.0 + slack)
                fail(name, sub_seed, "vertex gauge", cert.vertex_gauges[i], 1.0 + slack);
        }
    };

    check("pivalue.hexagon_certificate", trials_, [&](std::uint64_t k) {
        check_hexagon("pivalue.hexagon_certificate", derive_seed(seed_, kTagPolygon, k),
                      NormSpec::polygonal(trial_polygon(k)), 1e-8);
    });

    check("pivalue.hexagon_certificate_lp", 1, [&](std::uint64_t) {
        for (const double p : {1.5, 2.0, 3.0})
            check_hexagon("pivalue.hexagon_certificate_lp", seed_, NormSpec::lp(p), 1e-6);
    });

    check("pivalue.normalization", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        const NormSpec norm = NormSpec::polygonal(poly);
        mark("pivalue.circumscribe_normalize");
        const NormalizationCertificate cert = circumscribe_normalize(norm, cert_tol_);
        mark("norms.pushforward");
        const NormSpec normalized = pushforward(cert.map, norm);
        mark("pivalue.pi_value");
        const double pi_before = exact_pi(poly);
        const double pi_after = pi_value(normalized, cert_tol_).value.lower;
        if (pi_after > 4.0 + 1e-9 || pi_after < pi_before - 1e-9)
            fail("pivalue.normalization", derive_seed(seed_, kTagPolygon, k),
                 dump_points(poly.vertices()), pi_after, pi_before);
    });

    check("pivalue.certificates_report", smooth_draws_, [&](std::uint64_t k) {
        mark("pivalue.pi_certificates");
        const PiReport r = pi_certificates(NormSpec::polygonal(trial_polygon(k)), cert_tol_);
        const bool complete = r.hexagon && r.parallelogram_map && r.classification;
        if (!complete || r.value.lower < 3.0 - 1e-9 || r.value.upper > 4.0 + 1e-9)
            fail("pivalue.certificates_report", derive_seed(seed_, kTagPolygon, k),
                 dump_points(trial_polygon(k).vertices()), r.value.lower, 3.0);
    });

    check("pivalue.lp_table", 1, [&](std::uint64_t) {
        const std::array<double, 5> ps{1.0, 1.5, 2.0, 3.0,
                                       std::numeric_limits<double>::infinity()};
        mark("pivalue.lp_pi_table");
        const std::vector<LpPiRow> rows = lp_pi_table(ps, smooth_tol_);
        if (rows[0].lower != 4.0 || rows[0].upper != 4.0)
            fail("pivalue.lp_table", seed_, "l1", rows[0].lower, 4.0);
        if (!(rows[2].lower <= kPi && kPi <= rows[2].upper))
            fail("pivalue.lp_table", seed_, "l2", rows[2].lower, kPi);
        if (rows[4].lower != 4.0 || rows[4].upper != 4.0)
            fail("pivalue.lp_table", seed_, "linf", rows[4].lower, 4.0);
        // decreasing toward p = 2 and increasing after, within widths
        for (int i = 0; i < 2; ++i)
            if (rows[i].upper < rows[i + 1].lower)
                fail("pivalue.lp_table", seed_, "monotone [1,2]", rows[i].upper,
                     rows[i + 1].lower);
        for (int i = 2; i < 4; ++i)
            if (rows[i + 1].upper < rows[i].lower)
                fail("pivalue.lp_table", seed_, "monotone [2,inf]", rows[i + 1].upper,
                     rows[i].lower);
    });
}

void Suite::classify_checks() {
    check("classify.linear_invariance", trials_, [&](std::uint64_t k) {
        const SymmetricPolygon poly = trial_polygon(k);
        const LinearMap2 t = trial_map(k, 1e3);
        mark("classify.classify_extremal");
        mark("classify.classify_extremal");
        const ExtremalTag base = classify_extremal(poly, 1e-9);
        mark("norms.pushforward");
        const NormSpec mapped = pushforward(t, NormSpec::polygonal(poly));
        const ExtremalTag image = classify_extremal(polygonal_form(mapped).value(), 1e-9);
        if (base.kind != image.kind)
            fail("classify.linear_invariance", derive_seed(seed_, kTagMap, k), dump_map(t),
                 static_cast<double>(image.kind), static_cast<double>(base.kind));
    });

    check("classify.extremal_consistency", trials_, [&](std::uint64_t k) {
        // A two-generator ball is a parallelogram; a mapped regular hexagon
        // is linearly regular; the trial polygon lands wherever it lands.
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagQuarter, k), 1);
        const std::array<Point2, 2> para_gen{{random_annulus_point(g, 0.3, 1.0),
                                              random_annulus_point(g, 0.3, 1.0)}};
        try {
            mark("geom.symmetric_hull");
            const SymmetricPolygon para = symmetric_hull(para_gen);
            mark("classify.classify_extremal");
            if (classify_extremal(para, 1e-9).kind != ExtremalKind::parallelogram ||
                std::abs(exact_pi(para) - 4.0) > 1e-9)
                fail("classify.extremal_consistency", derive_seed(seed_, kTagQuarter, k),
                     dump_points(para.vertices()), exact_pi(para), 4.0);
        } catch (const DegenerateBody&) {
            // collinear generator draw; skip
        }

        const LinearMap2 t = trial_map(k, 1e3);
        std::vector<Point2> hex_gen;
        for (int i = 0; i < 6; ++i) {
            const double angle = kPi * i / 3.0;
            hex_gen.push_back(t.apply({std::cos(angle), std::sin(angle)}));
        }
        mark("geom.symmetric_hull");
        const SymmetricPolygon hex = symmetric_hull(hex_gen);
        mark("classify.classify_extremal");
        if (classify_extremal(hex, 1e-9).kind != ExtremalKind::linearly_regular_hexagon ||
            std::abs(exact_pi(hex) - 3.0) > 1e-9)
            fail("classify.extremal_consistency", derive_seed(seed_, kTagMap, k),
                 dump_points(hex.vertices()), exact_pi(hex), 3.0);

        const SymmetricPolygon poly = trial_polygon(k);
        mark("classify.classify_extremal");
        const ExtremalTag tag = classify_extremal(poly, 1e-9);
        const double value = exact_pi(poly);
        if (tag.kind == ExtremalKind::generic && (value < 3.0 - 1e-9 || value > 4.0 + 1e-9))
            fail("classify.extremal_consistency", derive_seed(seed_, kTagPolygon, k),
                 dump_points(poly.vertices()), value, 3.0);
    });

    check("classify.quarter_turn", trials_, [&](std::uint64_t k) {
        // i-symmetric by construction, so a basis must exist (completeness).
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagQuarter, k), 0);
        std::vector<Point2> gen;
        for (std::size_t i = 0; i < 2 + k % 6; ++i) {
            const Point2 p = random_annulus_point(g, 0.3, 1.0);
            gen.push_back(p);
            gen.push_back(rot90(p));
        }
        mark("geom.symmetric_hull");
        const SymmetricPolygon ball = symmetric_hull(gen);
        mark("classify.quarter_turn_basis");
        const std::optional<QuarterTurnBasis> basis = quarter_turn_basis(ball, 1e-9);
        if (!basis) {
            fail("classify.quarter_turn", derive_seed(seed_, kTagQuarter, k),
                 dump_points(ball.vertices()), 0.0, 1.0);
            return;
        }
        // Soundness: S^2 = -I and the vertex cycle shifts by a constant.
        const LinearMap2 sq = basis->map.compose(basis->map);
        const double s2_err = std::max({std::abs(sq.a11 + 1.0), std::abs(sq.a12),
                                        std::abs(sq.a21), std::abs(sq.a22 + 1.0)});
        if (s2_err > 1e-9)
            fail("classify.quarter_turn", derive_seed(seed_, kTagQuarter, k),
                 dump_points(ball.vertices()), s2_err, 1e-9);
        for (std::size_t i = 0; i < ball.vertex_count(); ++i) {
            const Point2 gap = basis->map.apply(ball.vertices()[i]) - ball.vertex(i + basis->shift);
            if (std::abs(gap.x) > 1e-9 * ball.scale() || std::abs(gap.y) > 1e-9 * ball.scale())
                fail("classify.quarter_turn", derive_seed(seed_, kTagQuarter, k),
                     dump_points(ball.vertices()), euclidean_norm(gap), 1e-9 * ball.scale());
        }

        // Quarter-turn symmetry forces the pi-value up to at least pi, and
        // the bound survives linear images of the ball.
        if (exact_pi(ball) < kPi - 1e-9)
            fail("classify.quarter_turn", derive_seed(seed_, kTagQuarter, k),
                 dump_points(ball.vertices()), exact_pi(ball), kPi);

        // Completeness under linear images.
        const LinearMap2 t = trial_map(k, 1e3);
        mark("norms.pushforward");
        const NormSpec mapped = pushforward(t, NormSpec::polygonal(ball));
        mark("classify.quarter_turn_basis");
        if (!quarter_turn_basis(polygonal_form(mapped).value(), 1e-9))
            fail("classify.quarter_turn", derive_seed(seed_, kTagMap, k), dump_map(t), 0.0, 1.0);
    });

    check("classify.quarter_turn_pi_lp", 1, [&](std::uint64_t) {
        for (const double p : {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
            mark("classify.quarter_turn_pi_check");
            const QuarterTurnPiResult r = quarter_turn_pi_check(NormSpec::lp(p), smooth_tol_);
            if (!r.bound_ok || r.pi.lower < kPi - smooth_tol_ - r.pi.width())
                fail("classify.quarter_turn_pi_lp", seed_, "lp", r.pi.lower, kPi);
        }
    });

    check("classify.euclidean", smooth_draws_, [&](std::uint64_t k) {
        const LinearMap2 t = random_linear_map(derive_seed(seed_, kTagEllipse, k), 20.0);
        const NormSpec ellipse = NormSpec::linear_image(t, NormSpec::lp(2.0));
        mark("classify.euclidean_test");
        const EuclideanTestResult res = euclidean_test(ellipse, 1e-9, 16);
        if (!res.is_euclidean)
            fail("classify.euclidean", derive_seed(seed_, kTagEllipse, k), dump_map(t),
                 res.max_residual, 1e-9);
        mark("pivalue.pi_value");
        const PiReport r = pi_value(ellipse, smooth_tol_);
        if (std::abs(r.value.lower - kPi) > 2.0 * smooth_tol_ ||
            std::abs(r.value.upper - kPi) > 2.0 * smooth_tol_)
            fail("classify.euclidean", derive_seed(seed_, kTagEllipse, k), dump_map(t),
                 r.value.lower, kPi);

        mark("classify.euclidean_test");
        const EuclideanTestResult poly_res =
            euclidean_test(NormSpec::polygonal(trial_polygon(k)), 1e-9, 16);
        if (poly_res.is_euclidean)
            fail("classify.euclidean", derive_seed(seed_, kTagPolygon, k), "polygon euclidean",
                 poly_res.max_residual, 1e-9);
    });

    check("classify.tangent_defect", smooth_draws_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagEllipse, k), 7);
        const double scale = g.next_in(0.5, 2.0);
        mark("norms.pushforward");
        const NormSpec circle = pushforward(LinearMap2::scaling(scale), NormSpec::lp(2.0));
        mark("classify.tangent_defect");
        if (tangent_defect(circle, 64, 0.5) != 0.0)
            fail("classify.tangent_defect", derive_seed(seed_, kTagEllipse, k), "circle multiple",
                 tangent_defect(circle, 64, 0.5), 0.0);

        mark("classify.tangent_defect");
        const double poly_defect = tangent_defect(NormSpec::polygonal(trial_polygon(k)), 64, 0.5);
        if (!(poly_defect > 0.0))
            fail("classify.tangent_defect", derive_seed(seed_, kTagPolygon, k),
                 dump_points(trial_polygon(k).vertices()), poly_defect, 0.0);
    });

    check("classify.angle_length_margin", trials_, [&](std::uint64_t k) {
        SplitMix64 g = rng_stream(derive_seed(seed_, kTagProbes, k), 0);
        std::vector<Point2> gen;
        for (std::size_t i = 0; i < 2 + k % 4; ++i) {
            const Point2 p = random_annulus_point(g, 0.3, 1.0);
            gen.push_back(p);
            gen.push_back(rot90(p));
        }
        mark("geom.symmetric_hull");
        const NormSpec quarter_poly = NormSpec::polygonal(symmetric_hull(gen));
        const std::array<NormSpec, 4> norms{NormSpec::lp(1.0), NormSpec::lp(2.0),
                                            NormSpec::lp_infinity(), quarter_poly};
        for (const NormSpec& norm : norms) {
            const Point2 v = random_annulus_point(g, 0.5, 2.0);
            const double a = g.next_in(0.1, 2.0);
            const double b = -g.next_in(0.1, 2.0);
            mark("classify.angle_length_margin");
            const double margin =
                angle_length_margin(norm, v, v + a * rot90(v), v + b * rot90(v));
            if (!(margin > 0.0))
                fail("classify.angle_length_margin", derive_seed(seed_, kTagProbes, k),
                     dump_points(std::array<Point2, 1>{v}), margin, 0.0);
        }
    });
}

SuiteReport Suite::run() {
    if (trials_ == 0) return std::move(report_);
    geom_checks();
    norm_checks();
    arclength_checks();
    pivalue_checks();
    classify_checks();
    return std::move(report_);
}

}  // namespace

SymmetricPolygon random_symmetric_polygon(std::uint64_t seed, std::size_t n_generators) {
    if (n_generators < 2) throw DomainError("need at least 2 generators");
    for (std::uint64_t attempt = 0;; ++attempt) {
        SplitMix64 g = rng_stream(seed, attempt);
        std::vector<Point2> pts(n_generators);
        for (Point2& p : pts) p = random_annulus_point(g, 0.3, 1.0);
        try {
            return symmetric_hull(pts);
        } catch (const DegenerateBody&) {
            if (attempt >= 63) throw;
        }
    }
}

LinearMap2 random_linear_map(std::uint64_t seed, double cond_max) {
    if (!(cond_max >= 1.0)) throw DomainError("cond_max must be at least 1");
    SplitMix64 g = rng_stream(seed, 0);
    const double alpha = g.next_in(0.0, 2.0 * kPi);
    const double beta = g.next_in(0.0, 2.0 * kPi);
    const double cond = g.next_in(1.0, cond_max);
    const double det_mag = std::exp(g.next_in(std::log(1e-2), std::log(1e2)));
    const double s = std::sqrt(det_mag);
    double s1 = s * std::sqrt(cond);
    double s2 = s / std::sqrt(cond);
    if (g.next_double() < 0.5) s2 = -s2;
    const LinearMap2 diag{s1, 0.0, 0.0, s2};
    return LinearMap2::rotation(alpha).compose(diag).compose(LinearMap2::rotation(beta));
}

SuiteReport run_suite(std::uint64_t seed, std::uint64_t trials, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    return Suite(seed, trials, tol).run();
}

}  // namespace varpi
