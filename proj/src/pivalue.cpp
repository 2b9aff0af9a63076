#include "varpi/pivalue.hpp"

#include <cmath>
#include <numbers>

namespace varpi {

namespace {

constexpr int kBisectionSteps = 80;
constexpr int kAlternationCap = 256;

double half(double x) { return 0.5 * x; }

// Best |cross| pair over polygon vertices; ties keep the lexicographically
// first (i, j) by canonical index, so reports are reproducible.
std::pair<Point2, Point2> max_cross_pair(const SymmetricPolygon& ball) {
    const std::vector<Point2>& v = ball.vertices();
    double best = -1.0;
    std::pair<Point2, Point2> pair{v[0], v[1]};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const double c = std::abs(cross(v[i], v[j]));
            if (c > best) {
                best = c;
                pair = {v[i], v[j]};
            }
        }
    }
    return pair;
}

// Alternating support maximization of |cross(u, v)|: each half-step is the
// exact maximizer of a linear functional, so the objective never decreases.
std::pair<Point2, Point2> alternating_max_cross(const NormSpec& norm, double tol) {
    Point2 u = boundary_point(norm, 0.0);
    Point2 v = support_point(norm, rot90(u));
    double obj = std::abs(cross(u, v));
    for (int it = 0; it < kAlternationCap; ++it) {
        u = support_point(norm, rot270(v));
        v = support_point(norm, rot90(u));
        const double next = std::abs(cross(u, v));
        if (next - obj <= tol) return {u, v};
        obj = next;
    }
    throw NoConvergence("cross maximization did not stall within 256 alternations");
}

}  // namespace

PiReport pi_value(const NormSpec& norm, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    PiReport report;
    if (polygonal_form(norm)) {
        const LengthInterval full = boundary_length_bounds(norm, norm, tol);
        report.value = {half(full.lower), half(full.upper), full.refinements};
        report.method = PiMethod::exact_polygonal;
    } else {
        const LengthInterval full = boundary_length_bounds(norm, norm, 2.0 * tol);
        report.value = {half(full.lower), half(full.upper), full.refinements};
        report.method = PiMethod::certified;
    }
    return report;
}

NormSpec make_xt(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("X_t parameter must lie in [0, 1]");
    const std::array<Point2, 3> generators{{{1.0, 0.0}, {t, 1.0}, {-1.0, 1.0}}};
    return NormSpec::polygonal(symmetric_hull(generators));
}

std::vector<LpPiRow> lp_pi_table(std::span<const double> ps, double tol) {
    std::vector<LpPiRow> rows;
    rows.reserve(ps.size());
    for (const double p : ps) {
        const PiReport r = pi_value(NormSpec::lp(p), tol);
        rows.push_back({p, r.value.lower, r.value.upper});
    }
    return rows;
}

NormalizationCertificate circumscribe_normalize(const NormSpec& norm, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    std::pair<Point2, Point2> uv;
    if (std::optional<SymmetricPolygon> ball = polygonal_form(norm)) {
        uv = max_cross_pair(*ball);
    } else {
        uv = alternating_max_cross(norm, tol);
    }
    const auto [u, v] = uv;
    if (std::abs(cross(u, v)) < 1e-12)
        throw SingularMap("maximal cross product is numerically zero");

    const LinearMap2 basis = LinearMap2::from_columns(u, v);
    const LinearMap2 map = basis.inverse();

    // Certify before returning: the normalized ball must touch e1 and e2 and
    // stay inside the unit square.
    const NormSpec normalized = pushforward(map, norm);
    if (std::abs(gauge(normalized, {1.0, 0.0}) - 1.0) > tol ||
        std::abs(gauge(normalized, {0.0, 1.0}) - 1.0) > tol)
        throw NoConvergence("normalization certificate failed the unit-gauge check");
    for (int k = 0; k < 64; ++k) {
        const Point2 b = boundary_point(normalized, 2.0 * std::numbers::pi * k / 64.0);
        if (std::abs(b.x) > 1.0 + tol || std::abs(b.y) > 1.0 + tol)
            throw NoConvergence("normalization certificate failed the containment check");
    }
    return {map, u, v};
}

HexagonCertificate inscribed_hexagon(const NormSpec& norm, double tol, std::optional<Point2> u_in) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    const std::optional<SymmetricPolygon> ball = polygonal_form(norm);
    Point2 u;
    if (u_in) {
        u = *u_in;
        if (std::abs(gauge(norm, u) - 1.0) > tol)
            throw PreconditionError("hexagon seed is not a unit vector");
        if (ball) {
            bool is_vertex = false;
            for (const Point2& w : ball->vertices()) {
                const Point2 d = w - u;
                if (std::abs(d.x) <= tol * ball->scale() && std::abs(d.y) <= tol * ball->scale())
                    is_vertex = true;
            }
            if (!is_vertex)
                throw PreconditionError("hexagon seed is not an extreme point of the ball");
        }
    } else {
        u = ball ? ball->vertices().front() : boundary_point(norm, 0.0);
    }

    // g(theta) = gauge(boundary_point(theta) - u) - 1 runs from -1 at arg u
    // to +1 at arg(-u); bisect the first counter-clockwise sign change.
    const double theta_u = arg_angle(u);
    auto g = [&](double theta) { return gauge(norm, boundary_point(norm, theta) - u) - 1.0; };
    double lo = theta_u;
    double hi = theta_u + std::numbers::pi;
    if (!(g(hi) > 0.0)) throw NoRoot("hexagon root bracket lost: gauge(-u - u) <= 1");
    for (int it = 0; it < kBisectionSteps; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const Point2 v = boundary_point(norm, 0.5 * (lo + hi));

    HexagonCertificate cert;
    cert.u = u;
    cert.v = v;
    cert.vertices = {u, v, v - u, -u, -v, u - v};
    for (int k = 0; k < 6; ++k) {
        cert.side_gauges[k] = gauge(norm, cert.vertices[(k + 1) % 6] - cert.vertices[k]);
        cert.vertex_gauges[k] = gauge(norm, cert.vertices[k]);
    }
    return cert;
}

PiReport pi_certificates(const NormSpec& norm, double tol) {
    PiReport report = pi_value(norm, tol);
    report.hexagon = inscribed_hexagon(norm, tol);
    report.parallelogram_map = circumscribe_normalize(norm, tol).map;
    if (std::optional<SymmetricPolygon> ball = polygonal_form(norm))
        report.classification = classify_extremal(*ball, 1e-9);
    return report;
}

}  // namespace varpi
