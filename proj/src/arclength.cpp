#include "varpi/arclength.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace varpi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint32_t kInitialSamples = 64;
constexpr std::uint32_t kMaxSamples = 1u << 20;
constexpr double kRoundingInflationPerSample = 1e-12;
constexpr double kParallelNormalEps = 1e-9;
constexpr double kIntersectionRangeFactor = 1e8;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct SupportLine {
    Point2 point;   // boundary point the line touches
    Point2 normal;  // outward unit normal
    double offset;  // dot(normal, point)
};

SupportLine support_line_at(const NormSpec& body, Point2 b) {
    Point2 n = boundary_normal(body, b);
    const double len = euclidean_norm(n);
    n = (1.0 / len) * n;
    return {b, n, dot(n, b)};
}

// Upper bound on the measured length of the boundary arc from a.point to
// b.point (angular gap below pi/2). The arc lies inside the triangle cut by
// the chord and the two support lines, so the tangent chain through their
// intersection dominates it. When those lines are near-parallel or their
// intersection is out of range, the arc still lies in the triangle bounded by
// the chord, the ray through a.point, and b's support line; the chain through
// that ray's exit is the fallback. Returns +inf when neither route can be
// certified at this resolution (the caller refines).
double arc_upper_bound(const NormSpec& measure, const SupportLine& a, const SupportLine& b) {
    const double det = cross(a.normal, b.normal);
    if (det > kParallelNormalEps) {
        const Point2 w{(a.offset * b.normal.y - b.offset * a.normal.y) / det,
                       (a.normal.x * b.offset - b.normal.x * a.offset) / det};
        const double range = kIntersectionRangeFactor *
                             std::max(euclidean_norm(a.point), euclidean_norm(b.point));
        if (euclidean_norm(w) <= range)
            return gauge(measure, w - a.point) + gauge(measure, b.point - w);
    }
    const double den = dot(b.normal, a.point);
    if (den > 0.0) {
        const double s = b.offset / den;  // a.point scaled out to b's support line
        if (s >= 1.0) {
            const Point2 exit = s * a.point;
            return gauge(measure, exit - a.point) + gauge(measure, b.point - exit);
        }
        if (s >= 1.0 - 1e-12) return gauge(measure, b.point - a.point);
    }
    return kInf;
}

double exact_polygon_boundary_length(const NormSpec& measure, const SymmetricPolygon& ball) {
    const std::vector<Point2>& v = ball.vertices();
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += gauge(measure, v[(i + 1) % v.size()] - v[i]);
    return sum;
}

// Exact measured length of the polygon boundary arc between the two angles:
// walk from boundary_point(theta_start) through every vertex with direction
// angle strictly inside the sweep, then to boundary_point(theta_end).
LengthInterval exact_polygon_arc(const NormSpec& measure, const NormSpec& body,
                                 const SymmetricPolygon& ball, double theta_start,
                                 double theta_end) {
    const Point2 start = boundary_point(body, theta_start);
    const Point2 end = boundary_point(body, theta_end);

    std::vector<std::pair<double, Point2>> inside;
    for (const Point2& v : ball.vertices()) {
        double lifted = arg_angle(v);
        while (lifted <= theta_start) lifted += kTwoPi;
        while (lifted > theta_start + kTwoPi) lifted -= kTwoPi;
        if (lifted < theta_end) inside.emplace_back(lifted, v);
    }
    std::sort(inside.begin(), inside.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    double sum = 0.0;
    Point2 prev = start;
    for (const auto& [angle, v] : inside) {
        sum += gauge(measure, v - prev);
        prev = v;
    }
    sum += gauge(measure, end - prev);
    return {sum, sum, static_cast<std::uint32_t>(inside.size() + 2)};
}

// Shared doubling loop. Samples count+1 angles (the closed case passes
// wrap = true and drops the duplicate endpoint).
LengthInterval refine_bounds(const NormSpec& measure, const NormSpec& body, double theta_start,
                             double span, bool wrap, double tol) {
    for (std::uint32_t n = kInitialSamples;; n *= 2) {
        std::vector<SupportLine> lines;
        lines.reserve(n + 1);
        for (std::uint32_t i = 0; i < n; ++i) {
            const double theta = theta_start + span * static_cast<double>(i) / n;
            lines.push_back(support_line_at(body, boundary_point(body, theta)));
        }
        const SupportLine last =
            wrap ? lines.front() : support_line_at(body, boundary_point(body, theta_start + span));
        lines.push_back(last);

        double lower = 0.0;
        double upper = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            lower += gauge(measure, lines[i + 1].point - lines[i].point);
            upper += arc_upper_bound(measure, lines[i], lines[i + 1]);
        }
        upper *= 1.0 + kRoundingInflationPerSample * n;

        if (upper - lower <= tol) return {lower, upper, n};
        if (n >= kMaxSamples)
            throw NoConvergence("length enclosure did not reach tolerance within 2^20 samples");
    }
}

}  // namespace

double polyline_length(const NormSpec& norm, const PolylinePath& path) {
    if (path.points.size() < 2) throw DomainError("polyline needs at least 2 points");
    for (const Point2& p : path.points)
        if (!finite(p)) throw DomainError("non-finite polyline point");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        sum += distance(norm, path.points[i], path.points[i + 1]);
    return sum;
}

LengthInterval boundary_length_bounds(const NormSpec& measure, const NormSpec& body, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (std::optional<SymmetricPolygon> ball = polygonal_form(body)) {
        const double sum = exact_polygon_boundary_length(measure, *ball);
        return {sum, sum, static_cast<std::uint32_t>(ball->vertex_count())};
    }
    return refine_bounds(measure, body, 0.0, kTwoPi, /*wrap=*/true, tol);
}

LengthInterval arc_length_bounds(const NormSpec& measure, const NormSpec& body,
                                 double theta_start, double theta_end, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!std::isfinite(theta_start) || !std::isfinite(theta_end))
        throw DomainError("arc angles must be finite");
    if (!(theta_end > theta_start)) throw EmptyArc("arc requires theta_end > theta_start");
    const double span = theta_end - theta_start;
    if (span > kTwoPi * (1.0 + 1e-12)) throw DomainError("arc sweep exceeds a full turn");

    if (std::optional<SymmetricPolygon> ball = polygonal_form(body))
        return exact_polygon_arc(measure, body, *ball, theta_start, theta_end);
    return refine_bounds(measure, body, theta_start, span, /*wrap=*/false, tol);
}

}  // namespace varpi
