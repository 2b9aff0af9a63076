#include "varpi/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace varpi {

namespace {

constexpr double kDedupeDistance = 1e-12;
constexpr double kCollinearAreaFactor = 1e-12;  // times scale^2
constexpr double kSingularDet = 1e-12;

bool lex_less(Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

double max_abs_coordinate(std::span<const Point2> pts) {
    double m = 0.0;
    for (const Point2& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return m;
}

// Andrew's monotone chain. Near-collinear triples (cross magnitude below
// eps_area) are treated as collinear and dropped, so the result holds extreme
// points only. Returns the hull counter-clockwise from the lexicographic min.
std::vector<Point2> monotone_chain(std::vector<Point2> pts, double eps_area) {
    std::sort(pts.begin(), pts.end(), lex_less);

    // Collapse near-duplicates against the last kept point.
    std::vector<Point2> uniq;
    uniq.reserve(pts.size());
    for (const Point2& p : pts) {
        if (!uniq.empty()) {
            const Point2 d = p - uniq.back();
            if (std::abs(d.x) <= kDedupeDistance && std::abs(d.y) <= kDedupeDistance) continue;
        }
        uniq.push_back(p);
    }
    const std::size_t n = uniq.size();
    if (n <= 2) return uniq;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], uniq[i] - hull[k - 1]) <= eps_area) --k;
        hull[k++] = uniq[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
        while (k >= lo && cross(hull[k - 1] - hull[k - 2], uniq[i] - hull[k - 1]) <= eps_area) --k;
        hull[k++] = uniq[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

void rotate_to_lex_max(std::vector<Point2>& verts) {
    auto it = std::max_element(verts.begin(), verts.end(), lex_less);
    std::rotate(verts.begin(), it, verts.end());
}

void require_finite(std::span<const Point2> pts) {
    for (const Point2& p : pts)
        if (!finite(p)) throw DomainError("non-finite coordinate in point set");
}

}  // namespace

double euclidean_norm(Point2 a) { return std::hypot(a.x, a.y); }

double arg_angle(Point2 a) { return std::atan2(a.y, a.x); }

bool finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

LinearMap2 LinearMap2::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

LinearMap2 LinearMap2::inverse() const {
    const double d = det();
    if (!(std::abs(d) >= kSingularDet))
        throw SingularMap("2x2 map is singular (|det| < 1e-12)");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

SymmetricPolygon symmetric_hull(std::span<const Point2> points) {
    require_finite(points);

    std::vector<Point2> sym;
    sym.reserve(2 * points.size());
    for (const Point2& p : points) {
        sym.push_back(p);
        sym.push_back(-p);
    }
    const double scale = max_abs_coordinate(sym);
    if (scale == 0.0) throw DegenerateBody("all generators are the origin");

    std::vector<Point2> hull = monotone_chain(std::move(sym), kCollinearAreaFactor * scale * scale);
    if (hull.size() < 4)
        throw DegenerateBody("degenerate unit ball: generators span a line through the origin");
    if (hull.size() % 2 != 0)
        throw DegenerateBody("degenerate unit ball: symmetrized hull collapsed unevenly");

    rotate_to_lex_max(hull);

    // The hull of an exactly symmetric point set is symmetric; enforce the
    // invariant bit-exactly by mirroring the first half.
    const std::size_t half = hull.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const Point2 gap = hull[k + half] + hull[k];
        if (std::abs(gap.x) > 1e-9 * scale || std::abs(gap.y) > 1e-9 * scale)
            throw DegenerateBody("degenerate unit ball: near-collinear generator cluster");
        hull[k + half] = -hull[k];
    }

    // Validate strict convexity and the origin's position once, so every
    // downstream operation may assume them.
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = hull[i];
        const Point2 b = hull[(i + 1) % n];
        const Point2 c = hull[(i + 2) % n];
        if (!(cross(b - a, c - b) > 0.0))
            throw DegenerateBody("degenerate unit ball: vertex cycle not strictly convex");
        if (!(cross(b - a, -a) > 0.0))
            throw DegenerateBody("degenerate unit ball: origin not strictly inside");
    }

    return SymmetricPolygon(std::move(hull), max_abs_coordinate(hull));
}

RayExit ray_exit(const SymmetricPolygon& poly, Point2 d) {
    if (d.x == 0.0 && d.y == 0.0) throw ZeroDirection("ray direction is the zero vector");
    if (!finite(d)) throw DomainError("non-finite ray direction");

    const std::vector<Point2>& v = poly.vertices();
    const std::size_t n = v.size();
    double best_t = std::numeric_limits<double>::infinity();
    std::size_t best_edge = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = v[i];
        const Point2 edge = v[(i + 1) % n] - a;
        const Point2 outward = rot270(edge);
        const double den = dot(outward, d);
        if (den <= 0.0) continue;  // edge does not face d
        const double t = dot(outward, a) / den;
        if (t < best_t) {
            best_t = t;
            best_edge = i;
        }
    }
    return {best_t, best_edge};
}

std::vector<Point2> extreme_points(std::span<const Point2> points) {
    require_finite(points);
    if (points.empty()) return {};

    const double scale = max_abs_coordinate(points);
    std::vector<Point2> hull = monotone_chain(std::vector<Point2>(points.begin(), points.end()),
                                              kCollinearAreaFactor * scale * scale);
    if (!hull.empty()) rotate_to_lex_max(hull);
    return hull;
}

}  // namespace varpi
