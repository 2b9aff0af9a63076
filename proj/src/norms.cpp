#include "varpi/norms.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace varpi {

namespace {

constexpr double kLpInfinityThreshold = 1e6;
constexpr double kInf = std::numeric_limits<double>::infinity();

SymmetricPolygon cross_polytope() {
    const std::array<Point2, 2> gen{{{1.0, 0.0}, {0.0, 1.0}}};
    return symmetric_hull(gen);
}

SymmetricPolygon unit_square() {
    const std::array<Point2, 2> gen{{{1.0, 1.0}, {-1.0, 1.0}}};
    return symmetric_hull(gen);
}

double lp_gauge(double p, Point2 v) {
    const double ax = std::abs(v.x), ay = std::abs(v.y);
    if (p == kInf) return std::max(ax, ay);
    if (p == 1.0) return ax + ay;
    const double m = std::max(ax, ay);
    if (m == 0.0) return 0.0;
    // Scaled form keeps the powers in [0, 1] regardless of |v|.
    return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

}  // namespace

NormSpec NormSpec::polygonal(SymmetricPolygon ball) {
    return NormSpec(Form{PolygonalNorm{std::move(ball)}});
}

NormSpec NormSpec::lp(double p) {
    if (!(p >= 1.0)) throw DomainError("l^p exponent must satisfy p >= 1");
    if (p > kLpInfinityThreshold) p = kInf;
    return NormSpec(Form{LpNorm{p}});
}

NormSpec NormSpec::lp_infinity() { return NormSpec(Form{LpNorm{kInf}}); }

NormSpec NormSpec::linear_image(const LinearMap2& map, NormSpec inner) {
    if (!(std::abs(map.det()) >= 1e-12)) throw SingularMap("linear image map is singular");
    if (const LinearImageNorm* li = inner.as_linear_image()) {
        return NormSpec(Form{LinearImageNorm{map.compose(li->map), li->inner}});
    }
    return NormSpec(Form{LinearImageNorm{map, std::make_shared<const NormSpec>(std::move(inner))}});
}

double gauge(const NormSpec& norm, Point2 v) {
    if (!finite(v)) throw DomainError("gauge of a non-finite vector");
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        if (v.x == 0.0 && v.y == 0.0) return 0.0;
        return 1.0 / ray_exit(poly->ball, v).t;
    }
    if (const LpNorm* lp = norm.as_lp()) return lp_gauge(lp->p, v);
    const LinearImageNorm& li = *norm.as_linear_image();
    return gauge(*li.inner, li.map.inverse().apply(v));
}

double distance(const NormSpec& norm, Point2 p, Point2 q) { return gauge(norm, p - q); }

Point2 boundary_point(const NormSpec& norm, double theta) {
    if (!std::isfinite(theta)) throw DomainError("boundary angle must be finite");
    const Point2 u{std::cos(theta), std::sin(theta)};
    return (1.0 / gauge(norm, u)) * u;
}

Point2 support_point(const NormSpec& norm, Point2 d) {
    if (d.x == 0.0 && d.y == 0.0) throw ZeroDirection("support direction is the zero vector");
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        const std::vector<Point2>& v = poly->ball.vertices();
        std::size_t best = 0;
        double best_dot = dot(d, v[0]);
        for (std::size_t i = 1; i < v.size(); ++i) {
            const double s = dot(d, v[i]);
            if (s > best_dot) {
                best_dot = s;
                best = i;
            }
        }
        return v[best];
    }
    if (const LpNorm* lp = norm.as_lp()) {
        const double p = lp->p;
        if (p == 1.0) return support_point(NormSpec::polygonal(cross_polytope()), d);
        if (p == kInf) return support_point(NormSpec::polygonal(unit_square()), d);
        // Maximizer of <d, w> on the l^p sphere: w_i proportional to
        // sgn(d_i) |d_i|^(1/(p-1)), rescaled to gauge 1.
        const double m = std::max(std::abs(d.x), std::abs(d.y));
        const double e = 1.0 / (p - 1.0);
        const Point2 w{std::copysign(std::pow(std::abs(d.x) / m, e), d.x),
                       std::copysign(std::pow(std::abs(d.y) / m, e), d.y)};
        return (1.0 / lp_gauge(p, w)) * w;
    }
    const LinearImageNorm& li = *norm.as_linear_image();
    return li.map.apply(support_point(*li.inner, li.map.transpose().apply(d)));
}

NormSpec pushforward(const LinearMap2& map, const NormSpec& norm) {
    if (!(std::abs(map.det()) >= 1e-12)) throw SingularMap("push-forward map is singular");
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        std::vector<Point2> mapped;
        mapped.reserve(poly->ball.vertex_count());
        for (const Point2& v : poly->ball.vertices()) mapped.push_back(map.apply(v));
        return NormSpec::polygonal(symmetric_hull(mapped));
    }
    return NormSpec::linear_image(map, norm);
}

std::optional<SymmetricPolygon> polygonal_form(const NormSpec& norm) {
    if (const PolygonalNorm* poly = norm.as_polygonal()) return poly->ball;
    if (const LpNorm* lp = norm.as_lp()) {
        if (lp->p == 1.0) return cross_polytope();
        if (lp->p == kInf) return unit_square();
        return std::nullopt;
    }
    const LinearImageNorm& li = *norm.as_linear_image();
    std::optional<SymmetricPolygon> inner = polygonal_form(*li.inner);
    if (!inner) return std::nullopt;
    std::vector<Point2> mapped;
    mapped.reserve(inner->vertex_count());
    for (const Point2& v : inner->vertices()) mapped.push_back(li.map.apply(v));
    return symmetric_hull(mapped);
}

Point2 boundary_normal(const NormSpec& norm, Point2 b) {
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        const RayExit exit = ray_exit(poly->ball, b);
        const Point2 a = poly->ball.vertex(exit.edge_index);
        const Point2 c = poly->ball.vertex(exit.edge_index + 1);
        return rot270(c - a);
    }
    if (const LpNorm* lp = norm.as_lp()) {
        const double p = lp->p;
        if (p == 1.0 || p == kInf)
            return boundary_normal(NormSpec::polygonal(*polygonal_form(norm)), b);
        // Gradient direction of |x|^p + |y|^p.
        return {std::copysign(std::pow(std::abs(b.x), p - 1.0), b.x),
                std::copysign(std::pow(std::abs(b.y), p - 1.0), b.y)};
    }
    const LinearImageNorm& li = *norm.as_linear_image();
    const LinearMap2 inv = li.map.inverse();
    return inv.transpose().apply(boundary_normal(*li.inner, inv.apply(b)));
}

}  // namespace varpi
