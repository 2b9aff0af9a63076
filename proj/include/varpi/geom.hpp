#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varpi/errors.hpp"

namespace varpi {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Counter-clockwise quarter turn (multiplication by i) and its inverse.
constexpr Point2 rot90(Point2 a) { return {-a.y, a.x}; }
constexpr Point2 rot270(Point2 a) { return {a.y, -a.x}; }

double euclidean_norm(Point2 a);
double arg_angle(Point2 a);  // atan2(y, x)
bool finite(Point2 a);

// Row-major 2x2 real matrix.
struct LinearMap2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static constexpr LinearMap2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr LinearMap2 quarter_turn() { return {0.0, -1.0, 1.0, 0.0}; }
    static LinearMap2 rotation(double theta);
    static constexpr LinearMap2 scaling(double s) { return {s, 0.0, 0.0, s}; }
    // Matrix with the given column vectors.
    static constexpr LinearMap2 from_columns(Point2 c1, Point2 c2) {
        return {c1.x, c2.x, c1.y, c2.y};
    }

    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr LinearMap2 transpose() const { return {a11, a21, a12, a22}; }
    constexpr Point2 apply(Point2 v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
    constexpr Point2 operator()(Point2 v) const { return apply(v); }
    // this * rhs (apply rhs first).
    constexpr LinearMap2 compose(const LinearMap2& rhs) const {
        return {a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
                a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
    }
    // Adjugate over determinant; throws SingularMap when |det| < 1e-12.
    LinearMap2 inverse() const;
};

// Canonical centrally symmetric convex polygon: vertices counter-clockwise,
// extreme points only, even count n >= 4, starting at the lexicographically
// largest vertex, and vertex(k + n/2) == -vertex(k) exactly.
class SymmetricPolygon {
public:
    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }
    // Modular access.
    Point2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
    // Largest coordinate magnitude; the natural scale for tolerances.
    double scale() const { return scale_; }

private:
    SymmetricPolygon(std::vector<Point2> verts, double scale)
        : verts_(std::move(verts)), scale_(scale) {}

    std::vector<Point2> verts_;
    double scale_ = 0.0;

    friend SymmetricPolygon symmetric_hull(std::span<const Point2> points);
};

// Convex hull of points and their negations, in canonical form. Throws
// DegenerateBody when the symmetrized hull has empty interior (all points on
// one line through the origin).
SymmetricPolygon symmetric_hull(std::span<const Point2> points);

struct RayExit {
    double t = 0.0;           // largest scalar with t*d inside the polygon
    std::size_t edge_index = 0;  // boundary edge containing t*d (lower index at a vertex)
};

// Exit of the ray {t*d : t >= 0} through the polygon boundary. Throws
// ZeroDirection when d = 0.
RayExit ray_exit(const SymmetricPolygon& poly, Point2 d);

// Hull vertices with collinear interior points removed, counter-clockwise
// from the lexicographically largest point. Degenerate input (all points on a
// line) yields the 1 or 2 segment endpoints.
std::vector<Point2> extreme_points(std::span<const Point2> points);

}  // namespace varpi
