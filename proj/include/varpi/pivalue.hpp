#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "varpi/arclength.hpp"
#include "varpi/classify.hpp"
#include "varpi/norms.hpp"

namespace varpi {

enum class PiMethod { exact_polygonal, certified };

// Inscribed equilateral-hexagon certificate: all six sides have gauge 1 (to
// tolerance) and all six vertices lie in the unit ball, which witnesses that
// the self-measured circumference is at least 6.
struct HexagonCertificate {
    Point2 u{};
    Point2 v{};
    std::array<Point2, 6> vertices{};  // u, v, v-u, -u, -v, u-v
    std::array<double, 6> side_gauges{};
    std::array<double, 6> vertex_gauges{};
};

// Circumscribed-parallelogram certificate: u, v on the unit sphere with
// maximal |cross|, and the basis change sending them to e1, e2. The
// normalized ball lies in [-1, 1]^2, which witnesses pi-value <= 4.
struct NormalizationCertificate {
    LinearMap2 map;  // T with T(u) = e1, T(v) = e2
    Point2 u{};
    Point2 v{};
};

struct PiReport {
    LengthInterval value;  // half the boundary length
    PiMethod method = PiMethod::certified;
    std::optional<HexagonCertificate> hexagon;
    std::optional<LinearMap2> parallelogram_map;
    std::optional<ExtremalTag> classification;
};

// Half the self-measured boundary length. Polygonal-representable norms give
// the exact vertex sum (method exact_polygonal, degenerate interval); smooth
// norms a certified enclosure of width <= tol.
PiReport pi_value(const NormSpec& norm, double tol);

// The hexagon-family norm with unit ball
// conv{e1, t*e1 + e2, e2 - e1, -e1, -t*e1 - e2, e1 - e2}; four vertices when
// t = 1. Throws DomainError outside [0, 1].
NormSpec make_xt(double t);

struct LpPiRow {
    double p = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// Certified pi-value enclosures for each exponent; p = 1 and p = inf are
// exact via their polygonal balls.
std::vector<LpPiRow> lp_pi_table(std::span<const double> ps, double tol);

// Unit vectors u, v maximizing |cross(u, v)| over the ball (exhaustive over
// vertex pairs for polygons, alternating support maximization for smooth
// norms) and the basis change T = [u v]^-1. Verifies before returning that
// gauge_TX(e1) = gauge_TX(e2) = 1 within tol and that 64 sampled boundary
// points of TX lie in [-1-tol, 1+tol]^2.
NormalizationCertificate circumscribe_normalize(const NormSpec& norm, double tol);

// Inscribed equilateral hexagon through a unit vector u (default: first
// canonical vertex for polygons, boundary_point(0) otherwise). The second
// generator v is the root of gauge(boundary_point(theta) - u) = 1 on
// (arg u, arg u + pi), found by 80 bisection steps.
HexagonCertificate inscribed_hexagon(const NormSpec& norm, double tol,
                                     std::optional<Point2> u = std::nullopt);

// pi_value together with both constructive certificates and, for
// polygonal-representable norms, the extremal classification.
PiReport pi_certificates(const NormSpec& norm, double tol);

}  // namespace varpi
