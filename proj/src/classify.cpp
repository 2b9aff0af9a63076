#include "varpi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "varpi/pivalue.hpp"
#include "varpi/rng.hpp"

namespace varpi {

namespace {

// Fixed seed for the parallelogram-law probe pairs; the operation takes no
// seed parameter and must be deterministic.
constexpr std::uint64_t kEuclideanProbeSeed = 0x9a7c3d51f00dull;

double max_abs_entry(const LinearMap2& m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

// Solve S from S*v0 = w0, S*v1 = w1 (columns).
LinearMap2 solve_map(Point2 v0, Point2 v1, Point2 w0, Point2 w1) {
    return LinearMap2::from_columns(w0, w1).compose(LinearMap2::from_columns(v0, v1).inverse());
}

bool shift_map_fits(const SymmetricPolygon& ball, const LinearMap2& s, std::size_t shift,
                    double tol) {
    const std::vector<Point2>& v = ball.vertices();
    const double slack = tol * ball.scale();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Point2 gap = s.apply(v[k]) - ball.vertex(k + shift);
        if (std::abs(gap.x) > slack || std::abs(gap.y) > slack) return false;
    }
    const LinearMap2 sq = s.compose(s);
    const LinearMap2 plus_id{sq.a11 + 1.0, sq.a12, sq.a21, sq.a22 + 1.0};
    return max_abs_entry(plus_id) <= tol && std::abs(s.det() - 1.0) <= 1e-9;
}

// Exact quarter-turn symmetry in the standard basis: l^p always has it; a
// polygonal ball has it when some vertex-shift map equals the quarter turn;
// everything else is undecided and rejected.
bool exactly_quarter_symmetric(const NormSpec& norm) {
    if (norm.as_lp()) return true;
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        const std::optional<QuarterTurnBasis> basis = quarter_turn_basis(poly->ball, 1e-9);
        if (!basis) return false;
        const LinearMap2 gap{basis->map.a11 - 0.0, basis->map.a12 + 1.0, basis->map.a21 - 1.0,
                             basis->map.a22 - 0.0};
        return max_abs_entry(gap) <= 1e-9;
    }
    return false;
}

}  // namespace

ExtremalTag classify_extremal(const SymmetricPolygon& ball, double tol) {
    const std::vector<Point2>& v = ball.vertices();
    if (v.size() == 4) return {ExtremalKind::parallelogram, v[0], v[1]};
    if (v.size() == 6) {
        // conv{u, v, v-u, -u, -v, u-v} is exactly the 6-cycle in which every
        // vertex is the sum of its two neighbors.
        const double slack = tol * ball.scale();
        bool hexagonal = true;
        for (std::size_t k = 0; k < 6 && hexagonal; ++k) {
            const Point2 gap = ball.vertex(k + 5) + ball.vertex(k + 1) - v[k];
            hexagonal = std::abs(gap.x) <= slack && std::abs(gap.y) <= slack;
        }
        if (hexagonal) return {ExtremalKind::linearly_regular_hexagon, v[0], v[1]};
    }
    return {ExtremalKind::generic, {}, {}};
}

std::optional<QuarterTurnBasis> quarter_turn_basis(const SymmetricPolygon& ball, double tol) {
    const std::size_t n = ball.vertex_count();
    if (n % 4 != 0) return std::nullopt;
    // An order-4 map fixing the ball permutes the vertex cycle with constant
    // shift m; S^2 is an involution fixing the ball, hence -I, so the shift
    // satisfies 2m = n/2 mod n: m = n/4 or 3n/4. Both candidates are tried.
    // The 2x2 system uses the best-conditioned vertex pair: consecutive
    // vertices of a strongly skewed ball can be nearly collinear, and the
    // shift map is pair-independent anyway.
    const std::vector<Point2>& v = ball.vertices();
    std::size_t best_i = 0, best_j = 1;
    double best_cross = 0.0;
    for (std::size_t i = 0; i + 1 < n / 2 + 1; ++i) {
        for (std::size_t j = i + 1; j < n / 2 + 1; ++j) {
            const double c = std::abs(cross(v[i], v[j]));
            if (c > best_cross) {
                best_cross = c;
                best_i = i;
                best_j = j;
            }
        }
    }
    for (const std::size_t m : {n / 4, 3 * n / 4}) {
        const LinearMap2 s =
            solve_map(v[best_i], v[best_j], ball.vertex(best_i + m), ball.vertex(best_j + m));
        if (shift_map_fits(ball, s, m, tol)) return QuarterTurnBasis{s, m};
    }
    return std::nullopt;
}

std::optional<LinearMap2> quarter_turn_map(const NormSpec& norm, double tol) {
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        const std::optional<QuarterTurnBasis> basis = quarter_turn_basis(poly->ball, tol);
        if (!basis) return std::nullopt;
        return basis->map;
    }
    if (norm.as_lp()) return LinearMap2::quarter_turn();
    const LinearImageNorm& li = *norm.as_linear_image();
    const std::optional<LinearMap2> inner = quarter_turn_map(*li.inner, tol);
    if (!inner) return std::nullopt;
    return li.map.compose(*inner).compose(li.map.inverse());
}

EuclideanTestResult euclidean_test(const NormSpec& norm, double tol, std::uint32_t trials) {
    if (trials < 1) throw DomainError("euclidean_test needs at least one trial");

    auto residual = [&](Point2 u, Point2 v) {
        const double gu = gauge(norm, u), gv = gauge(norm, v);
        const double gs = gauge(norm, u + v), gd = gauge(norm, u - v);
        return std::abs(2.0 * gu * gu + 2.0 * gv * gv - gs * gs - gd * gd);
    };

    double max_residual = residual({1.0, 0.0}, {0.0, 1.0});
    max_residual = std::max(max_residual, residual({1.0, 0.0}, {1.0, 1.0}));
    for (std::uint32_t k = 0; k < trials; ++k) {
        SplitMix64 g = rng_stream(kEuclideanProbeSeed, k);
        const Point2 u{g.next_in(-1.0, 1.0), g.next_in(-1.0, 1.0)};
        const Point2 v{g.next_in(-1.0, 1.0), g.next_in(-1.0, 1.0)};
        max_residual = std::max(max_residual, residual(u, v));
    }
    return {max_residual <= tol, max_residual};
}

double tangent_defect(const NormSpec& norm, std::size_t n_samples, double t_range) {
    if (n_samples < 8) throw DomainError("tangent_defect needs at least 8 samples");
    if (!(t_range > 0.0)) throw DomainError("tangent_defect needs a positive t range");

    constexpr int kGrid = 128;  // even count straddles, and never hits, t = 0
    double worst = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / n_samples;
        const Point2 v = boundary_point(norm, theta);
        const Point2 perp = rot90(v);
        for (int k = 0; k < kGrid; ++k) {
            const double t = -t_range + 2.0 * t_range * k / (kGrid - 1.0);
            worst = std::max(worst, 1.0 - gauge(norm, v + t * perp));
        }
    }
    return worst;
}

double angle_length_margin(const NormSpec& norm, Point2 v, Point2 p, Point2 q) {
    if (v.x == 0.0 && v.y == 0.0) throw PreconditionError("line base vector is zero");
    if (!exactly_quarter_symmetric(norm))
        throw PreconditionError("norm is not exactly quarter-turn symmetric");
    const double vnorm = euclidean_norm(v);
    const double on_line_slack = 1e-9 * vnorm;
    // p, q must lie on l_v = v + span(iv): the component of p - v along v
    // vanishes.
    if (std::abs(dot(p - v, v)) > on_line_slack * (euclidean_norm(p - v) + vnorm) ||
        std::abs(dot(q - v, v)) > on_line_slack * (euclidean_norm(q - v) + vnorm))
        throw PreconditionError("probe points are not on the perpendicular line l_v");
    if (p == q) throw PreconditionError("probe points coincide");

    const double theta = std::atan2(std::abs(cross(p, q)), dot(p, q));
    return distance(norm, p, q) - theta * gauge(norm, v);
}

QuarterTurnPiResult quarter_turn_pi_check(const NormSpec& norm, double tol) {
    if (!exactly_quarter_symmetric(norm))
        throw PreconditionError("norm is not exactly quarter-turn symmetric");
    const PiReport report = pi_value(norm, tol);
    const double lower_target = std::numbers::pi - tol;
    const bool ok = report.value.upper >= lower_target &&
                    report.value.lower >= lower_target - report.value.width();
    return {report.value, ok};
}

}  // namespace varpi
