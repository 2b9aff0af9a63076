#pragma once

#include <cstdint>
#include <optional>

#include "varpi/arclength.hpp"
#include "varpi/norms.hpp"

namespace varpi {

enum class ExtremalKind { parallelogram, linearly_regular_hexagon, generic };

// Extremal-shape tag. For a parallelogram the ball is conv{+-u, +-v}; for a
// linearly regular hexagon it is conv{u, v, v-u, -u, -v, u-v}.
struct ExtremalTag {
    ExtremalKind kind = ExtremalKind::generic;
    Point2 u{};
    Point2 v{};
};

// Order-4 linear symmetry of a polygonal ball: S maps the vertex cycle to
// itself with a constant index shift (n/4 or 3n/4) and S^2 = -I.
struct QuarterTurnBasis {
    LinearMap2 map;
    std::size_t shift = 0;
};

struct EuclideanTestResult {
    bool is_euclidean = false;
    double max_residual = 0.0;
};

struct QuarterTurnPiResult {
    LengthInterval pi;
    bool bound_ok = false;
};

// Parallelogram iff n = 4; linearly regular hexagon iff n = 6 and every
// vertex equals the sum of its two cyclic neighbors within tol*scale;
// generic otherwise.
ExtremalTag classify_extremal(const SymmetricPolygon& ball, double tol);

// Searches the two admissible vertex shifts (n/4 and 3n/4) for a linear map
// fixing the vertex cycle with S^2 = -I. Absence is a valid answer; balls
// with vertex count not divisible by 4 never have one.
std::optional<QuarterTurnBasis> quarter_turn_basis(const SymmetricPolygon& ball, double tol);

// Order-4 symmetry for a general norm: polygonal balls use
// quarter_turn_basis, l^p is always fixed by the quarter turn, and a linear
// image conjugates its inner answer.
std::optional<LinearMap2> quarter_turn_map(const NormSpec& norm, double tol);

// Largest parallelogram-law residual |2|u|^2 + 2|v|^2 - |u+v|^2 - |u-v|^2|
// over the fixed probes (e1, e2), (e1, e1+e2) and `trials` seeded random
// pairs. The norm is Euclidean exactly when the residual vanishes.
EuclideanTestResult euclidean_test(const NormSpec& norm, double tol, std::uint32_t trials);

// Deepest penetration of the perpendicular boundary line l_v = v + span(iv)
// into the open unit ball, maximized over n_samples boundary points and a
// symmetric t-grid in [-t_range, t_range] (t = 0, where the defect vanishes
// identically, is not sampled). Zero characterizes positive multiples of l^2.
// Not invariant under linear maps: perpendicularity is not affine.
double tangent_defect(const NormSpec& norm, std::size_t n_samples, double t_range);

// d_X(p, q) - theta * ||v||_X for p, q on the line l_v, where theta is the
// Euclidean angle between p and q. Positive for every norm with exact
// quarter-turn symmetry. Throws PreconditionError when the norm is not
// exactly quarter-turn symmetric, p or q is off l_v, or p = q.
double angle_length_margin(const NormSpec& norm, Point2 v, Point2 p, Point2 q);

// Certified pi-value of an exactly quarter-turn-symmetric norm together with
// the lower-bound check against pi. Throws PreconditionError.
QuarterTurnPiResult quarter_turn_pi_check(const NormSpec& norm, double tol);

}  // namespace varpi
