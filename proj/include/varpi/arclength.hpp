#pragma once

#include <cstdint>
#include <vector>

#include "varpi/norms.hpp"

namespace varpi {

struct PolylinePath {
    std::vector<Point2> points;  // at least 2

    bool closed() const {
        return points.size() >= 2 && points.front() == points.back();
    }
};

// Certified enclosure of a curve length measured in a norm.
struct LengthInterval {
    double lower = 0.0;
    double upper = 0.0;
    std::uint32_t refinements = 0;  // final sample count

    double width() const { return upper - lower; }
};

// Exact length of a polygonal path: the sum of successive distances.
double polyline_length(const NormSpec& norm, const PolylinePath& path);

// Certified enclosure of len_measure(boundary of body's unit ball).
// Polygonal-representable bodies give the exact vertex sum (degenerate
// interval). Otherwise the lower bound is an inscribed closed polyline at n
// uniform angles and the upper bound a circumscribed support-line chain, with
// n doubling from 64 until the width reaches tol. Throws NoConvergence past
// n = 2^20.
LengthInterval boundary_length_bounds(const NormSpec& measure, const NormSpec& body, double tol);

// Same for the boundary arc swept counter-clockwise from theta_start to
// theta_end (0 < span <= 2*pi). Arc endpoints are boundary_point values.
// Throws EmptyArc when theta_end <= theta_start.
LengthInterval arc_length_bounds(const NormSpec& measure, const NormSpec& body,
                                 double theta_start, double theta_end, double tol);

}  // namespace varpi
