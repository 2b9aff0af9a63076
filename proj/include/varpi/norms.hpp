#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "varpi/geom.hpp"

namespace varpi {

class NormSpec;

// Norm given by its canonical polygonal unit ball.
struct PolygonalNorm {
    SymmetricPolygon ball;
};

// l^p norm, p in [1, inf]. p is stored as +infinity for the max norm; finite
// values above 1e6 are collapsed to it at construction.
struct LpNorm {
    double p;
};

// Push-forward of another norm: ||v|| = ||map^-1 v||_inner.
struct LinearImageNorm {
    LinearMap2 map;
    std::shared_ptr<const NormSpec> inner;
};

// Tagged description of a norm on the plane. Values are immutable and cheap
// to copy; safe to share across threads.
class NormSpec {
public:
    using Form = std::variant<PolygonalNorm, LpNorm, LinearImageNorm>;

    static NormSpec polygonal(SymmetricPolygon ball);
    // Throws DomainError unless p >= 1 (NaN included); p > 1e6 becomes inf.
    static NormSpec lp(double p);
    static NormSpec lp_infinity();
    // Raw wrapper; nested linear images are flattened by composing maps
    // (nesting depth stays <= 16 by construction). Throws SingularMap.
    static NormSpec linear_image(const LinearMap2& map, NormSpec inner);

    const Form& form() const { return form_; }
    const PolygonalNorm* as_polygonal() const { return std::get_if<PolygonalNorm>(&form_); }
    const LpNorm* as_lp() const { return std::get_if<LpNorm>(&form_); }
    const LinearImageNorm* as_linear_image() const { return std::get_if<LinearImageNorm>(&form_); }

private:
    explicit NormSpec(Form form) : form_(std::move(form)) {}
    Form form_;
};

// Minkowski gauge ||v||_X; 0 iff v = 0.
double gauge(const NormSpec& norm, Point2 v);

// Induced metric d_X(p, q) = gauge(p - q).
double distance(const NormSpec& norm, Point2 p, Point2 q);

// The boundary point of the unit ball in direction theta:
// r * (cos theta, sin theta) with gauge 1.
Point2 boundary_point(const NormSpec& norm, double theta);

// A point of the unit ball maximizing <d, w>. Polygonal balls return the
// maximizing vertex (lowest canonical index on ties); l^1 and l^inf convert
// to their polygonal balls; smooth l^p uses the closed-form maximizer.
// Throws ZeroDirection.
Point2 support_point(const NormSpec& norm, Point2 d);

// Push-forward norm: ||v||_{T X} = ||T^-1 v||_X. Polygonal balls are mapped
// vertexwise and re-canonicalized; other forms wrap as a linear image with
// composed maps. Throws SingularMap.
NormSpec pushforward(const LinearMap2& map, const NormSpec& norm);

// The canonical polygonal unit ball when the norm has one (polygonal, l^1,
// l^inf, or a linear image of those); nullopt for smooth norms.
std::optional<SymmetricPolygon> polygonal_form(const NormSpec& norm);

// An outward normal (not normalized) of the unit sphere at boundary point b.
// For polygonal balls this is the containing edge's normal; for smooth l^p
// the closed-form gradient; linear images map normals by inverse-transpose.
Point2 boundary_normal(const NormSpec& norm, Point2 b);

}  // namespace varpi
