#pragma once

#include <cstdint>
#include <vector>

#include "semitoric/affine_maps.hpp"
#include "semitoric/geometry.hpp"

namespace semitoric {

/// Vertical cut line x = lambda with a direction sign (+1 up, -1 down).
struct Cut {
    Rational lambda;
    int epsilon = +1;

    friend bool operator==(const Cut& a, const Cut& b) {
        return a.lambda == b.lambda && a.epsilon == b.epsilon;
    }
};

/// Convex rational polygon with cut lines strictly between its leftmost and
/// rightmost x, each carrying a direction sign. The number of cuts is the
/// complexity.
class WeightedPolygon {
public:
    WeightedPolygon(ConvexPolygon delta, std::vector<Cut> cuts);

    const ConvexPolygon& delta() const { return delta_; }
    const std::vector<Cut>& cuts() const { return cuts_; }
    std::size_t complexity() const { return cuts_.size(); }

    std::vector<Rational> lambdas() const;
    std::vector<int> signs() const;

    friend bool operator==(const WeightedPolygon& a, const WeightedPolygon& b) {
        return a.delta_ == b.delta_ && a.cuts_ == b.cuts_;
    }
    friend bool operator!=(const WeightedPolygon& a, const WeightedPolygon& b) {
        return !(a == b);
    }

private:
    ConvexPolygon delta_;
    std::vector<Cut> cuts_;
};

/// Weighted polygon carrying one integer twisting index per cut.
class PonderedWeightedPolygon {
public:
    PonderedWeightedPolygon(WeightedPolygon base, std::vector<std::int64_t> indices);

    const WeightedPolygon& base() const { return base_; }
    const std::vector<std::int64_t>& indices() const { return indices_; }

    friend bool operator==(const PonderedWeightedPolygon& a, const PonderedWeightedPolygon& b) {
        return a.base_ == b.base_ && a.indices_ == b.indices_;
    }
    friend bool operator!=(const PonderedWeightedPolygon& a, const PonderedWeightedPolygon& b) {
        return !(a == b);
    }

private:
    WeightedPolygon base_;
    std::vector<std::int64_t> indices_;
};

/// Weighted polygon carrying one marked point per cut. Each mark sits
/// exactly on its cut line, strictly between the lower and upper boundary.
class MarkedWeightedPolygon {
public:
    MarkedWeightedPolygon(WeightedPolygon base, std::vector<Point2> marks);

    const WeightedPolygon& base() const { return base_; }
    const std::vector<Point2>& marks() const { return marks_; }

    friend bool operator==(const MarkedWeightedPolygon& a, const MarkedWeightedPolygon& b) {
        return a.base_ == b.base_ && a.marks_ == b.marks_;
    }

private:
    WeightedPolygon base_;
    std::vector<Point2> marks_;
};

/// Element of the product of the sign-flip group {-1,+1}^s with the shear
/// group {T^k}. The group is abelian.
struct GroupElement {
    std::vector<int> sign_flips;  // entries in {-1,+1}
    std::int64_t shear_k = 0;

    static GroupElement identity(std::size_t complexity) {
        return GroupElement{std::vector<int>(complexity, +1), 0};
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.sign_flips == b.sign_flips && a.shear_k == b.shear_k;
    }
};

/// Group law: componentwise sign product, shears add.
GroupElement compose(const GroupElement& second, const GroupElement& first);

/// The point map carried by a group element acting on w: the shear T^k
/// followed by the cut t^{u_i} at each lambda_i, with u_i = (old sign -
/// new sign)/2, so that flipping a sign re-cuts the polygon in the opposite
/// direction.
PiecewiseAffineMap action_point_map(const GroupElement& g, const WeightedPolygon& w);

/// Group action on weighted polygons: polygon moves by the point map, signs
/// multiply, cut lambdas are fixed. Throws std::domain_error on a length
/// mismatch, NonconvexImageError when the moved polygon leaves the convex
/// class.
WeightedPolygon act(const GroupElement& g, const WeightedPolygon& w);

/// As act; every twisting index additionally increases by the shear.
PonderedWeightedPolygon act_pondered(const GroupElement& g, const PonderedWeightedPolygon& p);

/// As act; marks move by the same point map as the polygon.
MarkedWeightedPolygon act_marked(const GroupElement& g, const MarkedWeightedPolygon& w);

/// Vertical distance from mark i (0-based) to the lower boundary of the
/// polygon on its cut line. Strictly positive.
Rational height(const MarkedWeightedPolygon& w, std::size_t i);

}  // namespace semitoric
