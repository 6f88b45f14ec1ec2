#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "semitoric/geometry.hpp"

namespace semitoric {

struct VerticalLine {
    Rational lambda;
};

/// One single-line cut: identity left of x = lambda, vertical shear by n to
/// the right. Continuous, and independent of where the origin is placed on
/// the line: the closed form is y + n * max(0, x - lambda).
struct CutShear {
    Rational lambda;
    std::int64_t n = 0;
};

/// Raised when a piecewise-affine image of a convex polygon fails convexity
/// validation. Cut transforms keep a polygon convex only when its boundary
/// carries a large enough corner on each active cut line.
struct NonconvexImageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Composition of a global vertical shear with single-line cuts, applied
/// shear first. The whole family is additive in (shear, cut multiplicities),
/// so composition order of the cuts does not matter and inverses negate the
/// data. Fixes every x-coordinate.
class PiecewiseAffineMap {
public:
    PiecewiseAffineMap() = default;

    /// Cut lambdas must be strictly increasing; throws std::invalid_argument.
    PiecewiseAffineMap(std::int64_t shear_k, std::vector<CutShear> cuts);

    std::int64_t shear_k() const { return shear_k_; }
    const std::vector<CutShear>& cuts() const { return cuts_; }

    PiecewiseAffineMap inverse() const;

    friend bool operator==(const PiecewiseAffineMap& a, const PiecewiseAffineMap& b);

private:
    std::int64_t shear_k_ = 0;
    std::vector<CutShear> cuts_;
};

/// (x, y) -> (x, kx + y), the shear matrix action.
Point2 apply_Tk(std::int64_t k, const Point2& p);

/// Single cut at x = lambda: p unchanged when p.x <= lambda, else
/// (x, y + n * (x - lambda)).
Point2 apply_cut(const Rational& lambda, std::int64_t n, const Point2& p);

/// Closed form y -> y + kx + sum_i n_i * max(0, x - lambda_i).
Point2 apply_map(const PiecewiseAffineMap& m, const Point2& p);

/// Image polygon: vertex images plus chord endpoints on every active cut
/// line crossing the interior, re-canonicalized. Throws NonconvexImageError
/// when the image is not convex.
ConvexPolygon apply_map_polygon(const PiecewiseAffineMap& m, const ConvexPolygon& p);

}  // namespace semitoric
