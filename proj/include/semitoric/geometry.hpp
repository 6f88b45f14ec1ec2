#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semitoric/rational.hpp"

namespace semitoric {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

/// Lexicographic order by (x, y); used for canonical vertex rotation.
bool lex_less(const Point2& a, const Point2& b);

/// 2x2 integer matrix with determinant +1 or -1.
class MatGL2Z {
public:
    MatGL2Z(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    /// The vertical shear [[1,0],[k,1]]; fixes every x-coordinate.
    static MatGL2Z shear(std::int64_t k) { return MatGL2Z(1, 0, k, 1); }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    std::int64_t det() const { return a_ * d_ - b_ * c_; }

    Point2 apply(const Point2& p) const;
    MatGL2Z inverse() const;
    friend MatGL2Z operator*(const MatGL2Z& m, const MatGL2Z& n);
    friend bool operator==(const MatGL2Z& m, const MatGL2Z& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }

private:
    std::int64_t a_, b_, c_, d_;
};

/// Strictly convex rational polygon, stored counterclockwise with the
/// lexicographically smallest vertex first.
///
/// Construction canonicalizes the input: consecutive duplicates and
/// redundant collinear vertices are dropped, a clockwise list is reversed,
/// and the result is rotated to the canonical start. Input that is not a
/// single convex cycle (self-intersecting order, boundary spikes, interior
/// points, fewer than 3 distinct vertices, zero area) is rejected with
/// std::invalid_argument.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// Exact min and max of the vertex x-coordinates.
    std::pair<Rational, Rational> x_range() const;

    /// The closed interval {y : (lambda, y) in polygon}, or nullopt when the
    /// vertical line x = lambda misses the polygon.
    std::optional<std::pair<Rational, Rational>> vertical_chord(const Rational& lambda) const;

    /// y of the lower boundary at abscissa x. Throws std::domain_error when
    /// x lies outside [xmin, xmax]. upper_boundary is the analogous max.
    Rational lower_boundary(const Rational& x) const;
    Rational upper_boundary(const Rational& x) const;

    ConvexPolygon translated(const Rational& dx, const Rational& dy) const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const ConvexPolygon& a, const ConvexPolygon& b) { return !(a == b); }

private:
    std::vector<Point2> vertices_;
};

/// Canonical-form equality of polygons (vertex cycles agree after the
/// constructor's normalization).
inline bool polygons_equal(const ConvexPolygon& a, const ConvexPolygon& b) { return a == b; }

/// Cross product (b - a) x (c - b); positive on a strict left turn.
Rational turn_cross(const Point2& a, const Point2& b, const Point2& c);

}  // namespace semitoric
