#include "semitoric/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace semitoric {

bool lex_less(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

MatGL2Z::MatGL2Z(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    const std::int64_t det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1)
        throw std::invalid_argument("integer matrix must have determinant +1 or -1");
}

Point2 MatGL2Z::apply(const Point2& p) const {
    return Point2{Rational(a_) * p.x + Rational(b_) * p.y,
                  Rational(c_) * p.x + Rational(d_) * p.y};
}

MatGL2Z MatGL2Z::inverse() const {
    const std::int64_t s = det();
    return MatGL2Z(s * d_, -s * b_, -s * c_, s * a_);
}

MatGL2Z operator*(const MatGL2Z& m, const MatGL2Z& n) {
    return MatGL2Z(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                   m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
}

Rational turn_cross(const Point2& a, const Point2& b, const Point2& c) {
    const Rational ux = b.x - a.x, uy = b.y - a.y;
    const Rational vx = c.x - b.x, vy = c.y - b.y;
    return ux * vy - uy * vx;
}

namespace {

Rational dot_forward(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
}

Rational signed_area_twice(const std::vector<Point2>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

// Edge directions of a CCW convex cycle sweep the circle exactly once.
// half() splits directions at the positive x-axis: angle in [0,pi) -> 0,
// [pi,2pi) -> 1. The sweep wraps once iff exactly one cyclic 1->0 step.
int half_plane(const Rational& dx, const Rational& dy) {
    if (dy.sign() > 0) return 0;
    if (dy.sign() < 0) return 1;
    return dx.sign() > 0 ? 0 : 1;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) {
    std::vector<Point2> v = std::move(vertices);

    // Cyclic removal of consecutive duplicates.
    std::vector<Point2> dedup;
    for (const Point2& p : v) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    v = std::move(dedup);

    if (v.size() < 3) throw std::invalid_argument("polygon needs at least 3 distinct vertices");

    const Rational area2 = signed_area_twice(v);
    if (area2.is_zero()) throw std::invalid_argument("polygon has zero area");
    if (area2.sign() < 0) std::reverse(v.begin(), v.end());

    // Drop redundant collinear vertices; a collinear reversal is a spike.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[(i + v.size() - 1) % v.size()];
            const Point2& b = v[i];
            const Point2& c = v[(i + 1) % v.size()];
            if (turn_cross(a, b, c).is_zero()) {
                if (dot_forward(a, b, c).sign() <= 0)
                    throw std::invalid_argument("polygon boundary reverses direction at (" +
                                                b.x.str() + ", " + b.y.str() + ")");
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                if (v.size() < 3)
                    throw std::invalid_argument("polygon needs at least 3 distinct vertices");
                changed = true;
                break;
            }
        }
    }

    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[(i + v.size() - 1) % v.size()];
        const Point2& b = v[i];
        const Point2& c = v[(i + 1) % v.size()];
        if (turn_cross(a, b, c).sign() <= 0)
            throw std::invalid_argument("polygon is not convex at vertex (" + b.x.str() + ", " +
                                        b.y.str() + ")");
    }

    int wraps = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const Point2& c = v[(i + 2) % v.size()];
        const int h0 = half_plane(b.x - a.x, b.y - a.y);
        const int h1 = half_plane(c.x - b.x, c.y - b.y);
        if (h0 == 1 && h1 == 0) ++wraps;
    }
    if (wraps != 1)
        throw std::invalid_argument("polygon vertex order is not a single convex cycle");

    const auto lo = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), lo, v.end());
    vertices_ = std::move(v);
}

std::pair<Rational, Rational> ConvexPolygon::x_range() const {
    Rational lo = vertices_.front().x, hi = lo;
    for (const Point2& p : vertices_) {
        if (p.x < lo) lo = p.x;
        if (p.x > hi) hi = p.x;
    }
    return {lo, hi};
}

std::optional<std::pair<Rational, Rational>> ConvexPolygon::vertical_chord(
    const Rational& lambda) const {
    const auto [lo, hi] = x_range();
    if (lambda < lo || lambda > hi) return std::nullopt;

    std::optional<Rational> ymin, ymax;
    auto note = [&](const Rational& y) {
        if (!ymin || y < *ymin) ymin = y;
        if (!ymax || y > *ymax) ymax = y;
    };
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % vertices_.size()];
        if (a.x == lambda) note(a.y);
        if (a.x == b.x) continue;
        const Rational t0 = std::min(a.x, b.x), t1 = std::max(a.x, b.x);
        if (t0 < lambda && lambda < t1)
            note(a.y + (b.y - a.y) * (lambda - a.x) / (b.x - a.x));
    }
    return std::make_pair(*ymin, *ymax);
}

Rational ConvexPolygon::lower_boundary(const Rational& x) const {
    const auto chord = vertical_chord(x);
    if (!chord) throw std::domain_error("abscissa " + x.str() + " outside polygon x-range");
    return chord->first;
}

Rational ConvexPolygon::upper_boundary(const Rational& x) const {
    const auto chord = vertical_chord(x);
    if (!chord) throw std::domain_error("abscissa " + x.str() + " outside polygon x-range");
    return chord->second;
}

ConvexPolygon ConvexPolygon::translated(const Rational& dx, const Rational& dy) const {
    std::vector<Point2> v = vertices_;
    for (Point2& p : v) {
        p.x += dx;
        p.y += dy;
    }
    return ConvexPolygon(std::move(v));
}

}  // namespace semitoric
