#include "semitoric/affine_maps.hpp"

#include <algorithm>

namespace semitoric {

PiecewiseAffineMap::PiecewiseAffineMap(std::int64_t shear_k, std::vector<CutShear> cuts)
    : shear_k_(shear_k), cuts_(std::move(cuts)) {
    for (std::size_t i = 1; i < cuts_.size(); ++i) {
        if (!(cuts_[i - 1].lambda < cuts_[i].lambda))
            throw std::invalid_argument("cut lines must have strictly increasing x");
    }
}

PiecewiseAffineMap PiecewiseAffineMap::inverse() const {
    std::vector<CutShear> neg = cuts_;
    for (CutShear& c : neg) c.n = -c.n;
    return PiecewiseAffineMap(-shear_k_, std::move(neg));
}

bool operator==(const PiecewiseAffineMap& a, const PiecewiseAffineMap& b) {
    if (a.shear_k_ != b.shear_k_ || a.cuts_.size() != b.cuts_.size()) return false;
    for (std::size_t i = 0; i < a.cuts_.size(); ++i) {
        if (a.cuts_[i].lambda != b.cuts_[i].lambda || a.cuts_[i].n != b.cuts_[i].n) return false;
    }
    return true;
}

Point2 apply_Tk(std::int64_t k, const Point2& p) {
    return Point2{p.x, Rational(k) * p.x + p.y};
}

Point2 apply_cut(const Rational& lambda, std::int64_t n, const Point2& p) {
    if (p.x <= lambda) return p;
    return Point2{p.x, p.y + Rational(n) * (p.x - lambda)};
}

Point2 apply_map(const PiecewiseAffineMap& m, const Point2& p) {
    Rational y = p.y + Rational(m.shear_k()) * p.x;
    for (const CutShear& c : m.cuts()) {
        if (p.x > c.lambda) y += Rational(c.n) * (p.x - c.lambda);
    }
    return Point2{p.x, y};
}

ConvexPolygon apply_map_polygon(const PiecewiseAffineMap& m, const ConvexPolygon& p) {
    // Insert the chord endpoints on every edge an active cut line crosses,
    // so the image cycle already contains its potential new vertices.
    std::vector<Point2> cycle;
    const std::vector<Point2>& verts = p.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Point2& a = verts[i];
        const Point2& b = verts[(i + 1) % verts.size()];
        cycle.push_back(a);
        if (a.x == b.x) continue;

        std::vector<Rational> hits;
        for (const CutShear& c : m.cuts()) {
            if (c.n == 0) continue;
            const Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
            if (lo < c.lambda && c.lambda < hi) hits.push_back(c.lambda);
        }
        std::sort(hits.begin(), hits.end());
        if (a.x > b.x) std::reverse(hits.begin(), hits.end());
        for (const Rational& lambda : hits)
            cycle.push_back(Point2{lambda, a.y + (b.y - a.y) * (lambda - a.x) / (b.x - a.x)});
    }

    for (Point2& q : cycle) q = apply_map(m, q);
    try {
        return ConvexPolygon(std::move(cycle));
    } catch (const std::invalid_argument& e) {
        throw NonconvexImageError(std::string("piecewise-affine image is not a convex polygon: ") +
                                  e.what());
    }
}

}  // namespace semitoric
