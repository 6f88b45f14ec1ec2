#include "semitoric/weighted_polygon.hpp"

#include <stdexcept>
#include <string>

namespace semitoric {

WeightedPolygon::WeightedPolygon(ConvexPolygon delta, std::vector<Cut> cuts)
    : delta_(std::move(delta)), cuts_(std::move(cuts)) {
    const auto [xmin, xmax] = delta_.x_range();
    for (std::size_t j = 0; j < cuts_.size(); ++j) {
        if (cuts_[j].epsilon != 1 && cuts_[j].epsilon != -1)
            throw std::invalid_argument("cut sign must be +1 or -1");
        if (j > 0 && !(cuts_[j - 1].lambda < cuts_[j].lambda))
            throw std::invalid_argument("cut lines must have strictly increasing x");
        if (!(xmin < cuts_[j].lambda && cuts_[j].lambda < xmax))
            throw std::invalid_argument(
                "cut line x = " + cuts_[j].lambda.str() +
                " must lie strictly between the polygon's leftmost and rightmost x");
    }
}

std::vector<Rational> WeightedPolygon::lambdas() const {
    std::vector<Rational> out;
    out.reserve(cuts_.size());
    for (const Cut& c : cuts_) out.push_back(c.lambda);
    return out;
}

std::vector<int> WeightedPolygon::signs() const {
    std::vector<int> out;
    out.reserve(cuts_.size());
    for (const Cut& c : cuts_) out.push_back(c.epsilon);
    return out;
}

PonderedWeightedPolygon::PonderedWeightedPolygon(WeightedPolygon base,
                                                 std::vector<std::int64_t> indices)
    : base_(std::move(base)), indices_(std::move(indices)) {
    if (indices_.size() != base_.complexity())
        throw std::invalid_argument("one twisting index required per cut");
}

MarkedWeightedPolygon::MarkedWeightedPolygon(WeightedPolygon base, std::vector<Point2> marks)
    : base_(std::move(base)), marks_(std::move(marks)) {
    if (marks_.size() != base_.complexity())
        throw std::invalid_argument("one marked point required per cut");
    for (std::size_t i = 0; i < marks_.size(); ++i) {
        const Cut& cut = base_.cuts()[i];
        if (marks_[i].x != cut.lambda)
            throw std::invalid_argument("marked point " + std::to_string(i + 1) +
                                        " must lie on its cut line x = " + cut.lambda.str());
        const Rational lo = base_.delta().lower_boundary(cut.lambda);
        const Rational hi = base_.delta().upper_boundary(cut.lambda);
        if (!(lo < marks_[i].y && marks_[i].y < hi))
            throw std::invalid_argument("marked point " + std::to_string(i + 1) +
                                        " must lie strictly inside the polygon");
    }
}

GroupElement compose(const GroupElement& second, const GroupElement& first) {
    if (second.sign_flips.size() != first.sign_flips.size())
        throw std::domain_error("group elements act on different complexities");
    GroupElement out = second;
    for (std::size_t i = 0; i < out.sign_flips.size(); ++i)
        out.sign_flips[i] *= first.sign_flips[i];
    out.shear_k += first.shear_k;
    return out;
}

PiecewiseAffineMap action_point_map(const GroupElement& g, const WeightedPolygon& w) {
    if (g.sign_flips.size() != w.complexity())
        throw std::domain_error("group element complexity " +
                                std::to_string(g.sign_flips.size()) +
                                " does not match polygon complexity " +
                                std::to_string(w.complexity()));
    std::vector<CutShear> cuts;
    cuts.reserve(w.complexity());
    for (std::size_t i = 0; i < w.complexity(); ++i) {
        const int eps = w.cuts()[i].epsilon;
        const int u = eps * (1 - g.sign_flips[i]) / 2;
        cuts.push_back(CutShear{w.cuts()[i].lambda, u});
    }
    return PiecewiseAffineMap(g.shear_k, std::move(cuts));
}

WeightedPolygon act(const GroupElement& g, const WeightedPolygon& w) {
    const PiecewiseAffineMap map = action_point_map(g, w);
    std::vector<Cut> cuts = w.cuts();
    for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i].epsilon *= g.sign_flips[i];
    return WeightedPolygon(apply_map_polygon(map, w.delta()), std::move(cuts));
}

PonderedWeightedPolygon act_pondered(const GroupElement& g, const PonderedWeightedPolygon& p) {
    std::vector<std::int64_t> indices = p.indices();
    for (std::int64_t& k : indices) k += g.shear_k;
    return PonderedWeightedPolygon(act(g, p.base()), std::move(indices));
}

MarkedWeightedPolygon act_marked(const GroupElement& g, const MarkedWeightedPolygon& w) {
    const PiecewiseAffineMap map = action_point_map(g, w.base());
    std::vector<Point2> marks = w.marks();
    for (Point2& m : marks) m = apply_map(map, m);
    return MarkedWeightedPolygon(act(g, w.base()), std::move(marks));
}

Rational height(const MarkedWeightedPolygon& w, std::size_t i) {
    if (i >= w.base().complexity())
        throw std::domain_error("cut index " + std::to_string(i) + " out of range");
    const Cut& cut = w.base().cuts()[i];
    return w.marks()[i].y - w.base().delta().lower_boundary(cut.lambda);
}

}  // namespace semitoric
