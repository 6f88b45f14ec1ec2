#include "semitoric/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace semitoric {

namespace {

bool same_cut_lines(const WeightedPolygon& a, const WeightedPolygon& b) {
    return a.complexity() == b.complexity() && a.lambdas() == b.lambdas();
}

// Solves y2(x) - y1(x) = k*x + c on the lower boundaries left of the first
// cut. In exact_group mode c is required to vanish.
struct ShearSolution {
    std::int64_t k = 0;
    Rational offset;
};

std::optional<ShearSolution> solve_boundary_shear(const WeightedPolygon& w1,
                                                  const WeightedPolygon& w2, CompareMode mode) {
    const auto [xmin1, xmax1] = w1.delta().x_range();
    const auto [xmin2, xmax2] = w2.delta().x_range();
    if (xmin1 != xmin2 || xmax1 != xmax2) return std::nullopt;

    const Rational xa = xmin1;
    const Rational xb = w1.complexity() > 0 ? (xmin1 + w1.cuts().front().lambda) / Rational(2)
                                            : (xmin1 + xmax1) / Rational(2);
    const Rational da = w2.delta().lower_boundary(xa) - w1.delta().lower_boundary(xa);
    const Rational db = w2.delta().lower_boundary(xb) - w1.delta().lower_boundary(xb);

    const Rational kq = (db - da) / (xb - xa);
    if (!kq.is_integer()) return std::nullopt;
    const Rational offset = da - kq * xa;
    if (mode == CompareMode::exact_group && !offset.is_zero()) return std::nullopt;

    ShearSolution sol;
    try {
        sol.k = kq.to_int64();
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
    sol.offset = offset;
    return sol;
}

WeightedPolygon translated_vertically(const WeightedPolygon& w, const Rational& dy) {
    return WeightedPolygon(w.delta().translated(Rational(0), dy), w.cuts());
}

// Verified orbit search over all sign-flip vectors, smallest lexicographic
// candidate first (+1 before -1 in every slot).
std::optional<OrbitWitness> search_orbit(const WeightedPolygon& w1, const WeightedPolygon& w2,
                                         CompareMode mode) {
    if (!same_cut_lines(w1, w2)) return std::nullopt;
    const std::size_t s = w1.complexity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        GroupElement g = GroupElement::identity(s);
        for (std::size_t i = 0; i < s; ++i) {
            if (mask & (std::uint64_t{1} << (s - 1 - i))) g.sign_flips[i] = -1;
        }
        WeightedPolygon flipped = w1;
        try {
            flipped = act(GroupElement{g.sign_flips, 0}, w1);
        } catch (const NonconvexImageError&) {
            continue;
        }
        const auto sol = solve_boundary_shear(flipped, w2, mode);
        if (!sol) continue;
        g.shear_k = sol->k;

        try {
            WeightedPolygon image = act(g, w1);
            if (mode == CompareMode::modulo_vertical_translation && !sol->offset.is_zero())
                image = translated_vertically(image, sol->offset);
            if (image == w2) return OrbitWitness{g, true, sol->offset};
        } catch (const NonconvexImageError&) {
        }
    }
    return std::nullopt;
}

std::string describe_element(const GroupElement& g) {
    std::ostringstream os;
    os << "flips [";
    for (std::size_t i = 0; i < g.sign_flips.size(); ++i) {
        if (i) os << ", ";
        os << (g.sign_flips[i] > 0 ? "+1" : "-1");
    }
    os << "], shear " << g.shear_k;
    return os.str();
}

}  // namespace

std::optional<std::int64_t> solve_shear(const WeightedPolygon& w1, const WeightedPolygon& w2,
                                        const std::vector<int>& target_signs) {
    if (!same_cut_lines(w1, w2))
        throw std::domain_error("weighted polygons have different cut lines");
    if (target_signs.size() != w1.complexity())
        throw std::domain_error("target sign vector length does not match complexity");

    GroupElement g = GroupElement::identity(w1.complexity());
    for (std::size_t i = 0; i < target_signs.size(); ++i)
        g.sign_flips[i] = w1.cuts()[i].epsilon * target_signs[i];

    WeightedPolygon flipped = w1;
    try {
        flipped = act(GroupElement{g.sign_flips, 0}, w1);
    } catch (const NonconvexImageError&) {
        return std::nullopt;
    }
    const auto sol = solve_boundary_shear(flipped, w2, CompareMode::exact_group);
    if (!sol) return std::nullopt;
    g.shear_k = sol->k;
    try {
        if (act(g, w1).delta() != w2.delta()) return std::nullopt;
    } catch (const NonconvexImageError&) {
        return std::nullopt;
    }
    return sol->k;
}

std::optional<OrbitWitness> orbits_equal(const WeightedPolygon& w1, const WeightedPolygon& w2,
                                         CompareMode mode) {
    return search_orbit(w1, w2, mode);
}

std::optional<OrbitWitness> pondered_orbits_equal(const PonderedWeightedPolygon& p1,
                                                  const PonderedWeightedPolygon& p2,
                                                  CompareMode mode) {
    if (p1.base().complexity() != p2.base().complexity()) return std::nullopt;
    // The shear adds the same k to every index, so index differences must
    // already agree; the required k is then pinned by the indices.
    std::optional<std::int64_t> required;
    for (std::size_t i = 0; i < p1.indices().size(); ++i) {
        const std::int64_t d = p2.indices()[i] - p1.indices()[i];
        if (required && *required != d) return std::nullopt;
        required = d;
    }

    const auto witness = search_orbit(p1.base(), p2.base(), mode);
    if (!witness) return std::nullopt;
    if (required && witness->element.shear_k != *required) return std::nullopt;
    return witness;
}

GroupElement canonicalizing_element(const WeightedPolygon& w) {
    // Flip every sign to +1, then normalize the shear from the slope of the
    // first lower-boundary edge of the flipped polygon.
    GroupElement flip{w.signs(), 0};
    const WeightedPolygon flipped = act(flip, w);

    const auto& v = flipped.delta().vertices();
    const Rational slope = (v[1].y - v[0].y) / (v[1].x - v[0].x);
    flip.shear_k = -slope.floor_int64();
    return flip;
}

WeightedPolygon canonical_form(const WeightedPolygon& w) {
    return act(canonicalizing_element(w), w);
}

InvariantList::InvariantList(std::vector<FormalSeries2> taylor, WeightedPolygon polygon_orbit,
                             std::vector<Rational> heights, PonderedWeightedPolygon twisting_orbit)
    : taylor_(std::move(taylor)), polygon_orbit_(std::move(polygon_orbit)),
      heights_(std::move(heights)), twisting_orbit_(std::move(twisting_orbit)) {
    const std::size_t mf = polygon_orbit_.complexity();
    if (taylor_.size() != mf)
        throw std::invalid_argument("one Taylor series required per focus-focus value");
    if (heights_.size() != mf)
        throw std::invalid_argument("one height required per focus-focus value");
    if (twisting_orbit_.base().lambdas() != polygon_orbit_.lambdas())
        throw std::invalid_argument(
            "twisting-index representative must carry the same cut lines as the polygon "
            "representative");
    for (std::size_t i = 0; i < mf; ++i) {
        const Rational lambda = polygon_orbit_.cuts()[i].lambda;
        const Rational len = polygon_orbit_.delta().upper_boundary(lambda) -
                             polygon_orbit_.delta().lower_boundary(lambda);
        if (!(Rational(0) < heights_[i] && heights_[i] < len))
            throw std::invalid_argument(
                "height " + std::to_string(i + 1) +
                " must lie strictly between 0 and the chord length on its cut line");
    }
}

CompareReport invariant_lists_equal(const InvariantList& a, const InvariantList& b,
                                    int truncation_degree, double taylor_tolerance,
                                    CompareMode mode) {
    if (truncation_degree < 1) throw std::domain_error("truncation degree must be at least 1");

    CompareReport report;
    const bool counts_equal = a.m_f() == b.m_f();
    {
        std::ostringstream os;
        if (counts_equal)
            os << "m_f = " << a.m_f();
        else
            os << "m_f " << a.m_f() << " vs " << b.m_f();
        report.items.push_back({"(i)", "number of focus-focus values", counts_equal, os.str()});
    }

    if (!counts_equal) {
        report.items.push_back(
            {"(ii)", "Taylor series tuple", false, "not comparable: m_f differs"});
        report.items.push_back({"(iii)", "polygon orbit", false, "not comparable: m_f differs"});
        report.items.push_back({"(iv)", "heights tuple", false, "not comparable: m_f differs"});
        report.items.push_back(
            {"(v)", "twisting-index orbit", false, "not comparable: m_f differs"});
    } else {
        bool taylor_ok = true;
        double worst = 0.0;
        for (std::size_t i = 0; i < a.taylor().size(); ++i) {
            for (const auto& [p, q] : series_monomials(truncation_degree)) {
                // series_equal validates the degree bound; reuse its check
                // once per pair, then track the worst coefficient gap.
                worst = std::max(worst,
                                 std::abs(a.taylor()[i].coeff(p, q) - b.taylor()[i].coeff(p, q)));
            }
            if (!series_equal(a.taylor()[i], b.taylor()[i], truncation_degree, taylor_tolerance))
                taylor_ok = false;
        }
        {
            std::ostringstream os;
            os << "max coefficient gap " << worst << " at degree " << truncation_degree;
            report.items.push_back({"(ii)", "Taylor series tuple", taylor_ok, os.str()});
        }

        const auto polygon_witness = orbits_equal(a.polygon_orbit(), b.polygon_orbit(), mode);
        report.items.push_back({"(iii)", "polygon orbit", polygon_witness.has_value(),
                                polygon_witness
                                    ? "witness: " + describe_element(polygon_witness->element)
                                    : "no group element maps one representative onto the other"});

        bool heights_ok = a.heights() == b.heights();
        std::string hdetail = "exact match";
        if (!heights_ok) {
            for (std::size_t i = 0; i < a.heights().size(); ++i) {
                if (a.heights()[i] != b.heights()[i]) {
                    hdetail = "height " + std::to_string(i + 1) + ": " + a.heights()[i].str() +
                              " vs " + b.heights()[i].str();
                    break;
                }
            }
        }
        report.items.push_back({"(iv)", "heights tuple", heights_ok, hdetail});

        const auto twist_witness = pondered_orbits_equal(a.twisting_orbit(), b.twisting_orbit(),
                                                         mode);
        report.items.push_back({"(v)", "twisting-index orbit", twist_witness.has_value(),
                                twist_witness
                                    ? "witness: " + describe_element(twist_witness->element)
                                    : "no group element carries one pondered representative "
                                      "onto the other"});
    }

    report.equal = true;
    for (const ItemReport& item : report.items) {
        if (!item.equal) {
            report.equal = false;
            if (report.first_failure.empty()) report.first_failure = item.item;
        }
    }
    return report;
}

}  // namespace semitoric
